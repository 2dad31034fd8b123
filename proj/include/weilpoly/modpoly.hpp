#pragma once

// Polynomials over a prime field F_r with word-sized r, and the
// distinct-degree factorization profile used for irreducibility
// certificates.

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "weilpoly/intpoly.hpp"

namespace weilpoly {

class ModulusMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class PrimeDividesIndex : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class ModPoly {
public:
    explicit ModPoly(std::uint64_t modulus) : r_(modulus) {}
    ModPoly(std::uint64_t modulus, std::vector<std::uint64_t> coeffs);
    /// Signed coefficients, reduced into [0, r).
    ModPoly(std::uint64_t modulus, std::initializer_list<long> coeffs);

    static ModPoly x(std::uint64_t modulus) { return { modulus, { 0, 1 } }; }

    std::uint64_t modulus() const { return r_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    std::uint64_t coeff(std::size_t j) const { return j < c_.size() ? c_[j] : 0; }
    std::uint64_t leading() const { return c_.empty() ? 0 : c_.back(); }
    std::vector<std::uint64_t> const & coeffs() const { return c_; }

    ModPoly monic() const;
    ModPoly derivative() const;

    friend ModPoly operator+(ModPoly const & a, ModPoly const & b);
    friend ModPoly operator-(ModPoly const & a, ModPoly const & b);
    friend ModPoly operator*(ModPoly const & a, ModPoly const & b);
    friend bool operator==(ModPoly const & a, ModPoly const & b)
    {
        return a.r_ == b.r_ && a.c_ == b.c_;
    }

private:
    void normalize();
    std::uint64_t r_;
    std::vector<std::uint64_t> c_;
};

struct ModDivision {
    ModPoly quotient;
    ModPoly remainder;
};
ModDivision divmod(ModPoly const & a, ModPoly const & b);
ModPoly operator%(ModPoly const & a, ModPoly const & b);

/// Monic gcd; gcd(0, 0) = 0.
ModPoly ff_gcd(ModPoly const & a, ModPoly const & b);

/// base^e mod m by square-and-multiply.
ModPoly powmod(ModPoly const & base, BigInt const & e, ModPoly const & m);

bool is_squarefree(ModPoly const & f);

/// (degree, number of irreducible factors of that degree), increasing in
/// degree.
using DegreeProfile = std::vector<std::pair<unsigned, unsigned>>;

/// Distinct-degree factorization of a squarefree nonconstant polynomial.
/// Made monic first; throws NotSquarefree.
DegreeProfile distinct_degree_profile(ModPoly const & f);

bool is_irreducible_mod(ModPoly const & f);

/// Coefficients of f reduced into [0, r).
ModPoly reduce_mod(IntPoly const & f, std::uint64_t r);

struct GuerrierResult {
    bool holds = false;
    DegreeProfile profile;
    std::uint64_t order = 0;   ///< ord_n(r)
    std::uint64_t phi = 0;     ///< phi(n)
};

/// Checks that Phi_n mod r splits into phi(n)/ord_n(r) distinct irreducible
/// factors of degree ord_n(r).  Throws PrimeDividesIndex when r | n.
GuerrierResult guerrier_check(std::uint64_t n, std::uint64_t r);

} // namespace weilpoly
