#pragma once

/* Dense univariate polynomials with GMP integer coefficients.
 *
 * Coefficient j is the coefficient of t^j.  Every value is kept normalized:
 * no trailing zero coefficients, so the zero polynomial has an empty
 * coefficient vector and degree -1.
 *
 * The text form used on the command line and in golden files is the
 * comma-separated list of decimal coefficients from low to high degree,
 * e.g. "25,5,1,1,1" for t^4+t^3+t^2+5t+25.
 */

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "weilpoly/numtheory.hpp"

namespace weilpoly {

class PolyParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ZeroPolynomial : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class NotSquarefree : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class InexactDivision : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs);
    IntPoly(std::initializer_list<long> coeffs);

    static IntPoly constant(BigInt c);
    static IntPoly monomial(BigInt c, std::size_t degree);
    /// x^k - 1
    static IntPoly x_pow_minus_one(std::size_t k);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }

    /// Coefficient of t^j; zero beyond the degree.
    BigInt coeff(std::size_t j) const;
    BigInt const & leading() const;
    std::span<BigInt const> coeffs() const { return coeffs_; }

    BigInt eval(BigInt const & x) const;
    IntPoly derivative() const;
    /// gcd of the coefficients, nonnegative.
    BigInt content() const;
    /// this / content, with positive leading coefficient.
    IntPoly primitive_part() const;
    /// f(t^k)
    IntPoly compose_power(std::size_t k) const;

    IntPoly & operator+=(IntPoly const & o);
    IntPoly & operator-=(IntPoly const & o);
    IntPoly & operator*=(BigInt const & c);

    friend IntPoly operator+(IntPoly a, IntPoly const & b) { return a += b; }
    friend IntPoly operator-(IntPoly a, IntPoly const & b) { return a -= b; }
    friend IntPoly operator-(IntPoly a);
    friend IntPoly operator*(IntPoly const & a, IntPoly const & b);
    friend IntPoly operator*(IntPoly a, BigInt const & c) { return a *= c; }
    friend IntPoly operator*(BigInt const & c, IntPoly a) { return a *= c; }
    friend bool operator==(IntPoly const & a, IntPoly const & b)
    {
        return a.coeffs_ == b.coeffs_;
    }

    /// Canonical text form, low-to-high decimal coefficients.
    std::string to_string() const;
    /// Human-readable form in the variable t, high degree first.
    std::string pretty(char var = 't') const;
    static IntPoly parse(std::string_view text);

private:
    void normalize();
    std::vector<BigInt> coeffs_;
};

IntPoly scale(IntPoly f, BigInt const & c);
IntPoly pow(IntPoly const & f, unsigned e);

/// Quotient and remainder by a monic divisor; exact over the integers.
struct PolyDivision {
    IntPoly quotient;
    IntPoly remainder;
};
PolyDivision divmod_monic(IntPoly const & a, IntPoly const & monic_divisor);

/// lc(b)^(deg a - deg b + 1) * a  mod  b.
IntPoly pseudo_remainder(IntPoly const & a, IntPoly const & b);

/// a / b when b divides a in Z[t]; throws InexactDivision otherwise.
IntPoly exact_divide(IntPoly const & a, IntPoly const & b);

/// gcd in Z[t], with positive leading coefficient.
IntPoly gcd(IntPoly const & a, IntPoly const & b);

/// Squarefree part a / gcd(a, a'), primitive with positive leading
/// coefficient.  A monic input yields a monic result.
IntPoly radical(IntPoly const & a);

/* Res(f, h) = lc(h)^deg(f) * prod f(beta) over the roots beta of h.
 * Equivalently the classical Sylvester resultant of (h, f), so that
 * Res(t - a, t - b) = b - a and Res(f, h) = (-1)^(deg f deg h) Res(h, f).
 * Throws ZeroPolynomial if either argument is zero.
 */
BigInt resultant(IntPoly const & f, IntPoly const & h);

/// Classical Sylvester resultant lc(a)^deg(b) * prod b(alpha); zero if
/// either argument is zero.
BigInt sylvester_resultant(IntPoly const & a, IntPoly const & b);

/// Cyclotomic polynomial Phi_n.
IntPoly cyclotomic(std::uint64_t n);

/// prod (x - theta^d) over the roots theta of the monic f, computed as
/// Res_y(f(y), x - y^d) by evaluation at deg f integer points and exact
/// interpolation.
IntPoly char_poly_of_power(IntPoly const & f, std::uint64_t d);

/// Radical of char_poly_of_power(f, d).  When f is irreducible over Q this
/// is the minimal polynomial of theta^d for any root theta.
IntPoly minimal_poly_of_power(IntPoly const & f, std::uint64_t d);

/* A monic degree-2g polynomial with the paired coefficient symmetry
 *
 *   coeff(j) = q^(g-j) * coeff(2g-j)   for 0 <= j <= g-1,
 *
 * i.e. t^(2g) f(q/t) = q^g f(t).  Nothing is claimed about the roots.
 */
class QPolynomial {
public:
    IntPoly const & poly() const { return poly_; }
    unsigned g() const { return g_; }
    BigInt const & q() const { return q_; }
    /// a_j = coeff(2g - j) for 1 <= j <= g; a_g is the middle coefficient.
    BigInt a(unsigned j) const { return poly_.coeff(2 * g_ - j); }

    friend QPolynomial check_q_symmetry(IntPoly f, unsigned g, BigInt q);

private:
    QPolynomial(IntPoly f, unsigned g, BigInt q)
        : poly_(std::move(f)), g_(g), q_(std::move(q)) {}
    IntPoly poly_;
    unsigned g_;
    BigInt q_;
};

class ShapeMismatch : public std::domain_error {
public:
    ShapeMismatch(int index, std::string const & what)
        : std::domain_error(what), index_(index) {}
    /// First violated coefficient index (2g for degree or monicity).
    int index() const { return index_; }

private:
    int index_;
};

QPolynomial check_q_symmetry(IntPoly f, unsigned g, BigInt q);

} // namespace weilpoly
