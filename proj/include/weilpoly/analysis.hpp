#pragma once

/* Root-modulus decisions for symmetric polynomials.
 *
 * A monic f of degree 2g with t^(2g) f(q/t) = q^g f(t) can be written as
 * f(t) = t^g h(t + q/t) with deg h = g.  Every root of f has modulus
 * sqrt(q) exactly when every root of h is real and lies in
 * [-2 sqrt(q), 2 sqrt(q)], which a Sturm chain decides with exact sign
 * evaluations at the surd endpoints.
 *
 * numeric_roots is an independent floating-point oracle (Aberth-Ehrlich
 * over MPFR) used to cross-check the exact decision.
 */

#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "weilpoly/intpoly.hpp"
#include "weilpoly/surd.hpp"

namespace weilpoly {

class NotSymmetric : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class EndpointRoot : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct RealWeilPoly {
    IntPoly h;
    BigInt q;
};

/// h with f(t) = t^g h(t + q/t), built from p_0 = 2, p_1 = x,
/// p_k = x p_{k-1} - q p_{k-2}.
RealWeilPoly real_weil_transform(QPolynomial const & f);

/// Same, for a raw polynomial; throws NotSymmetric unless f is monic of
/// even degree with the paired coefficient symmetry.
RealWeilPoly real_weil_transform(IntPoly const & f, BigInt const & q);

/// t^g h(t + q/t), expanded.
IntPoly reconstruct(RealWeilPoly const & w);

/// A point (num)/2^shift with num in Z[sqrt(D)].
struct ScaledSurd {
    QuadSurd num;
    unsigned long shift = 0;

    double approx() const;
    std::string to_string() const;
};

/// Sturm chain of a squarefree integer polynomial, kept primitive.
class SturmChain {
public:
    /// Throws NotSquarefree.
    explicit SturmChain(IntPoly const & h);

    std::vector<IntPoly> const & chain() const { return chain_; }
    int sign_changes(ScaledSurd const & x) const;
    int sign_changes_at_infinity(bool positive) const;

    /// Number of distinct real roots in (lo, hi].  Throws EndpointRoot when
    /// h vanishes at either endpoint.
    unsigned count(ScaledSurd const & lo, ScaledSurd const & hi) const;
    unsigned count_real() const;

private:
    std::vector<IntPoly> chain_;
};

/// Sign of h at num/2^shift.
int sign_at(IntPoly const & h, ScaledSurd const & x);

unsigned sturm_count_in_interval(IntPoly const & h, QuadSurd const & lo,
                                 QuadSurd const & hi);

struct OffCircleWitness {
    enum class Kind { real_root_outside, nonreal_roots };
    Kind kind = Kind::nonreal_roots;
    /// Nonreal roots of the radical of h (real_root_outside: 0).
    unsigned nonreal_count = 0;
    /// Isolating interval (lo, hi] for one real root of the radical of h
    /// outside [-2 sqrt(q), 2 sqrt(q)]; lo == hi for an exact root.
    std::optional<ScaledSurd> lo, hi;
    std::string describe() const;
};

struct ModulusCheck {
    bool on_circle = false;
    IntPoly h;
    IntPoly h_radical;
    /// Roots of the radical at exactly +-2 sqrt(q) (f-roots +-sqrt(q)).
    unsigned endpoint_roots = 0;
    unsigned real_roots = 0;     ///< distinct real roots of the radical
    unsigned inside_roots = 0;   ///< of those, inside or on the band
    std::optional<OffCircleWitness> witness;
};

ModulusCheck exact_modulus_check(QPolynomial const & f);

struct RootReport {
    std::vector<std::complex<double>> roots;
    /// Per-root | |z| - sqrt(q) | / sqrt(q); empty when no q was given.
    std::vector<double> deviations;
    double max_modulus_deviation = 0;
    unsigned precision_bits = 0;
    unsigned sweeps = 0;
    /// Roots with imaginary part below the working-precision threshold.
    unsigned real_root_count = 0;
    bool converged = false;
};

class NoConvergence : public std::runtime_error {
public:
    NoConvergence(std::string const & what, RootReport partial)
        : std::runtime_error(what), partial_(std::move(partial)) {}
    RootReport const & partial() const { return partial_; }

private:
    RootReport partial_;
};

inline constexpr unsigned kAberthSweepCap = 200;

/// max(128, 2 * bitlength(max |coefficient|) + 64)
unsigned default_precision(IntPoly const & f);

/// All complex roots of f by simultaneous Aberth-Ehrlich iteration at the
/// given MPFR precision; throws NoConvergence after kAberthSweepCap sweeps.
RootReport numeric_roots(IntPoly const & f, unsigned precision_bits,
                         std::optional<BigInt> const & q = std::nullopt);

struct FactorSearch {
    /// False when the subset count exceeded the cap or the roots could not
    /// be certified; nothing is claimed then.
    bool decided = false;
    bool irreducible = false;
    /// A nontrivial factor, verified by exact division.
    std::optional<IntPoly> factor;
    std::uint64_t subsets_checked = 0;
};

/// Irreducibility over Q from high-precision roots: every subset of at most
/// half the roots whose scaled product has near-integer coefficients is
/// tried as an exact divisor.  Covers inputs such as biquadratic quartics
/// that split modulo every prime.
FactorSearch factor_search_by_roots(IntPoly const & f, unsigned precision_bits = 0,
                                    std::uint64_t subset_cap = 1u << 20);

} // namespace weilpoly
