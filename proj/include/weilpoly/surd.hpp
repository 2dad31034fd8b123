#pragma once

/* Exact arithmetic in Z[sqrt(D)].
 *
 * Half-integer powers of q live in Z[sqrt(q)], so the scaled polynomial
 * F(t) = f(sqrt(q) t) and the dimension bound on m can be handled without
 * any floating point.
 */

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

#include "weilpoly/intpoly.hpp"
#include "weilpoly/numtheory.hpp"

namespace weilpoly {

class RadicandMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class HypothesisViolated : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class NotReciprocal : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// a + b*sqrt(D), D >= 0.  When D is a perfect square the value is folded
/// into a and b is kept at zero.
class QuadSurd {
public:
    QuadSurd() = default;
    QuadSurd(BigInt radicand, BigInt a, BigInt b = 0);
    static QuadSurd integer(BigInt radicand, BigInt a) { return { std::move(radicand), std::move(a), 0 }; }

    BigInt const & radicand() const { return d_; }
    BigInt const & rational() const { return a_; }
    BigInt const & irrational() const { return b_; }

    int sign() const;
    QuadSurd abs() const { return sign() < 0 ? -*this : *this; }
    /// Value rounded to double, for diagnostics only.
    double approx() const;
    std::string to_string() const;

    friend QuadSurd operator+(QuadSurd const & x, QuadSurd const & y);
    friend QuadSurd operator-(QuadSurd const & x, QuadSurd const & y);
    friend QuadSurd operator*(QuadSurd const & x, QuadSurd const & y);
    friend QuadSurd operator-(QuadSurd const & x);
    friend bool operator==(QuadSurd const & x, QuadSurd const & y);
    friend std::strong_ordering operator<=>(QuadSurd const & x, QuadSurd const & y);

private:
    void canonicalize();
    BigInt d_ = 0;
    BigInt a_ = 0;
    BigInt b_ = 0;
    bool square_ = true;
};

QuadSurd surd_add(QuadSurd const & x, QuadSurd const & y);
QuadSurd surd_mul(QuadSurd const & x, QuadSurd const & y);
QuadSurd surd_neg(QuadSurd const & x);
int surd_sign(QuadSurd const & x);

/// Evaluates an integer polynomial at a surd exactly (Horner).
QuadSurd eval(IntPoly const & h, QuadSurd const & x);

/* Largest m >= 0 with
 *
 *   m r <= 2 q^dpow - 2 sqrt(q^dpow) - 1,
 *
 * decided exactly: m qualifies iff A = 2 q^dpow - 1 - m r >= 0 and
 * 4 q^dpow <= A^2.
 */
BigInt m_max(BigInt const & q, unsigned long dpow, BigInt const & r);

/// The exact predicate behind m_max, for a single candidate m.
bool m_within_bound(BigInt const & q, unsigned long dpow, BigInt const & r,
                    BigInt const & m);

struct LLReport {
    unsigned degree = 0;   ///< N
    QuadSurd delta;
    QuadSurd slack;        ///< S = |c_N + delta| - sum |c_j + delta - c_N|
    bool passed = false;   ///< S >= 0; sufficient for all zeros on |z| = 1
};

/* Unit-circle sufficiency test for a reciprocal polynomial with
 * coefficients c_0..c_N (N >= 2): all zeros are on the unit circle when
 * some delta with c_N delta >= 0 and |c_N| >= |delta| makes
 *
 *   |c_N + delta| >= sum_{j=1}^{N-1} |c_j + delta - c_N|.
 *
 * passed == false is inconclusive.  Throws NotReciprocal, or
 * HypothesisViolated when delta is outside the admissible range.
 */
LLReport ll_unit_circle_check(std::vector<QuadSurd> const & coeffs,
                              QuadSurd const & delta);

/// Coefficients of F(t) = f(sqrt(q) t) in Z[sqrt(q)].
std::vector<QuadSurd> scaled_coefficients(QPolynomial const & f);

/// LL check of f(sqrt(q) t) with delta = c_N = q^g.
LLReport ll_check_default(QPolynomial const & f);

} // namespace weilpoly
