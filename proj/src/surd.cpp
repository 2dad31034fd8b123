#include "weilpoly/surd.hpp"

#include <cmath>

namespace weilpoly {

namespace {

void require_same(QuadSurd const & x, QuadSurd const & y)
{
    if (x.radicand() != y.radicand())
        throw RadicandMismatch("surds over sqrt(" + x.radicand().get_str()
                               + ") and sqrt(" + y.radicand().get_str() + ")");
}

BigInt power(BigInt const & base, unsigned long e)
{
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

} // namespace

QuadSurd::QuadSurd(BigInt radicand, BigInt a, BigInt b)
    : d_(std::move(radicand)), a_(std::move(a)), b_(std::move(b))
{
    if (sgn(d_) < 0)
        throw std::domain_error("QuadSurd: negative radicand");
    square_ = is_perfect_square(d_);
    canonicalize();
}

void QuadSurd::canonicalize()
{
    if (square_ && sgn(b_) != 0) {
        a_ += b_ * integer_sqrt(d_);
        b_ = 0;
    }
}

int QuadSurd::sign() const
{
    int sa = sgn(a_), sb = sgn(b_);
    if (sb == 0)
        return sa;
    if (sa == 0)
        return sb;
    if (sa == sb)
        return sa;
    // Opposite signs: compare a^2 against b^2 D.
    BigInt lhs = a_ * a_;
    BigInt rhs = b_ * b_ * d_;
    int c = cmp(lhs, rhs);
    return c == 0 ? 0 : (c > 0 ? sa : sb);
}

double QuadSurd::approx() const
{
    return a_.get_d() + b_.get_d() * std::sqrt(d_.get_d());
}

std::string QuadSurd::to_string() const
{
    if (sgn(b_) == 0)
        return a_.get_str();
    std::string out = sgn(a_) == 0 ? "" : a_.get_str();
    if (sgn(b_) < 0)
        out += "-";
    else if (!out.empty())
        out += "+";
    BigInt mag = ::abs(b_);
    if (mag != 1)
        out += mag.get_str() + "*";
    return out + "sqrt(" + d_.get_str() + ")";
}

QuadSurd operator+(QuadSurd const & x, QuadSurd const & y)
{
    require_same(x, y);
    QuadSurd out = x;
    out.a_ += y.a_;
    out.b_ += y.b_;
    return out;
}

QuadSurd operator-(QuadSurd const & x, QuadSurd const & y)
{
    require_same(x, y);
    QuadSurd out = x;
    out.a_ -= y.a_;
    out.b_ -= y.b_;
    return out;
}

QuadSurd operator*(QuadSurd const & x, QuadSurd const & y)
{
    require_same(x, y);
    QuadSurd out = x;
    out.a_ = x.a_ * y.a_ + x.b_ * y.b_ * x.d_;
    out.b_ = x.a_ * y.b_ + x.b_ * y.a_;
    return out;
}

QuadSurd operator-(QuadSurd const & x)
{
    QuadSurd out = x;
    out.a_ = -out.a_;
    out.b_ = -out.b_;
    return out;
}

bool operator==(QuadSurd const & x, QuadSurd const & y)
{
    return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
}

std::strong_ordering operator<=>(QuadSurd const & x, QuadSurd const & y)
{
    int s = (x - y).sign();
    return s < 0 ? std::strong_ordering::less
                 : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

QuadSurd surd_add(QuadSurd const & x, QuadSurd const & y) { return x + y; }
QuadSurd surd_mul(QuadSurd const & x, QuadSurd const & y) { return x * y; }
QuadSurd surd_neg(QuadSurd const & x) { return -x; }
int surd_sign(QuadSurd const & x) { return x.sign(); }

QuadSurd eval(IntPoly const & h, QuadSurd const & x)
{
    QuadSurd acc = QuadSurd::integer(x.radicand(), 0);
    auto c = h.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        acc = acc * x + QuadSurd::integer(x.radicand(), *it);
    return acc;
}

bool m_within_bound(BigInt const & q, unsigned long dpow, BigInt const & r,
                    BigInt const & m)
{
    if (sgn(m) < 0)
        return false;
    BigInt big_q = power(q, dpow);
    BigInt a = 2 * big_q - 1 - m * r;
    return sgn(a) >= 0 && 4 * big_q <= a * a;
}

BigInt m_max(BigInt const & q, unsigned long dpow, BigInt const & r)
{
    if (q < 4 || dpow < 1 || r < 2)
        throw std::domain_error("m_max: requires q >= 4, dpow >= 1, r >= 2");
    BigInt big_q = power(q, dpow);
    // ceil(2 sqrt(Q)) = ceil(sqrt(4Q))
    BigInt four_q = 4 * big_q;
    BigInt s = integer_sqrt(four_q);
    if (s * s < four_q)
        s += 1;
    BigInt numer = 2 * big_q - 1 - s;
    BigInt m;
    mpz_fdiv_q(m.get_mpz_t(), numer.get_mpz_t(), r.get_mpz_t());
    if (sgn(m) < 0)
        m = 0;
    return m;
}

LLReport ll_unit_circle_check(std::vector<QuadSurd> const & coeffs,
                              QuadSurd const & delta)
{
    if (coeffs.size() < 3)
        throw HypothesisViolated("LL check needs degree N >= 2");
    std::size_t n = coeffs.size() - 1;
    for (std::size_t j = 0; j <= n / 2; ++j) {
        if (!(coeffs[j] == coeffs[n - j]))
            throw NotReciprocal("coefficient " + std::to_string(j)
                                + " differs from coefficient " + std::to_string(n - j));
    }
    QuadSurd const & top = coeffs[n];
    if (top.sign() == 0)
        throw HypothesisViolated("leading coefficient c_N is zero");
    if ((top * delta).sign() < 0)
        throw HypothesisViolated("c_N * delta < 0");
    if (top.abs() < delta.abs())
        throw HypothesisViolated("|delta| > |c_N|");

    QuadSurd slack = (top + delta).abs();
    for (std::size_t j = 1; j < n; ++j)
        slack = slack - (coeffs[j] + delta - top).abs();
    LLReport out;
    out.degree = static_cast<unsigned>(n);
    out.delta = delta;
    out.slack = slack;
    out.passed = slack.sign() >= 0;
    return out;
}

std::vector<QuadSurd> scaled_coefficients(QPolynomial const & f)
{
    BigInt const & q = f.q();
    std::vector<QuadSurd> out;
    auto c = f.poly().coeffs();
    out.reserve(c.size());
    BigInt qpow = 1;   // q^(floor(j/2))
    for (std::size_t j = 0; j < c.size(); ++j) {
        if (j % 2 == 0)
            out.emplace_back(q, c[j] * qpow, 0);
        else {
            out.emplace_back(q, 0, c[j] * qpow);
            qpow *= q;
        }
    }
    return out;
}

LLReport ll_check_default(QPolynomial const & f)
{
    auto coeffs = scaled_coefficients(f);
    QuadSurd delta = coeffs.back();
    return ll_unit_circle_check(coeffs, delta);
}

} // namespace weilpoly
