#include "weilpoly/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "roots.hpp"

namespace weilpoly {

using detail::MpComplex;
using detail::MpReal;

namespace {

BigInt pow2(unsigned long e)
{
    BigInt out;
    mpz_ui_pow_ui(out.get_mpz_t(), 2, e);
    return out;
}

ScaledSurd midpoint(ScaledSurd const & a, ScaledSurd const & b)
{
    unsigned long s = std::max(a.shift, b.shift);
    BigInt const & d = a.num.radicand();
    QuadSurd sum = a.num * QuadSurd::integer(d, pow2(s - a.shift))
                   + b.num * QuadSurd::integer(d, pow2(s - b.shift));
    return { sum, s + 1 };
}

int compare(ScaledSurd const & a, ScaledSurd const & b)
{
    unsigned long s = std::max(a.shift, b.shift);
    BigInt const & d = a.num.radicand();
    QuadSurd diff = a.num * QuadSurd::integer(d, pow2(s - a.shift))
                    - b.num * QuadSurd::integer(d, pow2(s - b.shift));
    return diff.sign();
}

int sign_at_infinity(IntPoly const & p, bool positive)
{
    int s = sgn(p.leading());
    if (!positive && (p.degree() & 1))
        s = -s;
    return s;
}

// Divides by the positive content, keeping the sign of every coefficient.
IntPoly divide_content(IntPoly const & p)
{
    BigInt c = p.content();
    if (c <= 1)
        return p;
    std::vector<BigInt> v(p.coeffs().begin(), p.coeffs().end());
    for (auto & x : v)
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    return IntPoly(std::move(v));
}

int count_changes(std::vector<int> const & signs)
{
    int changes = 0, last = 0;
    for (int s : signs) {
        if (s == 0)
            continue;
        if (last != 0 && s != last)
            ++changes;
        last = s;
    }
    return changes;
}

} // namespace

RealWeilPoly real_weil_transform(QPolynomial const & f)
{
    unsigned g = f.g();
    BigInt const & q = f.q();
    std::vector<IntPoly> p(g + 1);
    p[0] = IntPoly::constant(2);
    if (g >= 1)
        p[1] = IntPoly::monomial(1, 1);
    IntPoly const x = IntPoly::monomial(1, 1);
    for (unsigned k = 2; k <= g; ++k)
        p[k] = x * p[k - 1] - p[k - 2] * q;

    IntPoly h = p[g] + IntPoly::constant(f.a(g));
    for (unsigned j = 1; j < g; ++j)
        h += p[g - j] * f.a(j);
    return { h, q };
}

RealWeilPoly real_weil_transform(IntPoly const & f, BigInt const & q)
{
    if (f.degree() < 2 || f.degree() % 2 != 0)
        throw NotSymmetric("degree " + std::to_string(f.degree()) + " is not a positive even number");
    try {
        return real_weil_transform(
                check_q_symmetry(f, static_cast<unsigned>(f.degree() / 2), q));
    } catch (ShapeMismatch const & e) {
        throw NotSymmetric(e.what());
    }
}

IntPoly reconstruct(RealWeilPoly const & w)
{
    if (w.h.is_zero())
        return {};
    auto g = static_cast<std::size_t>(w.h.degree());
    IntPoly const t2q = IntPoly::monomial(1, 2) + IntPoly::constant(w.q);
    IntPoly out;
    IntPoly t2q_pow = IntPoly::constant(1);
    for (std::size_t k = 0; k <= g; ++k) {
        // h_k (t^2 + q)^k t^(g-k)
        IntPoly term = t2q_pow * IntPoly::monomial(w.h.coeff(k), g - k);
        out += term;
        t2q_pow = t2q_pow * t2q;
    }
    return out;
}

double ScaledSurd::approx() const
{
    return std::ldexp(num.approx(), -static_cast<int>(shift));
}

std::string ScaledSurd::to_string() const
{
    if (shift == 0)
        return num.to_string();
    return "(" + num.to_string() + ")/2^" + std::to_string(shift);
}

int sign_at(IntPoly const & h, ScaledSurd const & x)
{
    if (h.is_zero())
        return 0;
    BigInt const & d = x.num.radicand();
    auto c = h.coeffs();
    auto n = c.size() - 1;
    // sum h_i x^i y^(n-i) with y = 2^shift (homogeneous Horner)
    BigInt y = pow2(x.shift);
    BigInt ypow = 1;
    QuadSurd acc = QuadSurd::integer(d, c[n]);
    for (std::size_t i = n; i-- > 0;) {
        ypow *= y;
        acc = acc * x.num + QuadSurd::integer(d, c[i] * ypow);
    }
    return acc.sign();
}

SturmChain::SturmChain(IntPoly const & h)
{
    if (h.is_zero())
        throw ZeroPolynomial("Sturm chain of the zero polynomial");
    chain_.push_back(divide_content(h));
    if (h.degree() == 0)
        return;
    chain_.push_back(divide_content(h.derivative()));
    while (true) {
        IntPoly const & a = chain_[chain_.size() - 2];
        IntPoly const & b = chain_.back();
        IntPoly r = pseudo_remainder(a, b);
        if (r.is_zero())
            break;
        // prem = lc(b)^(delta+1) * rem; the chain needs -rem up to a
        // positive factor.
        int delta = a.degree() - b.degree();
        bool flip = sgn(b.leading()) < 0 && ((delta + 1) & 1);
        chain_.push_back(divide_content(flip ? r : -r));
    }
    if (chain_.back().degree() > 0)
        throw NotSquarefree("Sturm chain input has a repeated root");
}

int SturmChain::sign_changes(ScaledSurd const & x) const
{
    std::vector<int> signs;
    signs.reserve(chain_.size());
    for (auto const & p : chain_)
        signs.push_back(sign_at(p, x));
    return count_changes(signs);
}

int SturmChain::sign_changes_at_infinity(bool positive) const
{
    std::vector<int> signs;
    signs.reserve(chain_.size());
    for (auto const & p : chain_)
        signs.push_back(sign_at_infinity(p, positive));
    return count_changes(signs);
}

unsigned SturmChain::count(ScaledSurd const & lo, ScaledSurd const & hi) const
{
    if (compare(lo, hi) >= 0)
        throw std::domain_error("Sturm count: empty interval");
    if (sign_at(chain_.front(), lo) == 0 || sign_at(chain_.front(), hi) == 0)
        throw EndpointRoot("polynomial vanishes at an interval endpoint");
    int v = sign_changes(lo) - sign_changes(hi);
    return static_cast<unsigned>(v);
}

unsigned SturmChain::count_real() const
{
    return static_cast<unsigned>(sign_changes_at_infinity(false)
                                 - sign_changes_at_infinity(true));
}

unsigned sturm_count_in_interval(IntPoly const & h, QuadSurd const & lo,
                                 QuadSurd const & hi)
{
    return SturmChain(h).count({ lo, 0 }, { hi, 0 });
}

std::string OffCircleWitness::describe() const
{
    std::ostringstream os;
    if (kind == Kind::nonreal_roots) {
        os << nonreal_count << " nonreal root(s) of h; each gives a pair of roots of f off the circle";
    } else {
        os << "real root of h in (" << lo->to_string() << ", " << hi->to_string()
           << "] ~ " << hi->approx()
           << " outside [-2sqrt(q), 2sqrt(q)]; f has two real roots of modulus != sqrt(q)";
    }
    return os.str();
}

ModulusCheck exact_modulus_check(QPolynomial const & f)
{
    ModulusCheck out;
    out.h = real_weil_transform(f).h;
    BigInt const & q = f.q();
    IntPoly rest = radical(out.h);
    out.h_radical = rest;

    QuadSurd const bound(q, 0, 2);   // 2 sqrt(q)
    if (eval(rest, bound).sign() == 0) {
        if (is_perfect_square(q)) {
            rest = exact_divide(rest, IntPoly::constant(-bound.rational()) + IntPoly { 0, 1 });
            out.endpoint_roots += 1;
        } else {
            // The conjugate -2 sqrt(q) is a root as well.
            rest = exact_divide(rest, IntPoly::monomial(1, 2) - IntPoly::constant(4 * q));
            out.endpoint_roots += 2;
        }
    }
    if (is_perfect_square(q) && eval(rest, -bound).sign() == 0) {
        rest = exact_divide(rest, IntPoly::constant(bound.rational()) + IntPoly { 0, 1 });
        out.endpoint_roots += 1;
    }

    out.real_roots = out.endpoint_roots;
    out.inside_roots = out.endpoint_roots;
    if (rest.degree() <= 0) {
        out.on_circle = true;
        return out;
    }
    SturmChain chain(rest);
    unsigned real = chain.count_real();
    ScaledSurd lo { -bound, 0 }, hi { bound, 0 };
    unsigned inside = chain.count(lo, hi);
    out.real_roots += real;
    out.inside_roots += inside;
    auto deg = static_cast<unsigned>(rest.degree());
    out.on_circle = inside == deg;
    if (out.on_circle)
        return out;

    OffCircleWitness w;
    if (real > inside) {
        w.kind = OffCircleWitness::Kind::real_root_outside;
        // Cauchy bound: every root has modulus < 1 + max |h_i / h_n|.
        BigInt cauchy = 0;
        for (auto const & c : rest.coeffs())
            cauchy = std::max(cauchy, BigInt(abs(c)));
        cauchy = cauchy / abs(rest.leading()) + 2;
        ScaledSurd a { hi }, b { QuadSurd::integer(q, cauchy), 0 };
        if (chain.count(a, b) == 0) {
            a = { QuadSurd::integer(q, -cauchy), 0 };
            b = lo;
        }
        // Bisect until the interval isolates a single root, then a few more
        // steps to make the enclosure readable.
        int extra = 16;
        while (true) {
            ScaledSurd m = midpoint(a, b);
            if (sign_at(rest, m) == 0) {
                a = b = m;
                break;
            }
            unsigned left = chain.count(a, m);
            if (left > 0)
                b = m;
            else
                a = m;
            if (chain.count(a, b) == 1 && extra-- <= 0)
                break;
        }
        w.lo = a;
        w.hi = b;
    } else {
        w.kind = OffCircleWitness::Kind::nonreal_roots;
        w.nonreal_count = deg - real;
    }
    out.witness = w;
    return out;
}

unsigned default_precision(IntPoly const & f)
{
    std::size_t bits = 0;
    for (auto const & c : f.coeffs())
        bits = std::max(bits, mpz_sizeinbase(c.get_mpz_t(), 2));
    return static_cast<unsigned>(std::max<std::size_t>(128, 2 * bits + 64));
}

namespace detail {

AberthSolver::AberthSolver(IntPoly const & f, unsigned precision_bits)
    : prec_(static_cast<mpfr_prec_t>(precision_bits)), bits_(precision_bits)
{
    if (f.degree() < 1)
        throw std::domain_error("numeric_roots: polynomial must be nonconstant");
    if (precision_bits < 64)
        throw std::domain_error("numeric_roots: precision must be at least 64 bits");
    for (auto const & c : f.coeffs()) {
        a_.emplace_back(prec_, c);
        abs_a_.emplace_back(abs(a_.back()));
    }
    radius_ = std::pow(std::abs(f.coeff(0).get_d() / f.leading().get_d()),
                       1.0 / static_cast<double>(f.degree()));
    if (!(radius_ > 0) || !std::isfinite(radius_))
        radius_ = 1.0;
}

void AberthSolver::evaluate(MpComplex const & z, MpComplex & p, MpComplex & dp) const
{
    std::size_t n = degree();
    p = MpComplex(a_[n], MpReal(prec_));
    dp = MpComplex(prec_);
    for (std::size_t i = n; i-- > 0;) {
        dp = dp * z + p;
        p = p * z + MpComplex(a_[i], MpReal(prec_));
    }
}

MpReal AberthSolver::magnitude(MpReal const & r) const
{
    std::size_t n = degree();
    MpReal acc = abs_a_[n];
    for (std::size_t i = n; i-- > 0;)
        acc = acc * r + abs_a_[i];
    return acc;
}

bool AberthSolver::run()
{
    std::size_t const n = degree();
    // Initial guesses on the circle of radius |a_0/a_n|^(1/n), rotated off
    // the real axis.
    z_.clear();
    z_.reserve(n);
    MpReal pi(prec_);
    mpfr_const_pi(pi.get(), MPFR_RNDN);
    for (std::size_t k = 0; k < n; ++k) {
        MpReal angle = pi * MpReal(prec_, 2.0 * static_cast<double>(k) / static_cast<double>(n))
                       + MpReal(prec_, 0.4);
        MpReal s(prec_), c(prec_);
        mpfr_sin_cos(s.get(), c.get(), angle.get(), MPFR_RNDN);
        MpReal rr(prec_, radius_);
        z_.emplace_back(rr * c, rr * s);
    }

    MpReal const one(prec_, 1L);
    MpReal const tight = MpReal::pow2(prec_, -static_cast<long>(bits_) + 8);
    std::vector<bool> done(n, false);
    MpComplex p(prec_), dp(prec_);
    for (unsigned sweep = 1; sweep <= kAberthSweepCap; ++sweep) {
        sweeps_ = sweep;
        bool all_done = true;
        std::vector<MpComplex> next = z_;
        for (std::size_t k = 0; k < n; ++k) {
            if (done[k])
                continue;
            evaluate(z_[k], p, dp);
            MpReal zabs = z_[k].abs();
            if (p.abs() <= tight * magnitude(zabs)) {
                done[k] = true;
                continue;
            }
            MpComplex w = p / dp;
            MpComplex s(prec_);
            for (std::size_t j = 0; j < n; ++j) {
                if (j != k)
                    s = s + MpComplex(one, MpReal(prec_)) / (z_[k] - z_[j]);
            }
            MpComplex corr = w / (MpComplex(one, MpReal(prec_)) - w * s);
            next[k] = z_[k] - corr;
            MpReal scale = zabs < one ? one : zabs;
            if (corr.abs() <= tight * scale)
                done[k] = true;
            else
                all_done = false;
        }
        z_ = std::move(next);
        if (all_done)
            break;
    }
    return certified();
}

bool AberthSolver::certified() const
{
    MpReal const certify = MpReal::pow2(prec_, -static_cast<long>(bits_ / 2));
    MpComplex p(prec_), dp(prec_);
    for (auto const & z : z_) {
        evaluate(z, p, dp);
        if (!(p.abs() <= certify * magnitude(z.abs())))
            return false;
    }
    return true;
}

} // namespace detail

RootReport numeric_roots(IntPoly const & f, unsigned precision_bits,
                         std::optional<BigInt> const & q)
{
    detail::AberthSolver solver(f, precision_bits);
    bool certified = solver.run();
    auto const prec = solver.prec();

    RootReport report;
    report.precision_bits = precision_bits;
    report.sweeps = solver.sweeps();
    MpReal const one(prec, 1L);
    MpReal const imag_tol = MpReal::pow2(prec, -static_cast<long>(precision_bits / 3));
    std::optional<MpReal> sqrt_q;
    if (q)
        sqrt_q = sqrt(MpReal(prec, *q));
    MpReal worst(prec);
    for (auto const & z : solver.roots()) {
        MpReal zabs = z.abs();
        report.roots.emplace_back(z.re.to_double(), z.im.to_double());
        MpReal scale = zabs < one ? one : zabs;
        if (abs(z.im) <= imag_tol * scale)
            ++report.real_root_count;
        if (sqrt_q) {
            MpReal dev = abs(zabs - *sqrt_q) / *sqrt_q;
            report.deviations.push_back(dev.to_double());
            if (worst < dev)
                worst = dev;
        }
    }
    report.max_modulus_deviation = worst.to_double();
    report.converged = certified;
    if (!certified)
        throw NoConvergence("Aberth iteration did not reach the residual certificate after "
                                    + std::to_string(report.sweeps) + " sweeps",
                            report);
    return report;
}

namespace {

// Next k-subset of {0..n-1} in lexicographic order.
bool next_combination(std::vector<std::size_t> & idx, std::size_t n)
{
    std::size_t k = idx.size();
    for (std::size_t i = k; i-- > 0;) {
        if (idx[i] < n - k + i) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j)
                idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

bool near_integer(MpComplex const & c, MpReal const & tol, BigInt & out)
{
    MpReal one(c.re.prec(), 1L);
    MpReal re_abs = abs(c.re);
    MpReal scale = re_abs < one ? one : re_abs;
    if (!(abs(c.im) <= tol * scale))
        return false;
    MpReal rounded(c.re.prec());
    mpfr_round(rounded.get(), c.re.get());
    if (!(abs(c.re - rounded) <= tol * scale))
        return false;
    mpz_t z;
    mpz_init(z);
    mpfr_get_z(z, rounded.get(), MPFR_RNDN);
    out = BigInt(z);
    mpz_clear(z);
    return true;
}

std::uint64_t binomial_sum_capped(std::size_t n, std::uint64_t cap)
{
    std::uint64_t total = 0, c = 1;
    for (std::size_t k = 1; k <= n / 2; ++k) {
        c = c * (n - k + 1) / k;
        total += c;
        if (total > cap)
            return cap + 1;
    }
    return total;
}

} // namespace

FactorSearch factor_search_by_roots(IntPoly const & f, unsigned precision_bits,
                                    std::uint64_t subset_cap)
{
    FactorSearch out;
    if (f.degree() < 1)
        throw std::domain_error("factor_search_by_roots: polynomial must be nonconstant");
    IntPoly prim = f.primitive_part();
    if (prim.degree() == 1) {
        out.decided = true;
        out.irreducible = true;
        return out;
    }
    IntPoly repeated = gcd(prim, prim.derivative());
    if (repeated.degree() > 0) {
        out.decided = true;
        out.factor = repeated;
        return out;
    }
    auto const n = static_cast<std::size_t>(prim.degree());
    if (binomial_sum_capped(n, subset_cap) > subset_cap)
        return out;

    unsigned bits = std::max(precision_bits ? precision_bits : default_precision(prim), 256u);
    detail::AberthSolver solver(prim, bits);
    if (!solver.run())
        return out;
    auto const prec = solver.prec();
    auto const & roots = solver.roots();
    MpReal const tol = MpReal::pow2(prec, -static_cast<long>(bits / 4));
    MpComplex const lead(MpReal(prec, prim.leading()), MpReal(prec));

    // lc(f) times a monic factor over Q has integer coefficients, so each
    // subset of roots is screened through its constant term first.
    for (std::size_t k = 1; k <= n / 2; ++k) {
        std::vector<std::size_t> idx(k);
        for (std::size_t i = 0; i < k; ++i)
            idx[i] = i;
        do {
            ++out.subsets_checked;
            MpComplex c0 = lead;
            for (std::size_t i : idx)
                c0 = c0 * (MpComplex(MpReal(prec), MpReal(prec)) - roots[i]);
            BigInt rounded;
            if (!near_integer(c0, tol, rounded) || sgn(rounded) == 0)
                continue;
            // Full product, low to high.
            std::vector<MpComplex> poly { lead };
            for (std::size_t i : idx) {
                std::vector<MpComplex> next(poly.size() + 1, MpComplex(prec));
                for (std::size_t j = 0; j < poly.size(); ++j) {
                    next[j + 1] = next[j + 1] + poly[j];
                    next[j] = next[j] - poly[j] * roots[i];
                }
                poly = std::move(next);
            }
            std::vector<BigInt> coeffs(poly.size());
            bool integral = true;
            for (std::size_t j = 0; j < poly.size() && integral; ++j)
                integral = near_integer(poly[j], tol, coeffs[j]);
            if (!integral)
                continue;
            IntPoly candidate = IntPoly(std::move(coeffs)).primitive_part();
            if (candidate.degree() >= 1 && pseudo_remainder(prim, candidate).is_zero()) {
                out.decided = true;
                out.factor = std::move(candidate);
                return out;
            }
        } while (next_combination(idx, n));
    }
    out.decided = true;
    out.irreducible = true;
    return out;
}

} // namespace weilpoly
