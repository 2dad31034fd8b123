// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <mpfr.h>

#include "support.hpp"
#include "weilpoly/engine.hpp"
#include "weilpoly/report_io.hpp"

using namespace weilpoly;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = true;
    std::string detail;
    void fail(std::string const & why)
    {
        if (pass)
            detail = why;
        pass = false;
    }
};

double seconds_since(Clock::time_point t)
{
    return std::chrono::duration<double>(Clock::now() - t).count();
}

SearchRange sweep_range()
{
    SearchRange range;
    range.rhos = { 5, 7 };
    range.b_min = 1;
    range.b_max = 2;
    range.q_max = 64;
    range.m_policy = MPolicy::endpoints;
    return range;
}

std::vector<ParamTuple> sweep_tuples()
{
    std::vector<ParamTuple> out;
    for (auto const & t : enumerate_candidates(sweep_range()))
        if (all_passed(validate_tuple(t)))
            out.push_back(t);
    return out;
}

Outcome counterexample_real_roots()
{
    Outcome o;
    auto t0 = Clock::now();
    IntPoly f { 8, 4, 2, 5, 1, 1, 1 };
    auto rep = classify(f, 2);
    if (rep.is_q_polynomial)
        o.fail("classified as a q-polynomial");
    if (rep.modulus_witness.find("real root") == std::string::npos)
        o.fail("no real-root witness");
    RootReport nr = numeric_roots(f, 128, BigInt(2));
    int on = 0, off_real = 0;
    for (std::size_t i = 0; i < nr.roots.size(); ++i) {
        double dev = nr.deviations[i];
        if (dev < 1e-9)
            ++on;
        else if (dev > 0.1 && std::abs(nr.roots[i].imag()) < 1e-20)
            ++off_real;
    }
    if (on != 4 || off_real != 2)
        o.fail("on-circle " + std::to_string(on) + ", real off-circle " + std::to_string(off_real));
    double s = seconds_since(t0);
    if (s >= 1.0)
        o.fail("took " + std::to_string(s) + " s");
    if (o.pass)
        o.detail = "4 roots on |z| = sqrt(2), 2 real roots off it, " + std::to_string(s) + " s";
    return o;
}

Outcome counterexample_not_ordinary()
{
    Outcome o;
    auto t0 = Clock::now();
    auto rep = classify(IntPoly { 64, 16, 2, 2, 1 }, 8);
    if (!rep.is_q_polynomial || rep.method.rfind("exact", 0) != 0)
        o.fail("not accepted as a q-polynomial by the exact method");
    if (!rep.simple)
        o.fail("no irreducibility certificate");
    if (rep.ordinary)
        o.fail("ordinary certificate passed");
    bool modular = find_irreducibility_prime(rep.poly, 25).has_value();
    double s = seconds_since(t0);
    if (s >= 1.0)
        o.fail("took " + std::to_string(s) + " s");
    if (o.pass)
        o.detail = "q-polynomial, irreducible (" + rep.simple_certificate
                   + (modular ? "" : "; no prime among the first 25 certifies it")
                   + "), gcd(2, 2) = 2, "
                   + std::to_string(s) + " s";
    return o;
}

Outcome theorem_sweep(std::vector<ParamTuple> const & tuples)
{
    Outcome o;
    auto t0 = Clock::now();
    for (auto const & t : tuples) {
        QPolynomial f = construct(t);
        std::uint64_t index = t.rho_power() * t.rho;
        std::string tag = "rho=" + std::to_string(t.rho) + " b=" + std::to_string(t.b)
                          + " q=" + t.q().get_str() + " m=" + t.m.get_str() + ": ";
        if (!(reduce_mod(f.poly(), t.r) == reduce_mod(cyclotomic(index), t.r)))
            o.fail(tag + "not congruent to the cyclotomic polynomial");
        if (!exact_modulus_check(f).on_circle)
            o.fail(tag + "exact modulus check failed");
        LLReport ll = ll_check_default(f);
        if (!ll.passed || ll.slack.sign() < 0)
            o.fail(tag + "LL slack " + ll.slack.to_string());
        BigInt ag = f.a(f.g()), d;
        BigInt p = static_cast<unsigned long>(t.p);
        mpz_gcd(d.get_mpz_t(), ag.get_mpz_t(), p.get_mpz_t());
        if (d != 1)
            o.fail(tag + "gcd(a_g, p) != 1");
        if (!is_irreducible_mod(reduce_mod(f.poly(), t.r)))
            o.fail(tag + "reducible mod r");
    }
    double s = seconds_since(t0);
    if (s >= 120)
        o.fail("took " + std::to_string(s) + " s");
    if (o.pass)
        o.detail = std::to_string(tuples.size()) + " tuples, 0 violations, " + std::to_string(s) + " s";
    return o;
}

Outcome g2_absolute(std::vector<ParamTuple> const & tuples)
{
    Outcome o;
    std::size_t n = 0;
    for (auto const & t : tuples) {
        if (t.rho != 5 || t.b != 1)
            continue;
        ++n;
        QPolynomial f = construct(t);
        if (f.a(1) != 1)
            o.fail("a_1 != 1 at q=" + t.q().get_str());
        if (!absolutely_simple_g2(f))
            o.fail("g = 2 rule fails at q=" + t.q().get_str() + " m=" + t.m.get_str());
    }
    if (n == 0)
        o.fail("no rho = 5, b = 1 tuples");
    if (o.pass)
        o.detail = std::to_string(n) + " tuples, all absolutely simple";
    return o;
}

Outcome power_witness(std::vector<ParamTuple> const & tuples)
{
    Outcome o;
    std::size_t n = 0;
    double worst = 0;
    for (auto const & t : tuples) {
        if (t.b != 2)
            continue;
        ++n;
        auto t0 = Clock::now();
        QPolynomial f = construct(t);
        IntPoly mp = minimal_poly_of_power(f.poly(), t.rho);
        worst = std::max(worst, seconds_since(t0));
        if (static_cast<std::uint64_t>(mp.degree()) != t.rho - 1)
            o.fail("degree " + std::to_string(mp.degree()) + " at rho=" + std::to_string(t.rho)
                   + " q=" + t.q().get_str());
        if (mp.degree() >= f.poly().degree())
            o.fail("no drop in degree");
    }
    ParamTuple spot { 5, 2, 2, 5, 1, 0 };
    IntPoly mp = minimal_poly_of_power(construct(spot).poly(), 5);
    if (!(mp == IntPoly { 9765625, 3125, 1, 1, 1 }))
        o.fail("spot fixture gave " + mp.to_string());
    auto rep = classify(spot);
    if (rep.absolutely_simple != AbsoluteSimplicity::certified_no || rep.witness_d != 5u)
        o.fail("spot fixture not certified_no with d = 5");
    if (worst >= 30)
        o.fail("slowest tuple " + std::to_string(worst) + " s");
    if (o.pass)
        o.detail = std::to_string(n) + " tuples with degree rho - 1, spot fixture t^4+t^3+t^2+3125t+9765625, slowest "
                   + std::to_string(worst) + " s";
    return o;
}

Outcome cyclotomic_splitting()
{
    Outcome o;
    auto t0 = Clock::now();
    std::size_t n = 0;
    for (std::uint64_t idx : { 5, 7, 25, 49, 121, 125 }) {
        int used = 0;
        for (std::uint64_t r : first_primes(12)) {
            if (idx % r == 0)
                continue;
            if (used++ == 10)
                break;
            ++n;
            // Independent expectation: brute-force order of r mod idx.
            std::uint64_t ord = 1, x = r % idx;
            while (x != 1) {
                x = x * r % idx;
                ++ord;
            }
            DegreeProfile expect { { static_cast<unsigned>(ord),
                                     static_cast<unsigned>(euler_phi(idx) / ord) } };
            if (distinct_degree_profile(reduce_mod(cyclotomic(idx), r)) != expect)
                o.fail("n=" + std::to_string(idx) + " r=" + std::to_string(r));
        }
    }
    double s = seconds_since(t0);
    if (s >= 30)
        o.fail("took " + std::to_string(s) + " s");
    if (o.pass)
        o.detail = std::to_string(n) + " (n, r) pairs, " + std::to_string(s) + " s";
    return o;
}

BigInt float_m_max(BigInt const & Q, BigInt const & r)
{
    mpfr_t x, s;
    mpfr_inits2(200, x, s, static_cast<mpfr_ptr>(nullptr));
    mpfr_set_z(x, Q.get_mpz_t(), MPFR_RNDN);
    mpfr_sqrt(s, x, MPFR_RNDN);
    mpfr_mul_2ui(x, x, 1, MPFR_RNDN);
    mpfr_mul_2ui(s, s, 1, MPFR_RNDN);
    mpfr_sub(x, x, s, MPFR_RNDN);
    mpfr_sub_ui(x, x, 1, MPFR_RNDN);
    mpfr_div_z(x, x, r.get_mpz_t(), MPFR_RNDN);
    mpz_t z;
    mpz_init(z);
    mpfr_get_z(z, x, MPFR_RNDD);
    BigInt out(z);
    mpz_clear(z);
    mpfr_clears(x, s, static_cast<mpfr_ptr>(nullptr));
    return out;
}

Outcome m_bound_exactness()
{
    Outcome o;
    std::mt19937_64 rng(20240601);
    for (int i = 0; i < 100; ++i) {
        BigInt q = static_cast<unsigned long>(4 + rng() % 999997);
        unsigned long d = 1 + rng() % 3;
        BigInt r = static_cast<unsigned long>(2 + rng() % 49);
        BigInt Q;
        mpz_pow_ui(Q.get_mpz_t(), q.get_mpz_t(), d);
        BigInt exact = m_max(q, d, r), approx = float_m_max(Q, r);
        if (exact != approx)
            o.fail("q=" + q.get_str() + " d=" + std::to_string(d) + " r=" + r.get_str() + ": "
                   + exact.get_str() + " vs " + approx.get_str());
    }
    if (o.pass)
        o.detail = "100 random cases, 0 mismatches";
    return o;
}

Outcome oracle_agreement()
{
    Outcome o;
    std::mt19937_64 rng(8128);
    long const qs[] = { 2, 3, 4, 5, 9 };
    int positives = 0;
    for (int i = 0; i < 200; ++i) {
        long q = qs[rng() % 5];
        unsigned g = 1 + static_cast<unsigned>(rng() % 6);
        IntPoly f = testing::random_symmetric(rng, g, 8, q);
        bool exact = exact_modulus_check(check_q_symmetry(f, g, q)).on_circle;
        bool numeric = false;
        try {
            numeric = numeric_roots(f, 128, BigInt(q)).max_modulus_deviation < 1e-9;
        } catch (NoConvergence const & e) {
            o.fail("no convergence on " + f.to_string());
            continue;
        }
        positives += exact;
        if (exact != numeric)
            o.fail("disagreement on " + f.to_string() + " q=" + std::to_string(q));
    }
    if (o.pass)
        o.detail = "200 polynomials (" + std::to_string(positives) + " on the circle), 0 disagreements";
    return o;
}

Outcome determinism()
{
    Outcome o;
    ClassifyOptions opts;
    auto collect = [&](unsigned workers) {
        std::ostringstream os;
        search(sweep_range(), opts, [&](ClassificationReport const & r) { os << to_jsonl_line(r, false) << '\n'; },
               workers);
        return os.str();
    };
    std::string base = collect(1);
    if (base.empty())
        o.fail("empty sweep");
    if (collect(1) != base)
        o.fail("serial reruns differ");
    for (unsigned w : { 2u, 4u, 7u })
        if (collect(w) != base)
            o.fail("workers=" + std::to_string(w) + " differs");
    if (o.pass)
        o.detail = std::to_string(std::count(base.begin(), base.end(), '\n'))
                   + " reports byte-identical across runs and worker counts 1, 2, 4, 7";
    return o;
}

} // namespace

int main()
{
    auto tuples = sweep_tuples();
    std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        { "1 counterexample with two real zeros", counterexample_real_roots },
        { "2 counterexample that is not ordinary", counterexample_not_ordinary },
        { "3 construction theorem sweep", [&] { return theorem_sweep(tuples); } },
        { "4 g = 2 absolute simplicity", [&] { return g2_absolute(tuples); } },
        { "5 b = 2 power witness", [&] { return power_witness(tuples); } },
        { "6 cyclotomic splitting sweep", cyclotomic_splitting },
        { "7 m_max exactness", m_bound_exactness },
        { "8 exact and numeric oracle agreement", oracle_agreement },
        { "9 deterministic sweep output", determinism },
    };
    int failed = 0;
    for (auto const & [name, check] : criteria) {
        Outcome o;
        try {
            o = check();
        } catch (std::exception const & e) {
            o.fail(std::string("exception: ") + e.what());
        }
        std::printf("%s  criterion %s: %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
        std::fflush(stdout);
        failed += !o.pass;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed ? 1 : 0;
}
