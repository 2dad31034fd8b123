#include "weilpoly/engine.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <set>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace weilpoly {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since)
{
    return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

BigInt power(BigInt const & base, unsigned long e)
{
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

BigInt to_big(std::uint64_t v)
{
    BigInt out;
    mpz_import(out.get_mpz_t(), 1, -1, sizeof v, 0, 0, &v);
    return out;
}

std::string str(std::uint64_t v) { return std::to_string(v); }

} // namespace

BigInt ParamTuple::q() const
{
    return power(to_big(p), n);
}

std::uint64_t ParamTuple::rho_power() const
{
    if (b == 0)
        throw std::domain_error("rho^(b-1) needs b >= 1");
    unsigned __int128 acc = 1;
    for (unsigned i = 1; i < b; ++i) {
        acc *= rho;
        if (acc > std::numeric_limits<std::uint64_t>::max())
            throw std::overflow_error("rho^(b-1) exceeds 64 bits");
    }
    return static_cast<std::uint64_t>(acc);
}

std::uint64_t ParamTuple::g() const
{
    if (rho < 2)
        throw std::domain_error("rho must be at least 2");
    unsigned __int128 two_g = static_cast<unsigned __int128>(rho_power()) * (rho - 1);
    if (two_g / 2 > std::numeric_limits<std::uint64_t>::max())
        throw std::overflow_error("g exceeds 64 bits");
    return static_cast<std::uint64_t>(two_g / 2);
}

std::vector<PreconditionCheck> validate_tuple(ParamTuple const & t,
                                              EngineLimits const & limits)
{
    namespace pc = precondition;
    std::vector<PreconditionCheck> out;
    auto add = [&](char const * name, bool ok, std::string detail) {
        out.push_back({ name, ok, std::move(detail) });
    };

    bool rho_ok = t.rho >= 5 && is_prime(t.rho);
    add(pc::rho_prime, rho_ok, "rho = " + str(t.rho) + (rho_ok ? " is a prime >= 5" : " is not a prime >= 5"));
    add(pc::b_positive, t.b >= 1, "b = " + std::to_string(t.b));

    bool r_ok = is_prime(t.r);
    add(pc::r_prime, r_ok, "r = " + str(t.r));
    bool prim = false;
    std::string prim_detail;
    if (t.rho >= 2 && t.rho < (std::uint64_t(1) << 32)) {
        std::uint64_t rho2 = t.rho * t.rho;
        prim = is_primitive_root_mod(static_cast<std::int64_t>(t.r % rho2), rho2);
        prim_detail = str(t.r) + (prim ? " is" : " is not") + " a primitive root mod " + str(rho2);
    } else {
        prim_detail = "rho^2 not representable";
    }
    add(pc::r_primitive_root, prim, prim_detail);

    bool p_ok = is_prime(t.p);
    add(pc::p_prime, p_ok, "p = " + str(t.p));
    add(pc::n_positive, t.n >= 1, "n = " + std::to_string(t.n));

    BigInt q = t.q();
    bool q4 = q >= 4;
    add(pc::q_at_least_4, q4, "q = " + q.get_str());
    bool q1 = false;
    if (t.r >= 1) {
        BigInt rem;
        mpz_fdiv_r(rem.get_mpz_t(), q.get_mpz_t(), to_big(t.r).get_mpz_t());
        q1 = t.r >= 2 && rem == 1;
        add(pc::q_one_mod_r, q1, "q mod r = " + rem.get_str());
    } else {
        add(pc::q_one_mod_r, false, "r = 0");
    }

    // Engine limits also guard the m-range evaluation below.
    bool shape_ok = false;
    std::uint64_t dpow = 0;
    std::string limit_detail;
    try {
        if (t.rho >= 2 && t.b >= 1) {
            dpow = t.rho_power();
            std::uint64_t g = t.g();
            bool deg_ok = g <= limits.max_degree / 2;
            bool q_ok = q <= limits.max_q;
            shape_ok = deg_ok && q_ok;
            limit_detail = "2g = " + str(2 * g) + " (max " + str(limits.max_degree) + "), q = "
                           + q.get_str() + " (max " + limits.max_q.get_str() + ")";
        } else {
            limit_detail = "g undefined";
        }
    } catch (std::exception const & e) {
        limit_detail = e.what();
    }
    add(pc::limits, shape_ok, limit_detail);

    if (shape_ok && q4 && t.r >= 2) {
        BigInt bound = m_max(q, dpow, to_big(t.r));
        bool in = sgn(t.m) >= 0 && t.m <= bound;
        add(pc::m_range, in, "m = " + t.m.get_str() + ", m_max = " + bound.get_str());
    } else {
        add(pc::m_range, false, "not evaluated: needs q >= 4, r >= 2 and a tuple within limits");
    }

    if (p_ok) {
        if (t.r % t.p == 0) {
            add(pc::m_residue, false, "r = 0 (mod p), so -1/r (mod p) is undefined");
        } else {
            std::uint64_t inv = mod_inverse(static_cast<std::int64_t>(t.r % t.p), t.p);
            std::uint64_t target = (t.p - inv) % t.p;
            BigInt mres;
            mpz_fdiv_r(mres.get_mpz_t(), t.m.get_mpz_t(), to_big(t.p).get_mpz_t());
            bool ok = mres != to_big(target);
            add(pc::m_residue, ok, "m mod p = " + mres.get_str() + ", -1/r mod p = " + str(target));
        }
    } else {
        add(pc::m_residue, false, "not evaluated: p is not prime");
    }
    return out;
}

bool all_passed(std::vector<PreconditionCheck> const & checks)
{
    return std::all_of(checks.begin(), checks.end(),
                       [](PreconditionCheck const & c) { return c.passed; });
}

static std::string failure_list(std::vector<PreconditionCheck> const & failed)
{
    std::string out = "invalid tuple:";
    for (auto const & c : failed)
        out += " " + c.name + " (" + c.detail + ");";
    return out;
}

InvalidTuple::InvalidTuple(std::vector<PreconditionCheck> failed)
    : std::invalid_argument(failure_list(failed)), failed_(std::move(failed))
{
}

QPolynomial construct(ParamTuple const & t, EngineLimits const & limits)
{
    auto checks = validate_tuple(t, limits);
    std::vector<PreconditionCheck> failed;
    std::copy_if(checks.begin(), checks.end(), std::back_inserter(failed),
                 [](PreconditionCheck const & c) { return !c.passed; });
    if (!failed.empty())
        throw InvalidTuple(std::move(failed));

    std::uint64_t g = t.g();
    std::uint64_t dpow = t.rho_power();
    BigInt q = t.q();
    std::vector<BigInt> c(2 * g + 1);
    c[2 * g] = 1;
    c[g] = t.m * to_big(t.r) + 1;
    c[0] = power(q, g);
    for (std::uint64_t j = dpow; j < g; j += dpow) {
        c[2 * g - j] = 1;
        c[j] = power(q, g - j);
    }
    return check_q_symmetry(IntPoly(std::move(c)), static_cast<unsigned>(g), q);
}

bool certify_ordinary(QPolynomial const & f, BigInt const & p)
{
    BigInt ag = f.a(f.g());
    BigInt d;
    mpz_gcd(d.get_mpz_t(), ag.get_mpz_t(), p.get_mpz_t());
    return d == 1;
}

bool certify_simple(QPolynomial const & f, std::uint64_t r, std::uint64_t rho,
                    unsigned b)
{
    if (!is_prime(r))
        return false;
    ParamTuple shape;
    shape.rho = rho;
    shape.b = b;
    std::uint64_t index = shape.rho_power() * rho;
    ModPoly reduced = reduce_mod(f.poly(), r);
    if (!(reduced == reduce_mod(cyclotomic(index), r)))
        return false;
    return is_irreducible_mod(reduced);
}

std::optional<std::uint64_t> find_irreducibility_prime(IntPoly const & f,
                                                       std::size_t prime_count)
{
    if (f.degree() < 1)
        return std::nullopt;
    for (std::uint64_t r : first_primes(prime_count)) {
        ModPoly reduced = reduce_mod(f, r);
        if (reduced.degree() != f.degree())
            continue;
        if (is_irreducible_mod(reduced))
            return r;
    }
    return std::nullopt;
}

bool absolutely_simple_g2(QPolynomial const & f)
{
    if (f.g() != 2)
        throw WrongDimension("the g = 2 rule needs a quartic, got g = " + std::to_string(f.g()));
    BigInt a1 = f.a(1), a2 = f.a(2);
    BigInt const & q = f.q();
    BigInt s = a1 * a1;
    return s != 0 && s != q + a2 && s != 2 * a2 && s != 3 * a2 - 3 * q;
}

PowerTestResult absolute_simplicity_power_test(QPolynomial const & f,
                                               std::uint64_t d_bound)
{
    PowerTestResult out;
    out.tested_bound = d_bound;
    auto full = static_cast<int>(2 * f.g());
    for (std::uint64_t d = 2; d <= d_bound; ++d) {
        IntPoly mp = minimal_poly_of_power(f.poly(), d);
        if (mp.degree() < full) {
            out.obstruction = true;
            out.witness_d = d;
            out.minimal_poly = std::move(mp);
            return out;
        }
    }
    return out;
}

char const * to_string(AbsoluteSimplicity a)
{
    switch (a) {
    case AbsoluteSimplicity::certified_yes: return "yes";
    case AbsoluteSimplicity::certified_no: return "no";
    case AbsoluteSimplicity::no_obstruction_up_to_bound: return "no_obstruction";
    case AbsoluteSimplicity::not_applicable: return "n/a";
    }
    return "n/a";
}

namespace {

struct TupleContext {
    std::uint64_t r, rho;
    unsigned b;
};

void run_checks(ClassificationReport & rep, ClassifyOptions const & opts,
                std::optional<TupleContext> const & ctx,
                std::optional<std::uint64_t> certifying_prime)
{
    IntPoly const & f = rep.poly;
    if (f.degree() < 2 || f.degree() % 2 != 0) {
        rep.symmetric = false;
        rep.shape_error = "degree " + std::to_string(f.degree()) + " is not a positive even number";
    }
    std::optional<QPolynomial> qf;
    if (rep.shape_error.empty()) {
        rep.g = static_cast<unsigned>(f.degree() / 2);
        try {
            qf = check_q_symmetry(f, rep.g, rep.q);
            rep.symmetric = true;
        } catch (ShapeMismatch const & e) {
            rep.shape_error = e.what();
        }
    }

    if (!qf) {
        rep.method = "shape";
        rep.is_q_polynomial = false;
    } else {
        auto t0 = Clock::now();
        ModulusCheck mc = exact_modulus_check(*qf);
        rep.timings.modulus = elapsed_ms(t0);
        rep.is_q_polynomial = mc.on_circle;
        rep.h_real_roots = mc.real_roots;
        rep.h_degree = static_cast<unsigned>(std::max(0, mc.h_radical.degree()));
        if (mc.witness)
            rep.modulus_witness = mc.witness->describe();

        t0 = Clock::now();
        LLReport ll = ll_check_default(*qf);
        rep.timings.ll = elapsed_ms(t0);
        rep.ll_passed = ll.passed;
        rep.ll_slack = ll.slack.to_string();
        rep.method = ll.passed && mc.on_circle ? "exact+LL" : "exact";
        if (ll.passed && !mc.on_circle)
            rep.error = "LL certificate passed but the exact check failed";
    }

    if (ctx) {
        std::uint64_t index = ParamTuple { ctx->rho, ctx->b, 0, 0, 0, 0 }.rho_power() * ctx->rho;
        rep.cyclotomic_congruence = reduce_mod(f, ctx->r) == reduce_mod(cyclotomic(index), ctx->r);
    }

    auto t0 = Clock::now();
    if (qf) {
        try {
            PrimePower pp = prime_power_decompose(rep.q);
            rep.ordinary = certify_ordinary(*qf, pp.p);
        } catch (NotPrimePower const &) {
            rep.ordinary = false;
            if (rep.error.empty())
                rep.error = "q is not a prime power";
        }
    }
    rep.timings.ordinary = elapsed_ms(t0);

    t0 = Clock::now();
    if (ctx && qf) {
        rep.simple = certify_simple(*qf, ctx->r, ctx->rho, ctx->b);
        if (rep.simple)
            rep.simple_prime = ctx->r;
    } else if (f.degree() >= 1) {
        if (certifying_prime) {
            ModPoly reduced = reduce_mod(f, *certifying_prime);
            if (is_prime(*certifying_prime) && reduced.degree() == f.degree()
                && is_irreducible_mod(reduced))
                rep.simple_prime = *certifying_prime;
        }
        if (!rep.simple_prime)
            rep.simple_prime = find_irreducibility_prime(f, opts.simple_prime_count);
        rep.simple = rep.simple_prime.has_value();
        if (!rep.simple && f.degree() <= static_cast<int>(opts.root_subset_max_degree)) {
            FactorSearch fs = factor_search_by_roots(f, opts.precision_bits);
            if (fs.decided && fs.irreducible) {
                rep.simple = true;
                rep.simple_certificate = "root subsets";
            } else if (fs.factor) {
                rep.simple_certificate = "factor " + fs.factor->to_string();
            }
        }
    }
    if (rep.simple_prime)
        rep.simple_certificate = "mod " + std::to_string(*rep.simple_prime);
    rep.timings.simple = elapsed_ms(t0);

    t0 = Clock::now();
    if (qf && rep.is_q_polynomial && rep.ordinary && rep.simple) {
        std::uint64_t bound = opts.d_bound ? opts.d_bound : 2ull * rep.g * rep.g;
        if (rep.g == 2) {
            rep.absolutely_simple = absolutely_simple_g2(*qf) ? AbsoluteSimplicity::certified_yes
                                                              : AbsoluteSimplicity::certified_no;
        } else {
            bool settled = false;
            if (ctx && ctx->b > 1) {
                std::uint64_t d = ParamTuple { ctx->rho, ctx->b, 0, 0, 0, 0 }.rho_power();
                IntPoly mp = minimal_poly_of_power(f, d);
                if (mp.degree() < f.degree()) {
                    rep.absolutely_simple = AbsoluteSimplicity::certified_no;
                    rep.witness_d = d;
                    rep.witness_minimal_poly = std::move(mp);
                    settled = true;
                }
            }
            if (!settled) {
                PowerTestResult pt = absolute_simplicity_power_test(*qf, bound);
                rep.tested_bound = pt.tested_bound;
                if (pt.obstruction) {
                    rep.absolutely_simple = AbsoluteSimplicity::certified_no;
                    rep.witness_d = pt.witness_d;
                    rep.witness_minimal_poly = std::move(pt.minimal_poly);
                } else {
                    rep.absolutely_simple = AbsoluteSimplicity::no_obstruction_up_to_bound;
                }
            }
        }
    }
    rep.timings.absolute = elapsed_ms(t0);

    if (opts.numeric_oracle && f.degree() >= 1) {
        t0 = Clock::now();
        unsigned prec = opts.precision_bits ? opts.precision_bits : default_precision(f);
        try {
            RootReport nr = numeric_roots(f, prec, rep.q);
            rep.numeric_max_deviation = nr.max_modulus_deviation;
            rep.numeric_real_roots = nr.real_root_count;
        } catch (NoConvergence const & e) {
            rep.numeric_error = e.what();
            rep.numeric_max_deviation = e.partial().max_modulus_deviation;
        }
        rep.timings.numeric = elapsed_ms(t0);
    }
}

void collect_violations(ClassificationReport & rep, ParamTuple const & t)
{
    auto & v = rep.theorem_violations;
    if (!rep.cyclotomic_congruence.value_or(false))
        v.emplace_back("f is not congruent to Phi_{rho^b} mod r");
    if (!rep.is_q_polynomial)
        v.emplace_back("not all roots have modulus sqrt(q)");
    if (!rep.ll_passed.value_or(false))
        v.emplace_back("LL certificate with delta = q^g failed");
    if (!rep.ordinary)
        v.emplace_back("gcd(a_g, p) != 1");
    if (!rep.simple)
        v.emplace_back("no irreducibility certificate mod r");
    if (t.rho == 5 && t.b == 1 && rep.absolutely_simple != AbsoluteSimplicity::certified_yes)
        v.emplace_back("g = 2 tuple is not certified absolutely simple");
    if (t.b > 1) {
        bool ok = rep.absolutely_simple == AbsoluteSimplicity::certified_no
                  && rep.witness_d == t.rho_power() && rep.witness_minimal_poly
                  && static_cast<std::uint64_t>(rep.witness_minimal_poly->degree()) == t.rho - 1;
        if (!ok)
            v.emplace_back("b > 1 tuple lacks the rho^(b-1) power witness of degree rho - 1");
    }
    if (rep.numeric_max_deviation && !rep.numeric_error.empty())
        v.emplace_back("numeric oracle: " + rep.numeric_error);
}

} // namespace

ClassificationReport classify(ParamTuple const & t, ClassifyOptions const & opts)
{
    auto start = Clock::now();
    ClassificationReport rep;
    rep.tuple = t;
    rep.preconditions = validate_tuple(t, opts.limits);
    rep.tuple_valid = all_passed(rep.preconditions);
    if (!rep.tuple_valid) {
        rep.error = "invalid tuple";
        rep.timings.total = elapsed_ms(start);
        return rep;
    }
    try {
        auto t0 = Clock::now();
        QPolynomial f = construct(t, opts.limits);
        rep.timings.construct = elapsed_ms(t0);
        rep.poly = f.poly();
        rep.q = f.q();
        run_checks(rep, opts, TupleContext { t.r, t.rho, t.b }, std::nullopt);
        collect_violations(rep, t);
    } catch (std::exception const & e) {
        rep.error = e.what();
        rep.theorem_violations.emplace_back(std::string("exception: ") + e.what());
    }
    rep.timings.total = elapsed_ms(start);
    return rep;
}

ClassificationReport classify(IntPoly const & f, BigInt const & q,
                              ClassifyOptions const & opts,
                              std::optional<std::uint64_t> certifying_prime)
{
    auto start = Clock::now();
    ClassificationReport rep;
    rep.poly = f;
    rep.q = q;
    try {
        run_checks(rep, opts, std::nullopt, certifying_prime);
    } catch (std::exception const & e) {
        rep.error = e.what();
    }
    rep.timings.total = elapsed_ms(start);
    return rep;
}

std::string SearchSummary::to_string() const
{
    std::ostringstream os;
    os << valid << " tuples (" << candidates << " candidates, " << rejected
       << " rejected): q-polynomial " << q_polynomial << ", ordinary " << ordinary
       << ", simple " << simple << ", absolutely simple yes " << abs_yes << " / no "
       << abs_no << " / no obstruction " << abs_no_obstruction << "; theorem violations "
       << violations;
    return os.str();
}

std::vector<ParamTuple> enumerate_candidates(SearchRange const & range,
                                             EngineLimits const & limits)
{
    std::vector<ParamTuple> out;
    std::set<std::uint64_t> rhos(range.rhos.begin(), range.rhos.end());

    // Prime powers in [q_min, q_max], ascending.
    std::vector<std::pair<BigInt, PrimePower>> qs;
    if (range.q_max >= 2 && range.q_max >= range.q_min) {
        if (range.q_max > limits.max_q)
            throw std::length_error("q_max exceeds the engine limit " + limits.max_q.get_str());
        std::uint64_t qmax = range.q_max.get_ui();
        for (std::uint64_t p = 2; p <= qmax; ++p) {
            if (!is_prime(p))
                continue;
            BigInt q = to_big(p);
            for (unsigned n = 1; q <= range.q_max; ++n, q *= to_big(p)) {
                if (q >= range.q_min)
                    qs.push_back({ q, PrimePower { to_big(p), n, q } });
            }
        }
        std::sort(qs.begin(), qs.end(),
                  [](auto const & a, auto const & b) { return a.first < b.first; });
    }

    for (std::uint64_t rho : rhos) {
        std::set<std::uint64_t> rs(range.r_candidates.begin(), range.r_candidates.end());
        if (rs.empty() && rho >= 2 && rho < (std::uint64_t(1) << 32)) {
            std::uint64_t r = least_prime_primitive_root(rho * rho);
            if (r)
                rs.insert(r);
        }
        for (unsigned b = range.b_min; b <= range.b_max; ++b) {
            for (std::uint64_t r : rs) {
                for (auto const & [q, pp] : qs) {
                    ParamTuple t { rho, b, r, pp.p.get_ui(), pp.n, 0 };
                    std::vector<BigInt> ms { 0 };
                    BigInt top = -1;
                    try {
                        bool shape_ok = t.b >= 1 && t.rho >= 2 && t.g() <= limits.max_degree / 2;
                        if (shape_ok && q >= 4 && r >= 2)
                            top = m_max(q, t.rho_power(), to_big(r));
                    } catch (std::exception const &) {
                        top = -1;
                    }
                    if (top >= 0) {
                        if (range.m_policy == MPolicy::endpoints) {
                            std::set<BigInt> s { 0, top };
                            if (top >= 1)
                                s.insert(1);
                            ms.assign(s.begin(), s.end());
                        } else {
                            if (top + out.size() >= range.max_candidates)
                                throw std::length_error("search range exceeds "
                                                        + std::to_string(range.max_candidates)
                                                        + " candidates");
                            ms.clear();
                            for (BigInt m = 0; m <= top; ++m)
                                ms.push_back(m);
                        }
                    }
                    for (auto const & m : ms) {
                        t.m = m;
                        out.push_back(t);
                        if (out.size() > range.max_candidates)
                            throw std::length_error("search range exceeds "
                                                    + std::to_string(range.max_candidates)
                                                    + " candidates");
                    }
                }
            }
        }
    }
    return out;
}

namespace {

void tally(SearchSummary & s, ClassificationReport const & rep)
{
    s.q_polynomial += rep.is_q_polynomial;
    s.ordinary += rep.ordinary;
    s.simple += rep.simple;
    s.abs_yes += rep.absolutely_simple == AbsoluteSimplicity::certified_yes;
    s.abs_no += rep.absolutely_simple == AbsoluteSimplicity::certified_no;
    s.abs_no_obstruction += rep.absolutely_simple == AbsoluteSimplicity::no_obstruction_up_to_bound;
    s.violations += !rep.theorem_violations.empty();
}

std::vector<ParamTuple> valid_candidates(SearchRange const & range, ClassifyOptions const & opts,
                                         SearchSummary & summary)
{
    auto all = enumerate_candidates(range, opts.limits);
    summary.candidates = all.size();
    std::vector<ParamTuple> valid;
    for (auto const & t : all) {
        if (all_passed(validate_tuple(t, opts.limits)))
            valid.push_back(t);
    }
    summary.valid = valid.size();
    summary.rejected = all.size() - valid.size();
    return valid;
}

} // namespace

SearchSummary search_serial(SearchRange const & range, ClassifyOptions const & opts,
                            ReportSink const & sink)
{
    SearchSummary summary;
    for (auto const & t : valid_candidates(range, opts, summary)) {
        ClassificationReport rep = classify(t, opts);
        tally(summary, rep);
        if (sink)
            sink(rep);
    }
    return summary;
}

SearchSummary search(SearchRange const & range, ClassifyOptions const & opts,
                     ReportSink const & sink, unsigned workers)
{
#ifndef _OPENMP
    workers = 1;
#endif
    if (workers <= 1)
        return search_serial(range, opts, sink);

    SearchSummary summary;
    auto tuples = valid_candidates(range, opts, summary);
    // Classify a batch in parallel, then hand it to the sink in order.
    std::size_t const batch = 8 * static_cast<std::size_t>(workers);
    std::vector<ClassificationReport> reports;
    for (std::size_t begin = 0; begin < tuples.size(); begin += batch) {
        std::size_t end = std::min(tuples.size(), begin + batch);
        reports.assign(end - begin, ClassificationReport {});
        auto count = static_cast<std::int64_t>(end - begin);
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
        for (std::int64_t i = 0; i < count; ++i)
            reports[static_cast<std::size_t>(i)] = classify(tuples[begin + static_cast<std::size_t>(i)], opts);
        for (auto const & rep : reports) {
            tally(summary, rep);
            if (sink)
                sink(rep);
        }
    }
    return summary;
}

} // namespace weilpoly
