// weilpoly: construct, verify, sweep and summarise characteristic polynomials
// of ordinary abelian varieties.
//
//   weilpoly construct --rho 5 --b 1 --r 2 --p 5 --n 1 --m 0
//   weilpoly verify --poly 8,4,2,5,1,1,1 --q 2
//   weilpoly search --rho 5,7 --b-max 2 --q-max 64 --out sweep.jsonl --no-timings
//   weilpoly report --in sweep.jsonl
//
// Exit codes: 0 ok, 1 usage error, 2 invalid tuple, 3 not a q-polynomial.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "weilpoly/engine.hpp"
#include "weilpoly/report_io.hpp"

namespace {

using namespace weilpoly;

enum Exit { ok = 0, usage = 1, invalid_tuple = 2, negative = 3 };

struct Common {
    unsigned precision = 0;
    std::uint64_t d_bound = 0;
    bool no_numeric = false;
    std::string format = "pretty";
};

ClassifyOptions options_from(Common const & c)
{
    ClassifyOptions opts;
    opts.d_bound = c.d_bound;
    opts.numeric_oracle = !c.no_numeric;
    opts.precision_bits = c.precision;
    if (opts.precision_bits == 0) {
        if (char const * env = std::getenv("WEILPOLY_PRECISION")) {
            char * end = nullptr;
            unsigned long v = std::strtoul(env, &end, 10);
            if (end != env && *end == '\0')
                opts.precision_bits = static_cast<unsigned>(v);
        }
    }
    return opts;
}

void add_common(CLI::App * cmd, Common & c, bool with_format)
{
    cmd->add_option("--precision", c.precision,
                    "MPFR bits for the numeric oracle (default: $WEILPOLY_PRECISION or automatic)");
    cmd->add_option("--d-bound", c.d_bound, "largest power tested for absolute simplicity (default 2g^2)");
    cmd->add_flag("--no-numeric", c.no_numeric, "skip the floating-point root oracle");
    if (with_format)
        cmd->add_option("--format", c.format, "pretty or jsonl")
            ->check(CLI::IsMember({ "pretty", "jsonl" }));
}

void print(ClassificationReport const & rep, Common const & c)
{
    if (c.format == "jsonl")
        std::cout << to_jsonl_line(rep) << '\n';
    else
        std::cout << pretty(rep);
}

int cmd_construct(ParamTuple const & t, Common const & c)
{
    ClassifyOptions opts = options_from(c);
    // A malformed tuple shape (rho, b, p, n) is a usage error; arithmetic
    // incompatibilities between well-formed parameters are invalid tuples.
    for (auto const & pc : validate_tuple(t, opts.limits)) {
        std::string name = pc.name;
        bool structural = name == precondition::rho_prime || name == precondition::b_positive
                          || name == precondition::p_prime || name == precondition::n_positive;
        if (structural && !pc.passed) {
            std::cerr << "error: " << pc.name << ": " << pc.detail << '\n';
            return usage;
        }
    }
    ClassificationReport rep = classify(t, opts);
    if (!rep.tuple_valid) {
        std::cerr << "invalid tuple, failed preconditions:\n";
        for (auto const & pc : rep.preconditions)
            if (!pc.passed)
                std::cerr << "  " << pc.name << ": " << pc.detail << '\n';
        return invalid_tuple;
    }
    if (c.format != "jsonl")
        std::cout << rep.poly.to_string() << '\n';
    print(rep, c);
    return ok;
}

int cmd_verify(std::string const & poly, std::string const & q_text,
               std::optional<std::uint64_t> r, Common const & c)
{
    IntPoly f;
    BigInt q;
    try {
        f = IntPoly::parse(poly);
    } catch (PolyParseError const & e) {
        std::cerr << "error: malformed polynomial: " << e.what() << '\n';
        return usage;
    }
    if (q.set_str(q_text, 10) != 0 || q < 1) {
        std::cerr << "error: --q must be a positive integer\n";
        return usage;
    }
    ClassificationReport rep = classify(f, q, options_from(c), r);
    print(rep, c);
    return rep.is_q_polynomial ? ok : negative;
}

struct SearchArgs {
    std::vector<std::uint64_t> rhos;
    unsigned b_min = 1, b_max = 1;
    std::vector<std::uint64_t> rs;
    std::uint64_t q_min = 4, q_max = 0;
    std::string m_policy = "endpoints";
    std::string out = "-";
    std::string format = "jsonl";
    unsigned workers = 1;
    bool no_timings = false;
};

int cmd_search(SearchArgs const & a, Common const & c)
{
    SearchRange range;
    range.rhos = a.rhos;
    range.b_min = a.b_min;
    range.b_max = a.b_max;
    range.r_candidates = a.rs;
    range.q_min = a.q_min;
    range.q_max = a.q_max;
    range.m_policy = a.m_policy == "all" ? MPolicy::all : MPolicy::endpoints;

    std::ofstream file;
    std::ostream * out = &std::cout;
    if (a.out != "-") {
        file.open(a.out, std::ios::out | std::ios::trunc);
        if (!file) {
            std::cerr << "error: cannot write " << a.out << '\n';
            return usage;
        }
        out = &file;
    }
    bool csv = a.format == "csv";
    if (csv)
        *out << csv_header() << '\n';
    bool timings = !a.no_timings;
    ReportSink sink = [&](ClassificationReport const & rep) {
        if (csv)
            *out << csv_row(flatten(to_json(rep, timings))) << '\n';
        else
            *out << to_jsonl_line(rep, timings) << '\n';
    };

    SearchSummary summary;
    try {
        summary = search(range, options_from(c), sink, a.workers);
    } catch (std::length_error const & e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    }
    out->flush();
    if (!*out) {
        std::cerr << "error: write to " << a.out << " failed\n";
        return usage;
    }
    (a.out == "-" ? std::cerr : std::cout) << summary.to_string() << '\n';
    return ok;
}

int cmd_report(std::string const & path)
{
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot read " << path << '\n';
        return usage;
    }
    try {
        std::cout << summary_table(read_jsonl(in));
    } catch (std::exception const & e) {
        std::cerr << "error: " << path << ": " << e.what() << '\n';
        return usage;
    }
    return ok;
}

} // namespace

int main(int argc, char ** argv)
{
    CLI::App app { "Characteristic polynomials of simple ordinary abelian varieties" };
    app.require_subcommand(1);

    Common common;

    ParamTuple tuple;
    std::string m_text = "0";
    auto * construct = app.add_subcommand("construct", "build and classify f from a parameter tuple");
    construct->add_option("--rho", tuple.rho, "prime >= 5")->required();
    construct->add_option("--b", tuple.b, "exponent, 2g = rho^(b-1) (rho - 1)")->required();
    construct->add_option("--r", tuple.r, "prime primitive root mod rho^2")->required();
    construct->add_option("--p", tuple.p, "characteristic")->required();
    construct->add_option("--n", tuple.n, "q = p^n")->required();
    construct->add_option("--m", m_text, "middle-coefficient parameter")->required();
    add_common(construct, common, true);

    std::string poly, q_text;
    std::optional<std::uint64_t> cert_r;
    auto * verify = app.add_subcommand("verify", "classify an arbitrary polynomial");
    verify->add_option("--poly", poly, "coefficients low to high, comma separated")->required();
    verify->add_option("--q", q_text, "field size")->required();
    verify->add_option("--r", cert_r, "prime to try first for the irreducibility certificate");
    add_common(verify, common, true);

    SearchArgs sargs;
    auto * search_cmd = app.add_subcommand("search", "sweep a parameter range");
    search_cmd->add_option("--rho", sargs.rhos, "values of rho")->delimiter(',');
    search_cmd->add_option("--b-min", sargs.b_min);
    search_cmd->add_option("--b-max", sargs.b_max);
    search_cmd->add_option("--r", sargs.rs, "values of r (default: least prime primitive root)")
        ->delimiter(',');
    search_cmd->add_option("--q-min", sargs.q_min);
    search_cmd->add_option("--q-max", sargs.q_max);
    search_cmd->add_option("--m-policy", sargs.m_policy, "endpoints (0, 1, m_max) or all")
        ->check(CLI::IsMember({ "endpoints", "all" }));
    search_cmd->add_option("--out", sargs.out, "output file, - for stdout");
    search_cmd->add_option("--format", sargs.format, "jsonl or csv")
        ->check(CLI::IsMember({ "jsonl", "csv" }));
    search_cmd->add_option("--workers", sargs.workers, "parallel classification threads")
        ->check(CLI::Range(1u, 1024u));
    search_cmd->add_flag("--no-timings", sargs.no_timings, "omit timings for byte-stable output");
    add_common(search_cmd, common, false);

    std::string in_path;
    auto * report = app.add_subcommand("report", "summarise a JSONL file");
    report->add_option("--in", in_path, "JSONL produced by search")->required();

    try {
        app.parse(argc, argv);
    } catch (CLI::CallForHelp const & e) {
        return app.exit(e);
    } catch (CLI::CallForAllHelp const & e) {
        return app.exit(e);
    } catch (CLI::ParseError const & e) {
        app.exit(e);
        return usage;
    }

    try {
        if (*construct) {
            if (tuple.m.set_str(m_text, 10) != 0) {
                std::cerr << "error: --m must be an integer\n";
                return usage;
            }
            return cmd_construct(tuple, common);
        }
        if (*verify)
            return cmd_verify(poly, q_text, cert_r, common);
        if (*search_cmd)
            return cmd_search(sargs, common);
        return cmd_report(in_path);
    } catch (std::exception const & e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    }
}
