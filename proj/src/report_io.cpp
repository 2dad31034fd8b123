#include "weilpoly/report_io.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <map>
#include <sstream>

namespace weilpoly {

namespace {

// Integers that fit a long are numbers, larger ones decimal strings.
Json big(BigInt const & v)
{
    if (v.fits_slong_p())
        return v.get_si();
    return v.get_str();
}

char const * ll_status(ClassificationReport const & rep)
{
    if (!rep.ll_passed)
        return "n/a";
    return *rep.ll_passed ? "passed" : "inconclusive";
}

std::string scalar_text(Json const & v)
{
    if (v.is_null())
        return "";
    if (v.is_string())
        return v.get<std::string>();
    if (v.is_array()) {
        std::string out;
        for (auto const & e : v) {
            if (!out.empty())
                out += "; ";
            out += scalar_text(e);
        }
        return out;
    }
    return v.dump();
}

constexpr char const * kTupleKeys[] = { "rho", "b", "r", "p", "n", "m" };
constexpr char const * kTimingKeys[] = { "construct", "modulus", "ll",       "ordinary",
                                         "simple",    "absolute", "numeric", "total" };
constexpr char const * kScalarKeys[] = {
    "g",           "q",                  "poly",
    "is_q_polynomial", "method",         "ll_passed",
    "ll_status",   "ll_slack",           "modulus_witness",
    "h_real_roots", "cyclotomic_congruence", "ordinary",
    "simple",      "simple_prime",       "simple_certificate",       "absolutely_simple",
    "witness_d",   "witness_minimal_poly", "tested_bound",
    "numeric_max_deviation", "numeric_real_roots", "numeric_error",
    "theorem_violations", "error",
};

std::string fixed(double v, int digits)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*e", digits, v);
    return buf;
}

} // namespace

Json to_json(ClassificationReport const & rep, bool with_timings)
{
    Json j;
    if (rep.tuple) {
        auto const & t = *rep.tuple;
        j["tuple"] = { { "rho", t.rho }, { "b", t.b }, { "r", t.r },
                       { "p", t.p },     { "n", t.n }, { "m", big(t.m) } };
    } else {
        j["tuple"] = nullptr;
    }
    j["g"] = rep.g;
    j["q"] = big(rep.q);
    j["poly"] = rep.poly.to_string();
    j["is_q_polynomial"] = rep.is_q_polynomial;
    j["method"] = rep.method;
    j["ll_passed"] = rep.ll_passed ? Json(*rep.ll_passed) : Json(nullptr);
    j["ll_status"] = ll_status(rep);
    j["ll_slack"] = rep.ll_slack.empty() ? Json(nullptr) : Json(rep.ll_slack);
    j["modulus_witness"] = rep.modulus_witness.empty() ? Json(nullptr) : Json(rep.modulus_witness);
    j["h_real_roots"] = rep.h_real_roots;
    j["cyclotomic_congruence"] =
        rep.cyclotomic_congruence ? Json(*rep.cyclotomic_congruence) : Json(nullptr);
    j["ordinary"] = rep.ordinary;
    j["simple"] = rep.simple;
    j["simple_prime"] = rep.simple_prime ? Json(*rep.simple_prime) : Json(nullptr);
    j["simple_certificate"] =
        rep.simple_certificate.empty() ? Json(nullptr) : Json(rep.simple_certificate);
    j["absolutely_simple"] = to_string(rep.absolutely_simple);
    j["witness_d"] = rep.witness_d ? Json(*rep.witness_d) : Json(nullptr);
    j["witness_minimal_poly"] =
        rep.witness_minimal_poly ? Json(rep.witness_minimal_poly->to_string()) : Json(nullptr);
    j["tested_bound"] = rep.tested_bound;
    j["numeric_max_deviation"] =
        rep.numeric_max_deviation ? Json(*rep.numeric_max_deviation) : Json(nullptr);
    j["numeric_real_roots"] =
        rep.numeric_real_roots ? Json(*rep.numeric_real_roots) : Json(nullptr);
    j["numeric_error"] = rep.numeric_error.empty() ? Json(nullptr) : Json(rep.numeric_error);
    j["theorem_violations"] = rep.theorem_violations;
    j["error"] = rep.error.empty() ? Json(nullptr) : Json(rep.error);
    if (with_timings) {
        auto const & t = rep.timings;
        j["timings_ms"] = { { "construct", t.construct }, { "modulus", t.modulus },
                            { "ll", t.ll },               { "ordinary", t.ordinary },
                            { "simple", t.simple },       { "absolute", t.absolute },
                            { "numeric", t.numeric },     { "total", t.total } };
    } else {
        j["timings_ms"] = nullptr;
    }
    return j;
}

std::string to_jsonl_line(ClassificationReport const & rep, bool with_timings)
{
    return to_json(rep, with_timings).dump();
}

FlatRow flatten(Json const & report)
{
    FlatRow row;
    auto const & tuple = report.contains("tuple") ? report["tuple"] : Json(nullptr);
    for (char const * k : kTupleKeys) {
        Json v = tuple.is_object() && tuple.contains(k) ? tuple[k] : Json(nullptr);
        row.emplace_back(std::string("tuple.") + k, scalar_text(v));
    }
    for (char const * k : kScalarKeys)
        row.emplace_back(k, report.contains(k) ? scalar_text(report[k]) : "");
    auto const & timings = report.contains("timings_ms") ? report["timings_ms"] : Json(nullptr);
    for (char const * k : kTimingKeys) {
        Json v = timings.is_object() && timings.contains(k) ? timings[k] : Json(nullptr);
        row.emplace_back(std::string("timings_ms.") + k, scalar_text(v));
    }
    return row;
}

std::string csv_escape(std::string const & field)
{
    if (field.find_first_of(",\"\n\r") == std::string::npos)
        return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + '"';
}

std::string csv_header()
{
    FlatRow cols = flatten(Json::object());
    std::string out;
    for (std::size_t i = 0; i < cols.size(); ++i)
        out += (i ? "," : "") + csv_escape(cols[i].first);
    return out;
}

std::string csv_row(FlatRow const & row)
{
    std::string out;
    for (std::size_t i = 0; i < row.size(); ++i)
        out += (i ? "," : "") + csv_escape(row[i].second);
    return out;
}

std::string pretty(ClassificationReport const & rep)
{
    std::ostringstream os;
    auto mark = [](bool b) { return b ? "yes" : "no"; };
    if (rep.tuple) {
        auto const & t = *rep.tuple;
        os << "tuple: rho=" << t.rho << " b=" << t.b << " r=" << t.r << " p=" << t.p
           << " n=" << t.n << " m=" << t.m.get_str() << '\n';
        if (!rep.tuple_valid) {
            os << "invalid tuple, failed preconditions:\n";
            for (auto const & c : rep.preconditions)
                if (!c.passed)
                    os << "  " << c.name << ": " << c.detail << '\n';
            return os.str();
        }
    }
    os << "f(t) = " << rep.poly.pretty() << '\n';
    os << "g = " << rep.g << ", q = " << rep.q.get_str() << '\n';
    if (!rep.shape_error.empty())
        os << "shape: " << rep.shape_error << '\n';
    os << "q-polynomial: " << mark(rep.is_q_polynomial) << " (method " << rep.method << ")\n";
    if (rep.ll_passed)
        os << "  LL certificate: " << (*rep.ll_passed ? "passed" : "inconclusive")
           << ", slack " << rep.ll_slack << '\n';
    if (!rep.modulus_witness.empty())
        os << "  witness: " << rep.modulus_witness << '\n';
    if (rep.cyclotomic_congruence)
        os << "f = Phi_{rho^b} mod r: " << mark(*rep.cyclotomic_congruence) << '\n';
    os << "ordinary: " << mark(rep.ordinary) << '\n';
    os << "simple: ";
    if (rep.simple && rep.simple_prime)
        os << "yes (irreducible mod " << *rep.simple_prime << ")\n";
    else if (rep.simple)
        os << "yes (" << rep.simple_certificate << ")\n";
    else if (!rep.simple_certificate.empty())
        os << "no (" << rep.simple_certificate << ")\n";
    else
        os << (rep.tuple ? "no\n" : "inconclusive (no certificate)\n");
    os << "absolutely simple: " << to_string(rep.absolutely_simple);
    if (rep.witness_d)
        os << " (d = " << *rep.witness_d << ", minimal polynomial of theta^d: "
           << rep.witness_minimal_poly->pretty() << ")";
    else if (rep.absolutely_simple == AbsoluteSimplicity::no_obstruction_up_to_bound)
        os << " (d <= " << rep.tested_bound << ")";
    os << '\n';
    if (rep.numeric_max_deviation)
        os << "numeric oracle: max | |z| - sqrt(q) | / sqrt(q) = "
           << fixed(*rep.numeric_max_deviation, 3) << ", real roots "
           << rep.numeric_real_roots.value_or(0) << '\n';
    if (!rep.numeric_error.empty())
        os << "numeric oracle error: " << rep.numeric_error << '\n';
    for (auto const & v : rep.theorem_violations)
        os << "VIOLATION: " << v << '\n';
    if (!rep.error.empty())
        os << "error: " << rep.error << '\n';
    return os.str();
}

std::vector<Json> read_jsonl(std::istream & in)
{
    std::vector<Json> out;
    std::string line;
    for (std::size_t no = 1; std::getline(in, line); ++no) {
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        Json j = Json::parse(line, nullptr, false);
        if (j.is_discarded() || !j.is_object())
            throw ReportParseError("line " + std::to_string(no) + ": not a JSON object");
        if (!j.contains("poly") || !j.contains("absolutely_simple"))
            throw ReportParseError("line " + std::to_string(no) + ": missing report fields");
        out.push_back(std::move(j));
    }
    return out;
}

std::string summary_table(std::vector<Json> const & reports)
{
    struct Row {
        std::size_t total = 0, qpoly = 0, ordinary = 0, simple = 0;
        std::size_t yes = 0, no = 0, no_obstruction = 0, na = 0, violations = 0;
        std::map<std::uint64_t, std::size_t> witness;
        double max_dev = 0;
        bool has_dev = false;
    };
    std::map<std::pair<std::string, std::string>, Row> rows;
    auto key_of = [](Json const & j) -> std::pair<std::string, std::string> {
        auto const & t = j["tuple"];
        if (!t.is_object())
            return { "-", "-" };
        return { t["rho"].dump(), t["b"].dump() };
    };
    for (auto const & j : reports) {
        Row & r = rows[key_of(j)];
        ++r.total;
        r.qpoly += j.value("is_q_polynomial", false);
        r.ordinary += j.value("ordinary", false);
        r.simple += j.value("simple", false);
        std::string abs = j.value("absolutely_simple", "n/a");
        if (abs == "yes")
            ++r.yes;
        else if (abs == "no")
            ++r.no;
        else if (abs == "no_obstruction")
            ++r.no_obstruction;
        else
            ++r.na;
        if (abs == "no" && j["witness_d"].is_number_unsigned())
            ++r.witness[j["witness_d"].get<std::uint64_t>()];
        if (j.contains("theorem_violations") && !j["theorem_violations"].empty())
            ++r.violations;
        if (j.contains("numeric_max_deviation") && j["numeric_max_deviation"].is_number()) {
            r.max_dev = std::max(r.max_dev, j["numeric_max_deviation"].get<double>());
            r.has_dev = true;
        }
    }
    // Numeric keys sort by value, "-" last.
    std::vector<std::pair<std::pair<std::string, std::string>, Row const *>> order;
    for (auto const & [k, r] : rows)
        order.emplace_back(k, &r);
    std::sort(order.begin(), order.end(), [](auto const & a, auto const & b) {
        auto num = [](std::string const & s) { return s == "-" ? ~0ull : std::stoull(s); };
        return std::pair(num(a.first.first), num(a.first.second))
               < std::pair(num(b.first.first), num(b.first.second));
    });

    std::ostringstream os;
    char line[256];
    std::snprintf(line, sizeof line, "%-5s %-3s %7s %7s %8s %6s  %-22s %10s %10s\n", "rho", "b",
                  "tuples", "q-poly", "ordinary", "simple", "absolutely simple", "violations",
                  "max dev");
    os << line;
    for (auto const & [k, r] : order) {
        std::string verdict;
        if (r->yes == r->total)
            verdict = "yes";
        else if (r->no == r->total && r->witness.size() == 1)
            verdict = "no (d = " + std::to_string(r->witness.begin()->first) + ")";
        else if (r->no_obstruction == r->total)
            verdict = "no obstruction";
        else if (r->na == r->total)
            verdict = "n/a";
        else
            verdict = "mixed " + std::to_string(r->yes) + "/" + std::to_string(r->no) + "/"
                      + std::to_string(r->no_obstruction) + "/" + std::to_string(r->na);
        std::string dev = r->has_dev ? fixed(r->max_dev, 2) : "-";
        std::snprintf(line, sizeof line, "%-5s %-3s %7zu %7zu %8zu %6zu  %-22s %10zu %10s\n",
                      k.first.c_str(), k.second.c_str(), r->total, r->qpoly, r->ordinary,
                      r->simple, verdict.c_str(), r->violations, dev.c_str());
        os << line;
    }
    return os.str();
}

} // namespace weilpoly
