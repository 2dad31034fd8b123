#pragma once

/* Construction and classification of characteristic polynomials of simple
 * ordinary abelian varieties.
 *
 * A parameter tuple (rho, b, r, p, n, m) with 2g = rho^(b-1) (rho - 1) and
 * q = p^n determines
 *
 *   f(t) = t^(2g) + (m r + 1) t^g + q^g + sum_{j=1}^{g-1} a_j (t^(2g-j) + q^(g-j) t^j),
 *
 * with a_j = 1 when rho^(b-1) divides j and 0 otherwise.  classify() checks
 * every property of f independently and records the certificates.
 */

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "weilpoly/analysis.hpp"
#include "weilpoly/intpoly.hpp"
#include "weilpoly/modpoly.hpp"
#include "weilpoly/numtheory.hpp"
#include "weilpoly/surd.hpp"

namespace weilpoly {

struct ParamTuple {
    std::uint64_t rho = 0;
    unsigned b = 0;
    std::uint64_t r = 0;
    std::uint64_t p = 0;
    unsigned n = 0;
    BigInt m = 0;

    BigInt q() const;
    /// rho^(b-1); throws std::overflow_error beyond 64 bits.
    std::uint64_t rho_power() const;
    /// rho^(b-1) (rho - 1) / 2
    std::uint64_t g() const;

    friend bool operator==(ParamTuple const &, ParamTuple const &) = default;
};

struct EngineLimits {
    std::uint64_t max_degree = 256;          ///< bound on 2g
    BigInt max_q = BigInt(1) << 32;
};

struct PreconditionCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

namespace precondition {
inline constexpr char const * rho_prime = "rho_prime_ge_5";
inline constexpr char const * b_positive = "b_ge_1";
inline constexpr char const * r_prime = "r_prime";
inline constexpr char const * r_primitive_root = "r_primitive_root_mod_rho2";
inline constexpr char const * p_prime = "p_prime";
inline constexpr char const * n_positive = "n_ge_1";
inline constexpr char const * q_at_least_4 = "q_ge_4";
inline constexpr char const * q_one_mod_r = "q_congruent_1_mod_r";
inline constexpr char const * m_range = "m_in_range";
inline constexpr char const * m_residue = "m_not_neg_inv_r_mod_p";
inline constexpr char const * limits = "engine_limits";
} // namespace precondition

/// Each hypothesis checked independently; the tuple is valid iff all pass.
std::vector<PreconditionCheck> validate_tuple(ParamTuple const & t,
                                              EngineLimits const & limits = {});
bool all_passed(std::vector<PreconditionCheck> const & checks);

class InvalidTuple : public std::invalid_argument {
public:
    explicit InvalidTuple(std::vector<PreconditionCheck> failed);
    std::vector<PreconditionCheck> const & failed() const { return failed_; }

private:
    std::vector<PreconditionCheck> failed_;
};

QPolynomial construct(ParamTuple const & t, EngineLimits const & limits = {});

/// gcd(a_g, p) == 1.
bool certify_ordinary(QPolynomial const & f, BigInt const & p);

/// f = Phi_{rho^b} (mod r) and that reduction is irreducible over F_r, which
/// makes f irreducible over Q.
bool certify_simple(QPolynomial const & f, std::uint64_t r, std::uint64_t rho,
                    unsigned b);

/// First of the first prime_count primes modulo which f stays irreducible.
std::optional<std::uint64_t> find_irreducibility_prime(IntPoly const & f,
                                                       std::size_t prime_count = 25);

class WrongDimension : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// g = 2 rule: a_1^2 not in {0, q + a_2, 2 a_2, 3 a_2 - 3 q}.
bool absolutely_simple_g2(QPolynomial const & f);

struct PowerTestResult {
    bool obstruction = false;
    std::uint64_t witness_d = 0;
    IntPoly minimal_poly;         ///< of theta^witness_d, when obstructed
    std::uint64_t tested_bound = 0;
};

/// deg minpoly(theta^d) < 2g for some 2 <= d <= d_bound proves that the
/// variety is not absolutely simple.  The absence of such d is not a proof
/// of absolute simplicity.
PowerTestResult absolute_simplicity_power_test(QPolynomial const & f,
                                               std::uint64_t d_bound);

enum class AbsoluteSimplicity {
    certified_yes,
    certified_no,
    no_obstruction_up_to_bound,
    not_applicable,
};

char const * to_string(AbsoluteSimplicity a);

struct Timings {
    double construct = 0, modulus = 0, ll = 0, ordinary = 0, simple = 0,
           absolute = 0, numeric = 0, total = 0;
};

struct ClassificationReport {
    std::optional<ParamTuple> tuple;
    std::vector<PreconditionCheck> preconditions;
    bool tuple_valid = true;

    IntPoly poly;
    unsigned g = 0;
    BigInt q = 0;

    bool symmetric = false;
    std::string shape_error;

    bool is_q_polynomial = false;
    std::string method;                  ///< "exact+LL", "exact" or "shape"
    std::optional<bool> ll_passed;       ///< unset when not applicable
    std::string ll_slack;
    std::string modulus_witness;
    unsigned h_real_roots = 0;
    unsigned h_degree = 0;

    /// Reduction mod r equals Phi_{rho^b}; tuple inputs only.
    std::optional<bool> cyclotomic_congruence;

    bool ordinary = false;
    bool simple = false;
    std::optional<std::uint64_t> simple_prime;
    /// "mod r", "root subsets", "factor <poly>" or empty when inconclusive.
    std::string simple_certificate;

    AbsoluteSimplicity absolutely_simple = AbsoluteSimplicity::not_applicable;
    std::optional<std::uint64_t> witness_d;
    std::optional<IntPoly> witness_minimal_poly;
    std::uint64_t tested_bound = 0;

    std::optional<double> numeric_max_deviation;
    std::optional<unsigned> numeric_real_roots;
    std::string numeric_error;

    /// Conclusions of the construction theorem that failed (tuple inputs).
    std::vector<std::string> theorem_violations;
    std::string error;

    Timings timings;
};

struct ClassifyOptions {
    /// 0 selects 2g^2.
    std::uint64_t d_bound = 0;
    bool numeric_oracle = true;
    /// 0 selects default_precision(f).
    unsigned precision_bits = 0;
    std::size_t simple_prime_count = 25;
    /// Raw inputs without a modular certificate fall back to the root-subset
    /// search up to this degree.
    unsigned root_subset_max_degree = 24;
    EngineLimits limits;
};

ClassificationReport classify(ParamTuple const & t, ClassifyOptions const & opts = {});
ClassificationReport classify(IntPoly const & f, BigInt const & q,
                              ClassifyOptions const & opts = {},
                              std::optional<std::uint64_t> certifying_prime = std::nullopt);

enum class MPolicy { endpoints, all };

struct SearchRange {
    std::vector<std::uint64_t> rhos;
    unsigned b_min = 1, b_max = 1;
    /// Empty: the least prime primitive root modulo rho^2.
    std::vector<std::uint64_t> r_candidates;
    BigInt q_min = 4, q_max = 0;
    MPolicy m_policy = MPolicy::endpoints;
    /// Refuse ranges that enumerate more candidates than this.
    std::size_t max_candidates = 1'000'000;
};

struct SearchSummary {
    std::size_t candidates = 0;
    std::size_t valid = 0;
    std::size_t rejected = 0;
    std::size_t q_polynomial = 0;
    std::size_t ordinary = 0;
    std::size_t simple = 0;
    std::size_t abs_yes = 0, abs_no = 0, abs_no_obstruction = 0;
    std::size_t violations = 0;

    std::string to_string() const;
};

/// Candidate tuples in lexicographic (rho, b, r, q, m) order, before
/// validation.
std::vector<ParamTuple> enumerate_candidates(SearchRange const & range,
                                             EngineLimits const & limits = {});

using ReportSink = std::function<void(ClassificationReport const &)>;

/// Validates, constructs and classifies every candidate; valid tuples are
/// passed to sink in enumeration order.  workers > 1 classifies in parallel
/// with OpenMP; the output order and content do not depend on workers.
SearchSummary search(SearchRange const & range, ClassifyOptions const & opts,
                     ReportSink const & sink, unsigned workers = 1);

/// Single-threaded reference implementation of search().
SearchSummary search_serial(SearchRange const & range, ClassifyOptions const & opts,
                            ReportSink const & sink);

} // namespace weilpoly
