#include <doctest.h>

#include <random>

#include <mpfr.h>

#include "weilpoly/surd.hpp"

using namespace weilpoly;

namespace {

// floor(bound / r) evaluated in floating point at `bits` precision, where
// bound = 2Q - 2 sqrt(Q) - 1.
BigInt m_max_float(BigInt const & Q, BigInt const & r, mpfr_prec_t bits)
{
    mpfr_t x, s;
    mpfr_inits2(bits, x, s, static_cast<mpfr_ptr>(nullptr));
    mpfr_set_z(x, Q.get_mpz_t(), MPFR_RNDN);
    mpfr_sqrt(s, x, MPFR_RNDN);
    mpfr_mul_ui(x, x, 2, MPFR_RNDN);
    mpfr_mul_ui(s, s, 2, MPFR_RNDN);
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

int float_sign(QuadSurd const & x)
{
    mpfr_t a, b;
    mpfr_inits2(256, a, b, static_cast<mpfr_ptr>(nullptr));
    mpfr_set_z(b, x.radicand().get_mpz_t(), MPFR_RNDN);
    mpfr_sqrt(b, b, MPFR_RNDN);
    mpfr_mul_z(b, b, x.irrational().get_mpz_t(), MPFR_RNDN);
    mpfr_set_z(a, x.rational().get_mpz_t(), MPFR_RNDN);
    mpfr_add(a, a, b, MPFR_RNDN);
    int s = mpfr_sgn(a);
    mpfr_clears(a, b, static_cast<mpfr_ptr>(nullptr));
    return s > 0 ? 1 : (s < 0 ? -1 : 0);
}

BigInt pow_q(BigInt const & q, unsigned long d)
{
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), q.get_mpz_t(), d);
    return out;
}

} // namespace

TEST_SUITE("surd") {

TEST_CASE("arithmetic fixtures")
{
    CHECK(surd_add(QuadSurd(5, 1, 1), QuadSurd(5, 2, -1)) == QuadSurd::integer(5, 3));
    CHECK(surd_mul(QuadSurd(5, 1, 1), QuadSurd(5, 1, -1)) == QuadSurd::integer(5, -4));
    QuadSurd two(4, 0, 1);
    CHECK(two.irrational() == 0);
    CHECK(two.rational() == 2);
    CHECK(surd_neg(QuadSurd(3, 1, 2)) == QuadSurd(3, -1, -2));
    CHECK_THROWS_AS(QuadSurd(5, 1, 1) + QuadSurd(7, 1, 1), RadicandMismatch);
    CHECK(QuadSurd(5, 0, 5).to_string() == "5*sqrt(5)");
}

TEST_CASE("sign fixtures")
{
    CHECK(surd_sign(QuadSurd(5, 9, -2)) == 1);
    CHECK(surd_sign(QuadSurd(5, 2, -1)) == -1);
    CHECK(surd_sign(QuadSurd(5, 0, 0)) == 0);
    CHECK(QuadSurd(2, 3, 0) > QuadSurd(2, 0, 2));   // 3 > 2.83
    CHECK(QuadSurd(2, 0, -3) < QuadSurd(2, -4, 0));  // -4.24 < -4
}

TEST_CASE("sign agrees with 256-bit evaluation")
{
    std::mt19937_64 rng(31337);
    for (int i = 0; i < 1000; ++i) {
        BigInt d = static_cast<unsigned long>(2 + rng() % ((1ull << 32) - 2));
        BigInt a = static_cast<unsigned long>(rng());
        BigInt b = static_cast<unsigned long>(rng() >> (rng() % 40));
        if (rng() & 1)
            a = -a;
        if (rng() & 1)
            b = -b;
        // Near-cancelling cases: a close to -b sqrt(d).
        if (i % 3 == 0) {
            BigInt s;
            BigInt bd = b * b * d;
            mpz_sqrt(s.get_mpz_t(), bd.get_mpz_t());
            a = (sgn(b) > 0 ? -s : s) + static_cast<long>(rng() % 3) - 1;
        }
        QuadSurd x(d, a, b);
        REQUIRE(surd_sign(x) == float_sign(x));
    }
}

TEST_CASE("m_max fixtures")
{
    CHECK(m_max(5, 1, 2) == 2);
    CHECK(m_max(4, 1, 3) == 1);
    CHECK(m_max(9, 1, 2) == 5);
    CHECK(m_within_bound(4, 1, 3, 1));
    CHECK_FALSE(m_within_bound(4, 1, 3, 2));
}

TEST_CASE("m_max against 200-bit floating evaluation")
{
    std::mt19937_64 rng(4242);
    for (int i = 0; i < 100; ++i) {
        BigInt q = static_cast<unsigned long>(4 + rng() % 999997);
        unsigned long d = 1 + rng() % 3;
        BigInt r = static_cast<unsigned long>(2 + rng() % 49);
        BigInt bound = m_max(q, d, r);
        REQUIRE(bound == m_max_float(pow_q(q, d), r, 200));
        REQUIRE(m_within_bound(q, d, r, bound));
        REQUIRE_FALSE(m_within_bound(q, d, r, bound + 1));
    }
}

TEST_CASE("unit-circle certificate fixtures")
{
    auto f = check_q_symmetry(IntPoly { 25, 5, 1, 1, 1 }, 2, 5);
    auto F = scaled_coefficients(f);
    REQUIRE(F.size() == 5);
    CHECK(F[0] == QuadSurd(5, 25, 0));
    CHECK(F[1] == QuadSurd(5, 0, 5));
    CHECK(F[2] == QuadSurd(5, 5, 0));
    CHECK(F[3] == QuadSurd(5, 0, 5));
    CHECK(F[4] == QuadSurd(5, 25, 0));
    LLReport ll = ll_check_default(f);
    CHECK(ll.passed);
    CHECK(ll.slack == QuadSurd(5, 45, -10));

    LLReport boundary = ll_unit_circle_check({ QuadSurd::integer(1, 1), QuadSurd::integer(1, 2),
                                               QuadSurd::integer(1, 1) },
                                             QuadSurd::integer(1, 1));
    CHECK(boundary.slack == QuadSurd::integer(1, 0));
    CHECK(boundary.passed);

    LLReport off = ll_unit_circle_check({ QuadSurd::integer(1, 1), QuadSurd::integer(1, 3),
                                          QuadSurd::integer(1, 1) },
                                        QuadSurd::integer(1, 1));
    CHECK(off.slack == QuadSurd::integer(1, -1));
    CHECK_FALSE(off.passed);

    CHECK_THROWS_AS(ll_unit_circle_check({ QuadSurd::integer(1, 1), QuadSurd::integer(1, 3),
                                           QuadSurd::integer(1, 2) },
                                         QuadSurd::integer(1, 1)),
                    NotReciprocal);
    CHECK_THROWS_AS(ll_unit_circle_check({ QuadSurd::integer(1, 1), QuadSurd::integer(1, 0),
                                           QuadSurd::integer(1, 1) },
                                         QuadSurd::integer(1, 2)),
                    HypothesisViolated);
}

TEST_CASE("square q collapses to integers")
{
    auto f = check_q_symmetry(IntPoly { 16, 4, 1, 1, 1 }, 2, 4);
    for (auto const & c : scaled_coefficients(f))
        CHECK(c.irrational() == 0);
    CHECK(ll_check_default(f).passed);
}

}
