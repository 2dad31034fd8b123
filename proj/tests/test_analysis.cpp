#include <doctest.h>

#include <cmath>
#include <random>

#include "support.hpp"
#include "weilpoly/analysis.hpp"

using namespace weilpoly;

namespace {

QPolynomial qpoly(IntPoly f, long q)
{
    auto g = static_cast<unsigned>(f.degree() / 2);
    return check_q_symmetry(std::move(f), g, q);
}

ScaledSurd point(long d, long a, long b = 0) { return { QuadSurd(d, a, b), 0 }; }

} // namespace

TEST_SUITE("analysis") {

TEST_CASE("real Weil transform fixtures")
{
    auto w = real_weil_transform(qpoly({ 25, 5, 1, 1, 1 }, 5));
    CHECK(w.h == IntPoly { -9, 1, 1 });
    CHECK(real_weil_transform(qpoly({ 3, 0, 1 }, 3)).h == IntPoly { 0, 1 });
    CHECK(real_weil_transform(qpoly({ 4, 0, 3, 0, 1 }, 2)).h == IntPoly { -1, 0, 1 });
    CHECK_THROWS_AS(real_weil_transform(IntPoly { 25, 6, 1, 1, 1 }, 5), NotSymmetric);
}

TEST_CASE("real Weil transform round trip")
{
    std::mt19937_64 rng(17);
    for (long q : { 2, 3, 4, 5, 8, 9 }) {
        for (int i = 0; i < 30; ++i) {
            unsigned g = 1 + static_cast<unsigned>(rng() % 8);
            IntPoly f = testing::random_symmetric(rng, g, 10, q);
            auto w = real_weil_transform(qpoly(f, q));
            REQUIRE(w.h.degree() == static_cast<int>(g));
            REQUIRE(reconstruct(w) == f);
        }
    }
}

TEST_CASE("Sturm counts")
{
    CHECK(sturm_count_in_interval(IntPoly { -2, 0, 1 }, QuadSurd::integer(2, 0), QuadSurd::integer(2, 2)) == 1);
    CHECK(sturm_count_in_interval(IntPoly { -9, 1, 1 }, QuadSurd(5, 0, -2), QuadSurd(5, 0, 2)) == 2);
    CHECK(sturm_count_in_interval(IntPoly { -9, 0, 1 }, QuadSurd(2, 0, -2), QuadSurd(2, 0, 2)) == 0);
    SturmChain chain(IntPoly { -2, 0, 1 });
    CHECK(chain.count_real() == 2);
    CHECK_THROWS_AS(chain.count(point(2, 0, 1), point(2, 3)), EndpointRoot);
    CHECK_THROWS_AS(SturmChain(IntPoly { 1, 2, 1 }), NotSquarefree);
    // Scaled points: x^2 - 2 has one root in (5/4, 3/2].
    CHECK(chain.count({ QuadSurd::integer(2, 5), 2 }, { QuadSurd::integer(2, 3), 1 }) == 1);
    CHECK(sign_at(IntPoly { -2, 0, 1 }, { QuadSurd::integer(2, 3), 1 }) == 1);
}

TEST_CASE("Sturm real-root count matches the numeric oracle")
{
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<long> coef(-20, 20);
    int checked = 0;
    while (checked < 100) {
        std::vector<BigInt> c(2 + rng() % 7);
        for (auto & x : c)
            x = coef(rng);
        if (c.back() == 0)
            c.back() = 1;
        IntPoly h(std::move(c));
        if (gcd(h, h.derivative()).degree() > 0)
            continue;
        ++checked;
        RootReport nr = numeric_roots(h, 256);
        REQUIRE(SturmChain(h).count_real() == nr.real_root_count);
    }
}

TEST_CASE("exact modulus decision fixtures")
{
    auto bad = exact_modulus_check(qpoly({ 8, 4, 2, 5, 1, 1, 1 }, 2));
    CHECK_FALSE(bad.on_circle);
    REQUIRE(bad.witness);
    CHECK(bad.witness->kind == OffCircleWitness::Kind::real_root_outside);
    REQUIRE(bad.witness->lo);
    // The isolated root of h lies below -2 sqrt(2).
    CHECK(bad.witness->hi->approx() < -2 * std::sqrt(2.0));

    CHECK(exact_modulus_check(qpoly({ 64, 16, 2, 2, 1 }, 8)).on_circle);
    CHECK(exact_modulus_check(qpoly({ 25, 5, 1, 1, 1 }, 5)).on_circle);
}

TEST_CASE("endpoint roots and multiplicities")
{
    // (t^2 - q)^2 = t^4 - 2q t^2 + q^2: roots +-sqrt(q).
    CHECK(exact_modulus_check(qpoly({ 25, 0, -10, 0, 1 }, 5)).on_circle);
    CHECK(exact_modulus_check(qpoly({ 16, 0, -8, 0, 1 }, 4)).on_circle);
    // (t - 2)^2 (t + 2)^2 with q = 4.
    CHECK(exact_modulus_check(qpoly({ 16, 0, -8, 0, 1 }, 4)).endpoint_roots == 2);
    // Repeated factor (t^2 + t + 5)^2.
    IntPoly sq = IntPoly { 5, 1, 1 } * IntPoly { 5, 1, 1 };
    CHECK(exact_modulus_check(qpoly(sq, 5)).on_circle);
    // (t^2 - 6t + 5)(t^2 + t + 5): roots 1 and 5 are real, off circle.
    IntPoly mixed = IntPoly { 5, -6, 1 } * IntPoly { 5, 1, 1 };
    auto mc = exact_modulus_check(qpoly(mixed, 5));
    CHECK_FALSE(mc.on_circle);
    // Nonreal roots of h: t^4 + q^2 has roots of modulus sqrt(q) ... and
    // h = x^2 - 2q, real.  h = x^2 + 1 gives f = t^4 + (2q + 1) t^2 + q^2.
    auto nonreal = exact_modulus_check(qpoly({ 4, 0, 5, 0, 1 }, 2));
    CHECK_FALSE(nonreal.on_circle);
    REQUIRE(nonreal.witness);
    CHECK(nonreal.witness->kind == OffCircleWitness::Kind::nonreal_roots);
    CHECK(nonreal.witness->nonreal_count == 2);
}

TEST_CASE("numeric oracle fixtures")
{
    RootReport r = numeric_roots(IntPoly { -2, 0, 1 }, 128, BigInt(2));
    CHECK(r.max_modulus_deviation < 1e-30);
    CHECK(r.real_root_count == 2);

    r = numeric_roots(IntPoly { 25, 5, 1, 1, 1 }, 128, BigInt(5));
    CHECK(r.max_modulus_deviation < 1e-12);

    r = numeric_roots(IntPoly { 8, 4, 2, 5, 1, 1, 1 }, 128, BigInt(2));
    int on = 0, off = 0;
    for (double d : r.deviations) {
        on += d < 1e-12;
        off += d > 0.1;
    }
    CHECK(on == 4);
    CHECK(off == 2);
    CHECK(r.real_root_count == 2);
    CHECK(default_precision(IntPoly { 25, 5, 1, 1, 1 }) == 128);
    CHECK_THROWS_AS(numeric_roots(IntPoly { 3 }, 128), std::domain_error);
}

TEST_CASE("exact decision agrees with the numeric oracle")
{
    std::mt19937_64 rng(23);
    int positives = 0;
    for (long q : { 2, 3, 4, 5, 8, 9 }) {
        for (int i = 0; i < 25; ++i) {
            unsigned g = 1 + static_cast<unsigned>(rng() % 8);
            IntPoly f = (i % 2) ? testing::random_symmetric(rng, g, 10, q)
                                : testing::random_on_circle(rng, g, q);
            bool exact = exact_modulus_check(qpoly(f, q)).on_circle;
            RootReport nr = numeric_roots(f, 128, BigInt(q));
            // Repeated roots lose half the precision; the tolerance absorbs it.
            REQUIRE(exact == (nr.max_modulus_deviation < 1e-9));
            positives += exact;
        }
    }
    CHECK(positives > 50);
}

TEST_CASE("LL sufficiency implies the exact decision")
{
    std::mt19937_64 rng(29);
    for (long q : { 2, 3, 4, 5, 8, 9 }) {
        for (int i = 0; i < 40; ++i) {
            unsigned g = 1 + static_cast<unsigned>(rng() % 6);
            auto f = qpoly(testing::random_symmetric(rng, g, 3, q), q);
            if (ll_check_default(f).passed)
                REQUIRE(exact_modulus_check(f).on_circle);
        }
    }
}

TEST_CASE("root-subset factor search")
{
    // Irreducible over Q but split modulo every prime (Galois group V4).
    FactorSearch v4 = factor_search_by_roots(IntPoly { 64, 16, 2, 2, 1 });
    CHECK(v4.decided);
    CHECK(v4.irreducible);

    FactorSearch split = factor_search_by_roots(IntPoly { 5, 1, 1 } * IntPoly { 5, -6, 1 });
    CHECK(split.decided);
    REQUIRE(split.factor);
    CHECK(pseudo_remainder(IntPoly { 5, 1, 1 } * IntPoly { 5, -6, 1 }, *split.factor).is_zero());
    CHECK(split.factor->degree() <= 2);

    FactorSearch rep = factor_search_by_roots(IntPoly { 1, 0, 2, 0, 1 });
    REQUIRE(rep.factor);
    CHECK(*rep.factor == IntPoly { 1, 0, 1 });

    CHECK(factor_search_by_roots(cyclotomic(25)).irreducible);
    CHECK(factor_search_by_roots(IntPoly { 3, 2 }).irreducible);
    // Non-monic product 2t^2 + 1 times 3t - 1.
    FactorSearch nm = factor_search_by_roots(IntPoly { 1, 0, 2 } * IntPoly { -1, 3 });
    REQUIRE(nm.factor);
}

}
