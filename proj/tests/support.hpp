#pragma once

// Shared generators for property tests and the acceptance suite.

#include <algorithm>
#include <random>

#include "weilpoly/intpoly.hpp"

namespace weilpoly::testing {

/// t^(2g) + sum_{j<g} a_j (t^(2g-j) + q^(g-j) t^j) + a_g t^g + q^g with
/// |a_j| <= bound.
inline IntPoly random_symmetric(std::mt19937_64 & rng, unsigned g, long bound, BigInt const & q)
{
    std::uniform_int_distribution<long> coef(-bound, bound);
    std::vector<BigInt> c(2 * g + 1);
    c[2 * g] = 1;
    BigInt qp;
    mpz_pow_ui(qp.get_mpz_t(), q.get_mpz_t(), g);
    c[0] = qp;
    for (unsigned j = 1; j < g; ++j) {
        BigInt a = coef(rng);
        mpz_pow_ui(qp.get_mpz_t(), q.get_mpz_t(), g - j);
        c[2 * g - j] = a;
        c[j] = a * qp;
    }
    c[g] = coef(rng);
    return IntPoly(std::move(c));
}

/// Symmetric polynomial with every root on |z| = sqrt(q): a product of
/// t^2 - x t + q over distinct integers |x| <= 2 sqrt(q), at most g of them.
inline IntPoly random_on_circle(std::mt19937_64 & rng, unsigned g, long q)
{
    long s = 0;
    while ((s + 1) * (s + 1) <= 4 * q)
        ++s;
    std::vector<long> xs;
    for (long x = -s; x <= s; ++x)
        xs.push_back(x);
    std::shuffle(xs.begin(), xs.end(), rng);
    xs.resize(std::min<std::size_t>(g, xs.size()));
    IntPoly out { 1 };
    for (long x : xs)
        out = out * IntPoly { q, -x, 1 };
    return out;
}

} // namespace weilpoly::testing
