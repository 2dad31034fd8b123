#include "weilpoly/numtheory.hpp"

#include <array>
#include <numeric>
#include <string>

namespace weilpoly {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t n)
{
    return static_cast<std::uint64_t>(
            static_cast<unsigned __int128>(a) * b % n);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t n)
{
    if (n == 1)
        return 0;
    std::uint64_t result = 1;
    base %= n;
    for (; e; e >>= 1) {
        if (e & 1)
            result = mulmod(result, base, n);
        base = mulmod(base, base, n);
    }
    return result;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b)
{
    return std::gcd(a, b);
}

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    static constexpr std::array<std::uint64_t, 12> witnesses {
        2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37 };
    for (auto w : witnesses) {
        if (n % w == 0)
            return n == w;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This witness set is deterministic for every n < 3.3 * 10^24.
    for (auto w : witnesses) {
        std::uint64_t x = powmod(w, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (unsigned i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

bool is_prime(BigInt const & n)
{
    if (sgn(n) < 0)
        return false;
    if (mpz_fits_ulong_p(n.get_mpz_t()))
        return is_prime(static_cast<std::uint64_t>(n.get_ui()));
    return mpz_probab_prime_p(n.get_mpz_t(), kProbablePrimeRounds) != 0;
}

PrimePower prime_power_decompose(BigInt const & q)
{
    if (q < 2)
        throw NotPrimePower(q.get_str() + " is not a prime power");
    auto bits = static_cast<unsigned>(mpz_sizeinbase(q.get_mpz_t(), 2));
    for (unsigned n = bits; n >= 1; --n) {
        BigInt root;
        if (mpz_root(root.get_mpz_t(), q.get_mpz_t(), n) == 0)
            continue;
        if (is_prime(root))
            return PrimePower { root, n, q };
    }
    throw NotPrimePower(q.get_str() + " is not a prime power");
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n)
{
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        if (n % d)
            continue;
        unsigned e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        out.emplace_back(d, e);
    }
    if (n > 1)
        out.emplace_back(n, 1);
    return out;
}

std::uint64_t euler_phi(std::uint64_t n)
{
    std::uint64_t phi = n;
    for (auto [p, e] : factorize(n))
        phi = phi / p * (p - 1);
    return phi;
}

static std::uint64_t reduce_signed(std::int64_t a, std::uint64_t n)
{
    if (a >= 0)
        return static_cast<std::uint64_t>(a) % n;
    auto mag = static_cast<std::uint64_t>(-(a + 1)) + 1;
    auto r = mag % n;
    return r == 0 ? 0 : n - r;
}

std::uint64_t multiplicative_order(std::int64_t r, std::uint64_t n)
{
    if (n < 2)
        throw NumberTheoryError("multiplicative_order: modulus must be >= 2");
    std::uint64_t a = reduce_signed(r, n);
    if (gcd(a, n) != 1)
        throw NotCoprime("multiplicative_order: gcd(" + std::to_string(r)
                         + ", " + std::to_string(n) + ") > 1");
    // The order divides phi(n); strip prime factors while the power stays 1.
    std::uint64_t order = euler_phi(n);
    for (auto [p, e] : factorize(order)) {
        for (unsigned i = 0; i < e; ++i) {
            if (powmod(a, order / p, n) != 1)
                break;
            order /= p;
        }
    }
    return order;
}

bool is_primitive_root_mod(std::int64_t r, std::uint64_t n)
{
    if (n < 2)
        return false;
    if (gcd(reduce_signed(r, n), n) != 1)
        return false;
    return multiplicative_order(r, n) == euler_phi(n);
}

std::uint64_t least_prime_primitive_root(std::uint64_t n, std::uint64_t limit)
{
    for (std::uint64_t r = 2; r < limit; ++r) {
        if (is_prime(r) && is_primitive_root_mod(static_cast<std::int64_t>(r), n))
            return r;
    }
    return 0;
}

std::uint64_t mod_inverse(std::int64_t a, std::uint64_t p)
{
    std::uint64_t x = reduce_signed(a, p);
    if (x == 0 || gcd(x, p) != 1)
        throw NotInvertible(std::to_string(a) + " is not invertible modulo "
                            + std::to_string(p));
    // Extended Euclid on signed 128-bit values.
    __int128 old_r = x, r = p, old_s = 1, s = 0;
    while (r != 0) {
        __int128 quot = old_r / r;
        auto tmp = old_r - quot * r;
        old_r = r;
        r = tmp;
        tmp = old_s - quot * s;
        old_s = s;
        s = tmp;
    }
    __int128 inv = old_s % static_cast<__int128>(p);
    if (inv < 0)
        inv += p;
    return static_cast<std::uint64_t>(inv);
}

BigInt integer_sqrt(BigInt const & n)
{
    if (sgn(n) < 0)
        throw NumberTheoryError("integer_sqrt of a negative number");
    BigInt root;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    return root;
}

bool is_perfect_square(BigInt const & n)
{
    return sgn(n) >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

std::vector<std::uint64_t> first_primes(std::size_t count)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t k = 2; out.size() < count; ++k) {
        if (is_prime(k))
            out.push_back(k);
    }
    return out;
}

} // namespace weilpoly
