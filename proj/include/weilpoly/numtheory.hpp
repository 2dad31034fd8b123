#pragma once

// Elementary number theory on machine words and GMP integers.

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace weilpoly {

using BigInt = mpz_class;

class NumberTheoryError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class NotPrimePower : public NumberTheoryError {
public:
    using NumberTheoryError::NumberTheoryError;
};

class NotCoprime : public NumberTheoryError {
public:
    using NumberTheoryError::NumberTheoryError;
};

class NotInvertible : public NumberTheoryError {
public:
    using NumberTheoryError::NumberTheoryError;
};

/// q = p^n with p prime and n >= 1.
struct PrimePower {
    BigInt p;
    unsigned n = 0;
    BigInt q;
};

/// Number of Miller-Rabin rounds used above 2^64.  Failure probability for
/// a composite input is at most 4^-64.
inline constexpr int kProbablePrimeRounds = 64;

bool is_prime(std::uint64_t n);

/// Deterministic below 2^64 (fixed witness set); probabilistic with
/// kProbablePrimeRounds rounds above.
bool is_prime(BigInt const & n);

PrimePower prime_power_decompose(BigInt const & q);

/// Prime factorization by trial division, as (prime, exponent) pairs in
/// increasing order of prime.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t n);
std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t n);

/// Least e >= 1 with r^e = 1 (mod n).  r may be negative.
std::uint64_t multiplicative_order(std::int64_t r, std::uint64_t n);

bool is_primitive_root_mod(std::int64_t r, std::uint64_t n);

/// Smallest prime that is a primitive root modulo n, or 0 when none exists
/// below the search limit.
std::uint64_t least_prime_primitive_root(std::uint64_t n,
                                         std::uint64_t limit = 1'000'000);

/// Inverse of a modulo the prime p, in [0, p).
std::uint64_t mod_inverse(std::int64_t a, std::uint64_t p);

/// floor(sqrt(n)).
BigInt integer_sqrt(BigInt const & n);

bool is_perfect_square(BigInt const & n);

/// The primes in increasing order, starting at 2, until count are collected.
std::vector<std::uint64_t> first_primes(std::size_t count);

} // namespace weilpoly
