#pragma once

// Integer helpers shared by the polynomial and search modules.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace cuboid {

using BigInt = mpz_class;

bool is_perfect_square(const BigInt& n);

/// Exact square root when n is a perfect square.
std::optional<BigInt> exact_sqrt(const BigInt& n);

BigInt gcd(const BigInt& a, const BigInt& b);

bool coprime(const BigInt& a, const BigInt& b);
bool coprime(const BigInt& a, const BigInt& b, const BigInt& c);

BigInt pow(const BigInt& base, unsigned long exponent);

/// Prime factorization of |n| as (prime, exponent) pairs in increasing order.
/// Trial division up to a small limit, then Pollard-Brent on the cofactor.
/// n must be nonzero.
std::vector<std::pair<BigInt, unsigned>> factor_integer(const BigInt& n);

/// All positive divisors of |n|, ascending. n must be nonzero.
std::vector<BigInt> positive_divisors(const BigInt& n);

bool is_prime(const BigInt& n);

/// Primes in increasing order starting from 2, generated lazily.
class PrimeSequence {
 public:
  std::uint64_t next();

 private:
  std::uint64_t current_ = 1;
};

/// Conversion that throws InvalidArgument when the value does not fit.
std::int64_t to_int64(const BigInt& n);

}  // namespace cuboid
