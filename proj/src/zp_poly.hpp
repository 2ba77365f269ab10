#pragma once

// Polynomials over the prime field F_p, p < 2^32, lowest power first.
// Internal to the irreducibility module.

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "cuboid/bigpoly.hpp"

namespace cuboid::zp {

using Coeffs = std::vector<std::uint64_t>;

struct Field {
  std::uint64_t p;

  std::uint64_t add(std::uint64_t x, std::uint64_t y) const { return (x + y) % p; }
  std::uint64_t sub(std::uint64_t x, std::uint64_t y) const { return (x + p - y) % p; }
  std::uint64_t mul(std::uint64_t x, std::uint64_t y) const { return (x * y) % p; }
  std::uint64_t neg(std::uint64_t x) const { return x == 0 ? 0 : p - x; }
  std::uint64_t pow(std::uint64_t x, std::uint64_t e) const;
  std::uint64_t inv(std::uint64_t x) const;
};

void trim(Coeffs& f);
inline std::size_t deg(const Coeffs& f) { return f.size() - 1; }  // f nonzero

Coeffs reduce(const IntPoly& f, const Field& F);
IntPoly lift(const Coeffs& f);

Coeffs add(const Coeffs& f, const Coeffs& g, const Field& F);
Coeffs sub(const Coeffs& f, const Coeffs& g, const Field& F);
Coeffs mul(const Coeffs& f, const Coeffs& g, const Field& F);
Coeffs scale(Coeffs f, std::uint64_t c, const Field& F);
Coeffs monic(const Coeffs& f, const Field& F);
Coeffs derivative(const Coeffs& f, const Field& F);

/// Quotient and remainder; g nonzero.
std::pair<Coeffs, Coeffs> divrem(const Coeffs& f, const Coeffs& g, const Field& F);
Coeffs rem(const Coeffs& f, const Coeffs& g, const Field& F);
Coeffs quo(const Coeffs& f, const Coeffs& g, const Field& F);

/// Monic gcd (zero when both are zero).
Coeffs gcd(Coeffs f, Coeffs g, const Field& F);

/// Bezout cofactors: s f + t g = gcd(f, g), gcd monic.
struct Xgcd {
  Coeffs g, s, t;
};
Xgcd xgcd(const Coeffs& f, const Coeffs& g, const Field& F);

/// base^e mod modulus, exponent as an arbitrary-size integer.
Coeffs powmod(const Coeffs& base, const BigInt& e, const Coeffs& modulus, const Field& F);

bool is_one(const Coeffs& f);

/// Squarefree decomposition of a monic polynomial: (factor, multiplicity).
std::vector<std::pair<Coeffs, unsigned>> squarefree(const Coeffs& f, const Field& F);

/// Distinct-degree split of a monic squarefree polynomial: (product of all
/// irreducible factors of degree d, d).
std::vector<std::pair<Coeffs, std::size_t>> distinct_degree(Coeffs f, const Field& F);

/// Irreducible monic factors of a monic squarefree f whose irreducible
/// factors all have degree d.
std::vector<Coeffs> equal_degree(const Coeffs& f, std::size_t d, const Field& F,
                                 std::mt19937_64& rng);

}  // namespace cuboid::zp
