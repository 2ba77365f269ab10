#pragma once

// Bounded parameter sweeps over the three polynomial families.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cuboid/cuboid_polys.hpp"
#include "cuboid/irreducibility.hpp"

namespace cuboid {

enum class Family { PAu, QPq, PAbu };

std::string_view to_string(Family f) noexcept;
/// Accepts "p_au", "q_pq", "p_abu".
std::optional<Family> parse_family(std::string_view name) noexcept;
std::size_t family_arity(Family f) noexcept;

/// Builds the family's polynomial from its parameters (arity checked).
IntPoly build_family(Family f, const std::vector<BigInt>& params);

struct SweepPoint {
  std::vector<BigInt> params;
  std::vector<SpecialCase> special;  // P_abu only
  bool reducible = false;
  std::vector<IntPoly> factors;       // when reducible
  std::vector<std::uint64_t> primes;  // primes consulted
  /// Special P_abu triples are expected to factor, everything else not.
  bool expected_reducible = false;

  bool consistent() const { return reducible == expected_reducible; }
};

struct SweepOptions {
  std::size_t prime_budget = kDefaultPrimeBudget;
  unsigned workers = 1;
};

struct SweepReport {
  Family family = Family::PAu;
  unsigned lower = 1;
  unsigned bound = 2;
  std::vector<SweepPoint> points;  // lexicographic parameter order
  double walltime_ms = 0;

  /// Points contradicting the expected verdict.
  std::vector<const SweepPoint*> counterexamples() const;
};

/// Parameter tuples a sweep visits: P_au and Q_pq take ordered coprime
/// pairs with distinct entries in [1, bound]; P_abu takes every ordered
/// triple in [1, bound]^3 with gcd(a, b, u) = 1.
std::vector<std::vector<BigInt>> sweep_parameters(Family f, unsigned bound);

/// Decides every parameter point with factor_over_z, fanning out over
/// `workers` threads. Throws InvalidArgument for bound < 2 or workers == 0.
SweepReport sweep_conjecture(Family f, unsigned bound, const SweepOptions& options = {});

}  // namespace cuboid
