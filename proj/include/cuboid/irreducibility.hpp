#pragma once

// Factorization over the integers and irreducibility certificates.
//
// Pipeline for a primitive input: squarefree decomposition over Z, then per
// squarefree part a search over small primes for degree patterns, then
// Hensel lifting at the prime with the fewest modular factors and subset
// recombination by increasing factor degree.

#include <cstddef>
#include <cstdint>
#include <variant>
#include <vector>

#include "cuboid/bigpoly.hpp"

namespace cuboid {

inline constexpr std::size_t kDefaultPrimeBudget = 12;

struct ModFactor {
  IntPoly factor;  // monic, coefficients in [0, p)
  unsigned multiplicity = 1;
};

/// Complete factorization of f mod prime into monic irreducibles, sorted by
/// degree then coefficients. Throws BadPrime when prime divides lc(f) and
/// InvalidArgument when prime is not a prime below 2^32.
std::vector<ModFactor> factor_mod_p(const IntPoly& f, const BigInt& prime);

/// Set of degrees reachable as sums of a sub-multiset of modular factor
/// degrees. Always contains 0 and the total degree.
class DegreePattern {
 public:
  DegreePattern() = default;
  static DegreePattern from_factor_degrees(const std::vector<std::size_t>& degrees);
  /// Every degree 0..total, the neutral element for intersection.
  static DegreePattern full(std::size_t total);

  std::size_t total_degree() const { return reachable_.empty() ? 0 : reachable_.size() - 1; }
  bool contains(std::size_t d) const { return d < reachable_.size() && reachable_[d]; }
  std::vector<std::size_t> degrees() const;
  /// Only 0 and the total degree remain.
  bool is_trivial() const;

  DegreePattern& intersect(const DegreePattern& other);

  friend bool operator==(const DegreePattern&, const DegreePattern&) = default;

 private:
  std::vector<bool> reachable_;
};

/// Throws NotSquarefreeModP when f is not squarefree mod prime, plus the
/// errors of factor_mod_p.
DegreePattern degree_pattern(const IntPoly& f, const BigInt& prime);

struct PrimePattern {
  std::uint64_t prime = 0;
  DegreePattern pattern;
};

/// The degree patterns at the listed primes intersect to {0, deg}.
struct Certificate {
  std::vector<PrimePattern> patterns;
};

/// Budget exhausted; `patterns` still constrains possible factor degrees.
struct Inconclusive {
  std::vector<PrimePattern> patterns;
  DegreePattern intersection;
};

using CertifyResult = std::variant<Certificate, Inconclusive>;

/// Tries the smallest primes not dividing lc(f) and keeping f squarefree,
/// stopping at the first `prime_budget` admissible ones or as soon as the
/// intersection is trivial. f must be primitive (NotPrimitive), squarefree
/// over Z (NotSquarefree) and nonconstant (ConstantPolynomial).
CertifyResult certify_irreducible(const IntPoly& f, std::size_t prime_budget = kDefaultPrimeBudget);

/// Recomputes every cited pattern and checks the intersection is {0, deg}.
bool verify_certificate(const IntPoly& f, const Certificate& cert);

struct IrreducibilityProof {
  enum class Method {
    DegreePatterns,  // `patterns` intersect to {0, deg}
    Recombination,   // every admissible subset of lifted factors failed
  };
  Method method = Method::DegreePatterns;
  std::vector<PrimePattern> patterns;
  std::uint64_t lift_prime = 0;
  std::size_t lift_exponent = 0;
  std::size_t modular_factors = 0;
  std::size_t subsets_tested = 0;
};

class FactorizationOutcome {
 public:
  static FactorizationOutcome reducible(std::vector<IntPoly> factors, std::vector<std::uint64_t> primes);
  static FactorizationOutcome irreducible(IrreducibilityProof proof);

  bool is_irreducible() const { return std::holds_alternative<IrreducibilityProof>(value_); }
  /// Nonconstant irreducible factors, with repetition; their product is the
  /// input. Empty for an irreducible input.
  const std::vector<IntPoly>& factors() const;
  const IrreducibilityProof& proof() const;
  /// Primes consulted while deciding, ascending and without repeats.
  const std::vector<std::uint64_t>& primes() const { return primes_; }

 private:
  std::variant<std::vector<IntPoly>, IrreducibilityProof> value_;
  std::vector<std::uint64_t> primes_;
};

/// Complete decision over Z for a primitive nonconstant f. A negative
/// leading coefficient is carried by the first factor.
/// Throws ZeroPolynomial, ConstantPolynomial or NotPrimitive.
FactorizationOutcome factor_over_z(const IntPoly& f, std::size_t prime_budget = kDefaultPrimeBudget);

/// Factor-coefficient bound used to size the lifting modulus:
///   2^n * (isqrt(sum f_i^2) + 1) * |lc(f)|
/// which dominates lc(f)/lc(g) * g for every integer factor g of f
/// (Landau-Mignotte). The lift runs until p^k exceeds twice this value.
BigInt factor_coefficient_bound(const IntPoly& f);

}  // namespace cuboid
