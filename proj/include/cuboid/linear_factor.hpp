#pragma once

// Linear factors of the degree-8 polynomial P_au(t).
//
// A linear factor t - A0 forces the factorization
//   P_au(t) = (t^4 + (C0^2 - A0^2) t^2 - a^2 u^2) (t^4 + B2 t^2 - a^2 u^2)
// with A0 * C0 = a u, and matching coefficients gives the Diophantine system
//   B2 + C0^2 - A0^2 = 6 (u^2 - a^2)
//   (C0^2 - A0^2) B2 = (u^2 - a^2)^2
//   A0 C0            = a u.
// This module searches for integer roots directly and solves the system by
// divisor enumeration, so the two answers can be compared.

#include <set>
#include <vector>

#include "cuboid/bigpoly.hpp"

namespace cuboid {

using RootSet = std::set<BigInt>;

/// Every integer root of a monic polynomial with nonzero constant term,
/// found by testing the signed divisors of the constant term (even inputs
/// are searched through their s = t^2 compression).
/// Throws NotMonic or ZeroConstantTerm.
RootSet integer_roots(const IntPoly& p);

/// t^4 + B2 t^2 - a^2 u^2
IntPoly build_b4(const BigInt& b2, const BigInt& a, const BigInt& u);

/// (t^4 + (C0^2 - A0^2) t^2 - a^2 u^2) * build_b4(B2, a, u)
IntPoly expand_product(const BigInt& a0, const BigInt& c0, const BigInt& b2, const BigInt& a,
                       const BigInt& u);

struct LinearFactorSolution {
  BigInt a0;
  BigInt b2;
  BigInt c0;

  friend bool operator==(const LinearFactorSolution& x, const LinearFactorSolution& y) {
    return x.a0 == y.a0 && x.b2 == y.b2 && x.c0 == y.c0;
  }
  friend bool operator<(const LinearFactorSolution& x, const LinearFactorSolution& y) {
    if (x.a0 != y.a0) return x.a0 < y.a0;
    if (x.b2 != y.b2) return x.b2 < y.b2;
    return x.c0 < y.c0;
  }
};

/// All three equations of the system hold exactly.
bool satisfies_linear_factor_system(const LinearFactorSolution& s, const BigInt& a, const BigInt& u);

/// Complete integer solution set, sorted. Enumerates A0 over the signed
/// divisors of a*u; C0 and B2 are then forced. Throws ZeroParameter.
std::vector<LinearFactorSolution> solve_linear_factor_system(const BigInt& a, const BigInt& u);

/// B2^2 - 34 D B2 + D^2, the quadratic in B2 obtained by squaring the first
/// equation and subtracting 36 times the second (D = C0^2 - A0^2).
BigInt eliminated_quadratic(const BigInt& b2, const BigInt& d);

struct DiscriminantVerdict {
  bool solvable = false;
  /// Integer roots B2 of the eliminated quadratic, ascending.
  std::vector<BigInt> b2;
};

/// Integer solvability of B2^2 - 34 D B2 + D^2 = 0 in B2. The discriminant
/// is 1152 D^2, a perfect square only for D = 0.
DiscriminantVerdict quadratic_discriminant_analysis(const BigInt& d);

/// For positive a != u: no integer root and no solution of the system.
/// Both are computed independently. Throws ZeroParameter,
/// NonPositiveParameter or EqualParameters.
bool verify_no_linear_factor(const BigInt& a, const BigInt& u);

}  // namespace cuboid
