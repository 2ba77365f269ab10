#pragma once

// The three parametric cuboid polynomials and their structural identities.

#include <string_view>
#include <vector>

#include "cuboid/bigpoly.hpp"

namespace cuboid {

/// Degree-12 polynomial in t for the edge parameters (a, b, u).
/// Throws ZeroParameter if any parameter is zero.
IntPoly build_p_abu(const BigInt& a, const BigInt& b, const BigInt& u);

/// Degree-8 two-parameter polynomial:
///   t^8 + 6(u^2-a^2) t^6 + (a^4-4a^2u^2+u^4) t^4 - 6a^2u^2(u^2-a^2) t^2 + a^4u^4
IntPoly build_p_au(const BigInt& a, const BigInt& u);

/// Degree-10 two-parameter polynomial with constant term -(pq)^10.
IntPoly build_q_pq(const BigInt& p, const BigInt& q);

/// True iff every odd-power coefficient vanishes (p(t) == p(-t)).
bool check_parity(const IntPoly& p);

/// Inversion symmetry p(t) == p(i*m/t) * t^8 / m^4 for an even octic
/// p = sum_k p_k t^(2k), checked as the denominator-free identity
///   m^4 * p_(4-k) == (-1)^k * m^(2k) * p_k   for k = 0..4.
/// Throws DegreeMismatch unless p is even of degree exactly 8.
bool check_inversion_symmetry(const IntPoly& p, const BigInt& m);

/// The six degenerate parameter relations under which the degree-12
/// polynomial is known to factor.
enum class SpecialCase {
  AEqualsB,          // a = b
  AllEqual,          // a = b = u
  BUEqualsASquared,  // b u = a^2
  AUEqualsBSquared,  // a u = b^2
  AEqualsU,          // a = u
  BEqualsU,          // b = u
};

std::string_view to_string(SpecialCase c) noexcept;

/// Exactly the relations that hold, in enum order. Parameters must be
/// positive (NonPositiveParameter otherwise).
std::vector<SpecialCase> detect_special_cases(const BigInt& a, const BigInt& b, const BigInt& u);

}  // namespace cuboid
