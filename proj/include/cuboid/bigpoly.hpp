#pragma once

// Dense univariate polynomials over the integers.
//
// Coefficients are stored lowest power first and the sequence never ends in
// a zero, so the zero polynomial is the empty sequence. Every operation is a
// pure function of its arguments.

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cuboid/arith.hpp"

namespace cuboid {

/// Degree of a polynomial; std::nullopt stands for the degree of the zero
/// polynomial (minus infinity). Never compare it with -1.
using Degree = std::optional<std::size_t>;

class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(std::initializer_list<BigInt> coeffs);
  explicit IntPoly(std::vector<BigInt> coeffs);

  /// c * t^k
  static IntPoly monomial(std::size_t k, BigInt c = 1);

  std::span<const BigInt> coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  Degree degree() const noexcept;
  /// Degree of a nonzero polynomial; throws ZeroPolynomial otherwise.
  std::size_t checked_degree() const;

  /// Coefficient of t^k, zero past the end.
  BigInt coeff(std::size_t k) const;
  const BigInt& leading() const;
  bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }

  IntPoly operator-() const;
  IntPoly& operator+=(const IntPoly& other);
  IntPoly& operator-=(const IntPoly& other);
  IntPoly& operator*=(const BigInt& scalar);

  friend IntPoly operator+(IntPoly p, const IntPoly& q) { return p += q; }
  friend IntPoly operator-(IntPoly p, const IntPoly& q) { return p -= q; }
  friend IntPoly operator*(const IntPoly& p, const IntPoly& q);
  friend IntPoly operator*(IntPoly p, const BigInt& c) { return p *= c; }
  friend IntPoly operator*(const BigInt& c, IntPoly p) { return p *= c; }

  friend bool operator==(const IntPoly& p, const IntPoly& q) { return p.coeffs_ == q.coeffs_; }
  /// Orders by degree, then coefficients from the top down.
  friend bool operator<(const IntPoly& p, const IntPoly& q);

  /// Rendering highest power first, e.g. "t^2 - 1".
  std::string to_string(char var = 't') const;

 private:
  void normalize();

  std::vector<BigInt> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const IntPoly& p);

IntPoly add(const IntPoly& p, const IntPoly& q);

/// Schoolbook product.
IntPoly mul(const IntPoly& p, const IntPoly& q);

/// Horner evaluation.
BigInt eval(const IntPoly& p, const BigInt& x);

/// Quotient q with d * q == p exactly, or nullopt when no integer-coefficient
/// quotient exists. Throws ZeroDivisor for d == 0.
std::optional<IntPoly> divide_exact(const IntPoly& p, const IntPoly& d);

/// r with r(t^2) == p(t), or nullopt when p has an odd-power term.
std::optional<IntPoly> compress_even(const IntPoly& p);

/// r(t) -> r(t^2).
IntPoly expand_even(const IntPoly& r);

/// Nonnegative gcd of the coefficients. Throws ZeroPolynomial for p == 0.
BigInt content(const IntPoly& p);

/// p / content(p), sign chosen so the leading coefficient is positive.
IntPoly primitive_part(const IntPoly& p);

IntPoly derivative(const IntPoly& p);

/// p(-t)
IntPoly reflect(const IntPoly& p);

/// Greatest common divisor over the integers: primitive, positive leading
/// coefficient, times the gcd of the contents. gcd(0, 0) == 0.
IntPoly gcd(const IntPoly& p, const IntPoly& q);

}  // namespace cuboid
