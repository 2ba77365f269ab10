#pragma once

// p-adic lifting of a modular factorization. Internal to the
// irreducibility module.

#include <cstddef>
#include <vector>

#include "cuboid/bigpoly.hpp"
#include "zp_poly.hpp"

namespace cuboid::hensel {

/// Coefficients reduced into [0, m).
IntPoly mod_nonneg(const IntPoly& f, const BigInt& m);

/// Coefficients reduced into (-m/2, m/2].
IntPoly mod_symmetric(const IntPoly& f, const BigInt& m);

struct Lifted {
  std::vector<IntPoly> factors;  // monic, nonnegative coefficients mod `modulus`
  BigInt modulus;                // p^exponent
  std::size_t exponent = 0;
};

/// Lifts f == lc(f) * prod(factors) (mod p) to a factorization modulo p^k,
/// where k is the first power of two with p^k > target. The factors must be
/// monic, pairwise coprime mod p, and the prime must not divide lc(f).
Lifted lift(const IntPoly& f, const std::vector<zp::Coeffs>& factors, const zp::Field& F,
            const BigInt& target);

}  // namespace cuboid::hensel
