#include "cuboid/linear_factor.hpp"

#include <algorithm>

#include "cuboid/cuboid_polys.hpp"
#include "cuboid/error.hpp"

namespace cuboid {

namespace {

// 1 + max |c_i| over the non-leading coefficients of a monic polynomial.
BigInt cauchy_bound(const IntPoly& p) {
  BigInt m = 0;
  const auto c = p.coeffs();
  for (std::size_t k = 0; k + 1 < c.size(); ++k) m = std::max(m, BigInt(abs(c[k])));
  return m + 1;
}

}  // namespace

RootSet integer_roots(const IntPoly& p) {
  if (!p.is_monic()) throw Error(Errc::NotMonic, "integer root search needs a monic polynomial");
  if (p.coeff(0) == 0) throw Error(Errc::ZeroConstantTerm, "strip powers of t first");

  RootSet roots;
  const BigInt bound = cauchy_bound(p);
  if (const auto half = compress_even(p)) {
    // t is a root iff s = t^2 is a root of the compressed polynomial; s
    // divides the same constant term.
    for (const auto& s : positive_divisors(p.coeff(0))) {
      if (s > bound * bound) break;
      const auto t = exact_sqrt(s);
      if (!t || eval(*half, s) != 0) continue;
      roots.insert(*t);
      roots.insert(-*t);
    }
    return roots;
  }
  for (const auto& d : positive_divisors(p.coeff(0))) {
    if (d > bound) break;
    if (eval(p, d) == 0) roots.insert(d);
    if (eval(p, -d) == 0) roots.insert(-d);
  }
  return roots;
}

IntPoly build_b4(const BigInt& b2, const BigInt& a, const BigInt& u) {
  return IntPoly{-(a * a * u * u), 0, b2, 0, 1};
}

IntPoly expand_product(const BigInt& a0, const BigInt& c0, const BigInt& b2, const BigInt& a,
                       const BigInt& u) {
  const IntPoly left{-(a * a * u * u), 0, c0 * c0 - a0 * a0, 0, 1};
  return left * build_b4(b2, a, u);
}

bool satisfies_linear_factor_system(const LinearFactorSolution& s, const BigInt& a,
                                    const BigInt& u) {
  const BigInt d = s.c0 * s.c0 - s.a0 * s.a0;
  const BigInt diff = u * u - a * a;
  return s.b2 + d == 6 * diff && d * s.b2 == diff * diff && s.a0 * s.c0 == a * u;
}

std::vector<LinearFactorSolution> solve_linear_factor_system(const BigInt& a, const BigInt& u) {
  if (a == 0 || u == 0) throw Error(Errc::ZeroParameter, "a and u must be nonzero");
  const BigInt product = a * u;
  const BigInt diff = u * u - a * a;
  std::vector<LinearFactorSolution> out;
  for (const auto& d : positive_divisors(product)) {
    for (const BigInt& a0 : {BigInt(d), BigInt(-d)}) {
      LinearFactorSolution s;
      s.a0 = a0;
      s.c0 = product / a0;
      s.b2 = 6 * diff - (s.c0 * s.c0 - a0 * a0);
      if (satisfies_linear_factor_system(s, a, u)) out.push_back(std::move(s));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

BigInt eliminated_quadratic(const BigInt& b2, const BigInt& d) {
  return b2 * b2 - 34 * d * b2 + d * d;
}

DiscriminantVerdict quadratic_discriminant_analysis(const BigInt& d) {
  // B2 = (34 D +- sqrt(1152 D^2)) / 2
  const BigInt disc = 1152 * d * d;
  DiscriminantVerdict v;
  const auto root = exact_sqrt(disc);
  if (!root) return v;
  for (const BigInt& num : {BigInt(34 * d - *root), BigInt(34 * d + *root)}) {
    if (!mpz_divisible_ui_p(num.get_mpz_t(), 2)) continue;
    BigInt b2 = num / 2;
    if (std::find(v.b2.begin(), v.b2.end(), b2) == v.b2.end()) v.b2.push_back(std::move(b2));
  }
  std::sort(v.b2.begin(), v.b2.end());
  v.solvable = !v.b2.empty();
  return v;
}

bool verify_no_linear_factor(const BigInt& a, const BigInt& u) {
  if (a == 0 || u == 0) throw Error(Errc::ZeroParameter, "a and u must be nonzero");
  if (a < 0 || u < 0) throw Error(Errc::NonPositiveParameter, "a and u must be positive");
  if (a == u) throw Error(Errc::EqualParameters, "a and u must differ");
  return integer_roots(build_p_au(a, u)).empty() && solve_linear_factor_system(a, u).empty();
}

}  // namespace cuboid
