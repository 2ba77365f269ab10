#include "cuboid/cuboid_polys.hpp"

#include <string>

#include "cuboid/error.hpp"

namespace cuboid {

namespace {

void require_nonzero(const BigInt& x, const char* name) {
  if (x == 0) throw Error(Errc::ZeroParameter, std::string(name) + " must be nonzero");
}

}  // namespace

IntPoly build_p_abu(const BigInt& a, const BigInt& b, const BigInt& u) {
  require_nonzero(a, "a");
  require_nonzero(b, "b");
  require_nonzero(u, "u");
  const BigInt a2 = a * a, b2 = b * b, u2 = u * u;
  const BigInt a4 = a2 * a2, b4 = b2 * b2, u4 = u2 * u2;

  std::vector<BigInt> c(13);
  c[12] = 1;
  c[10] = 6 * u2 - 2 * a2 - 2 * b2;
  c[8] = u4 + b4 + a4 + 4 * a2 * u2 + 4 * b2 * u2 - 12 * b2 * a2;
  c[6] = 6 * a4 * u2 + 6 * u2 * b4 - 8 * a2 * b2 * u2 - 2 * u4 * a2 - 2 * u4 * b2 - 2 * a4 * b2 -
         2 * b4 * a2;
  c[4] = 4 * u2 * b4 * a2 + 4 * a4 * u2 * b2 - 12 * u4 * a2 * b2 + u4 * a4 + u4 * b4 + a4 * b4;
  c[2] = 6 * a4 * u2 * b4 - 2 * u4 * a4 * b2 - 2 * u4 * a2 * b4;
  c[0] = u4 * a4 * b4;
  return IntPoly(std::move(c));
}

IntPoly build_p_au(const BigInt& a, const BigInt& u) {
  require_nonzero(a, "a");
  require_nonzero(u, "u");
  const BigInt a2 = a * a, u2 = u * u;
  const BigInt diff = u2 - a2;

  std::vector<BigInt> c(9);
  c[8] = 1;
  c[6] = 6 * diff;
  c[4] = a2 * a2 - 4 * a2 * u2 + u2 * u2;
  c[2] = -6 * a2 * u2 * diff;
  c[0] = u2 * u2 * a2 * a2;
  return IntPoly(std::move(c));
}

IntPoly build_q_pq(const BigInt& p, const BigInt& q) {
  require_nonzero(p, "p");
  require_nonzero(q, "q");
  const BigInt p2 = p * p, q2 = q * q;
  const BigInt p4 = p2 * p2, q4 = q2 * q2;
  const BigInt p6 = p4 * p2, q6 = q4 * q2;
  const BigInt p8 = p4 * p4, q8 = q4 * q4;

  std::vector<BigInt> c(11);
  c[10] = 1;
  c[8] = (2 * q2 + p2) * (3 * q2 - 2 * p2);
  c[6] = q8 + 10 * p2 * q6 + 4 * p4 * q4 - 14 * p6 * q2 + p8;
  c[4] = -p2 * q2 * (q8 - 14 * p2 * q6 + 4 * p4 * q4 + 10 * p6 * q2 + p8);
  c[2] = -p6 * q6 * (q2 + 2 * p2) * (-2 * q2 + 3 * p2);
  c[0] = -(q8 * q2) * (p8 * p2);
  return IntPoly(std::move(c));
}

bool check_parity(const IntPoly& p) { return compress_even(p).has_value(); }

bool check_inversion_symmetry(const IntPoly& p, const BigInt& m) {
  const auto half = compress_even(p);
  if (p.degree() != Degree{8} || !half)
    throw Error(Errc::DegreeMismatch, "inversion symmetry needs an even polynomial of degree 8");
  const BigInt m4 = pow(m, 4);
  for (unsigned k = 0; k <= 4; ++k) {
    BigInt rhs = pow(m, 2 * k) * half->coeff(k);
    if (k % 2 == 1) rhs = -rhs;
    if (m4 * half->coeff(4 - k) != rhs) return false;
  }
  return true;
}

std::string_view to_string(SpecialCase c) noexcept {
  switch (c) {
    case SpecialCase::AEqualsB: return "a=b";
    case SpecialCase::AllEqual: return "a=b=u";
    case SpecialCase::BUEqualsASquared: return "bu=a^2";
    case SpecialCase::AUEqualsBSquared: return "au=b^2";
    case SpecialCase::AEqualsU: return "a=u";
    case SpecialCase::BEqualsU: return "b=u";
  }
  return "?";
}

std::vector<SpecialCase> detect_special_cases(const BigInt& a, const BigInt& b, const BigInt& u) {
  if (a <= 0 || b <= 0 || u <= 0)
    throw Error(Errc::NonPositiveParameter, "special cases are defined for positive a, b, u");
  std::vector<SpecialCase> out;
  if (a == b) out.push_back(SpecialCase::AEqualsB);
  if (a == b && b == u) out.push_back(SpecialCase::AllEqual);
  if (b * u == a * a) out.push_back(SpecialCase::BUEqualsASquared);
  if (a * u == b * b) out.push_back(SpecialCase::AUEqualsBSquared);
  if (a == u) out.push_back(SpecialCase::AEqualsU);
  if (b == u) out.push_back(SpecialCase::BEqualsU);
  return out;
}

}  // namespace cuboid
