#include "hensel.hpp"

#include "cuboid/error.hpp"

namespace cuboid::hensel {

IntPoly mod_nonneg(const IntPoly& f, const BigInt& m) {
  std::vector<BigInt> c(f.coeffs().begin(), f.coeffs().end());
  for (auto& x : c) mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return IntPoly(std::move(c));
}

IntPoly mod_symmetric(const IntPoly& f, const BigInt& m) {
  const BigInt half = m / 2;
  std::vector<BigInt> c(f.coeffs().begin(), f.coeffs().end());
  for (auto& x : c) {
    mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    if (x > half) x -= m;
  }
  return IntPoly(std::move(c));
}

namespace {

// Division by a monic divisor over Z/mZ.
std::pair<IntPoly, IntPoly> divrem_monic(const IntPoly& f, const IntPoly& h, const BigInt& m) {
  if (f.is_zero() || *f.degree() < *h.degree()) return {IntPoly{}, f};
  std::vector<BigInt> r(f.coeffs().begin(), f.coeffs().end());
  const auto hc = h.coeffs();
  const std::size_t dh = hc.size() - 1;
  std::vector<BigInt> q(r.size() - dh);
  for (std::size_t k = q.size(); k-- > 0;) {
    BigInt c = r[k + dh];
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dh; ++j) r[k + j] -= c * hc[j];
    q[k] = std::move(c);
  }
  r.resize(dh);
  return {mod_nonneg(IntPoly(std::move(q)), m), mod_nonneg(IntPoly(std::move(r)), m)};
}

struct Pair {
  IntPoly g, h, s, t;
};

// One quadratic step: congruences modulo m become congruences modulo m^2.
Pair step(const IntPoly& f, const Pair& in, const BigInt& m) {
  const BigInt m2 = m * m;
  const IntPoly e = mod_nonneg(f - in.g * in.h, m2);
  const auto [q, r] = divrem_monic(mod_nonneg(in.s * e, m2), in.h, m2);
  Pair out;
  out.g = mod_nonneg(in.g + in.t * e + q * in.g, m2);
  out.h = mod_nonneg(in.h + r, m2);
  const IntPoly b = mod_nonneg(in.s * out.g + in.t * out.h - IntPoly{1}, m2);
  const auto [c, d] = divrem_monic(mod_nonneg(in.s * b, m2), out.h, m2);
  out.s = mod_nonneg(in.s - d, m2);
  out.t = mod_nonneg(in.t - in.t * b - c * out.g, m2);
  return out;
}

}  // namespace

Lifted lift(const IntPoly& f, const std::vector<zp::Coeffs>& factors, const zp::Field& F,
            const BigInt& target) {
  if (factors.empty()) throw Error(Errc::Internal, "nothing to lift");
  const BigInt p(static_cast<unsigned long>(F.p));

  Lifted out;
  out.modulus = p;
  out.exponent = 1;
  while (out.modulus <= target) {
    out.modulus *= out.modulus;
    out.exponent *= 2;
  }

  // `rest` is lc(f) times the product of the factors not yet split off,
  // known modulo the final modulus after each round.
  IntPoly rest = f;
  const zp::Coeffs lc_mod_p = zp::reduce(IntPoly{f.leading()}, F);
  for (std::size_t i = 0; i + 1 < factors.size(); ++i) {
    zp::Coeffs others = lc_mod_p;
    for (std::size_t j = i + 1; j < factors.size(); ++j) others = zp::mul(others, factors[j], F);
    const auto bez = zp::xgcd(others, factors[i], F);
    if (!zp::is_one(bez.g)) throw Error(Errc::Internal, "modular factors are not coprime");

    Pair cur{zp::lift(others), zp::lift(factors[i]), zp::lift(bez.s), zp::lift(bez.t)};
    for (BigInt m = p; m < out.modulus; m *= m) cur = step(rest, cur, m);
    out.factors.push_back(cur.h);
    rest = cur.g;
  }

  BigInt inv_lc;
  if (mpz_invert(inv_lc.get_mpz_t(), BigInt(rest.leading()).get_mpz_t(),
                 out.modulus.get_mpz_t()) == 0)
    throw Error(Errc::Internal, "leading coefficient not invertible");
  out.factors.push_back(mod_nonneg(rest * inv_lc, out.modulus));
  return out;
}

}  // namespace cuboid::hensel
