#include "zp_poly.hpp"

#include <algorithm>

namespace cuboid::zp {

std::uint64_t Field::pow(std::uint64_t x, std::uint64_t e) const {
  std::uint64_t r = 1 % p;
  x %= p;
  while (e) {
    if (e & 1) r = mul(r, x);
    x = mul(x, x);
    e >>= 1;
  }
  return r;
}

std::uint64_t Field::inv(std::uint64_t x) const { return pow(x, p - 2); }

void trim(Coeffs& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Coeffs reduce(const IntPoly& f, const Field& F) {
  Coeffs r;
  r.reserve(f.coeffs().size());
  BigInt m;
  for (const auto& c : f.coeffs()) {
    mpz_fdiv_r_ui(m.get_mpz_t(), c.get_mpz_t(), F.p);
    r.push_back(m.get_ui());
  }
  trim(r);
  return r;
}

IntPoly lift(const Coeffs& f) {
  std::vector<BigInt> c;
  c.reserve(f.size());
  for (auto x : f) c.emplace_back(static_cast<unsigned long>(x));
  return IntPoly(std::move(c));
}

Coeffs add(const Coeffs& f, const Coeffs& g, const Field& F) {
  Coeffs r(std::max(f.size(), g.size()), 0);
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = f[i];
  for (std::size_t i = 0; i < g.size(); ++i) r[i] = F.add(r[i], g[i]);
  trim(r);
  return r;
}

Coeffs sub(const Coeffs& f, const Coeffs& g, const Field& F) {
  Coeffs r(std::max(f.size(), g.size()), 0);
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = f[i];
  for (std::size_t i = 0; i < g.size(); ++i) r[i] = F.sub(r[i], g[i]);
  trim(r);
  return r;
}

Coeffs mul(const Coeffs& f, const Coeffs& g, const Field& F) {
  if (f.empty() || g.empty()) return {};
  Coeffs r(f.size() + g.size() - 1, 0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 0) continue;
    for (std::size_t j = 0; j < g.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(f[i], g[j]));
  }
  trim(r);
  return r;
}

Coeffs scale(Coeffs f, std::uint64_t c, const Field& F) {
  for (auto& x : f) x = F.mul(x, c);
  trim(f);
  return f;
}

Coeffs monic(const Coeffs& f, const Field& F) {
  if (f.empty()) return f;
  return scale(f, F.inv(f.back()), F);
}

Coeffs derivative(const Coeffs& f, const Field& F) {
  if (f.size() <= 1) return {};
  Coeffs r(f.size() - 1);
  for (std::size_t k = 1; k < f.size(); ++k) r[k - 1] = F.mul(f[k], k % F.p);
  trim(r);
  return r;
}

std::pair<Coeffs, Coeffs> divrem(const Coeffs& f, const Coeffs& g, const Field& F) {
  if (f.size() < g.size()) return {{}, f};
  Coeffs r = f;
  Coeffs q(f.size() - g.size() + 1, 0);
  const std::uint64_t inv_lead = F.inv(g.back());
  for (std::size_t k = q.size(); k-- > 0;) {
    const std::uint64_t c = F.mul(r[k + g.size() - 1], inv_lead);
    q[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < g.size(); ++j) r[k + j] = F.sub(r[k + j], F.mul(c, g[j]));
  }
  r.resize(g.size() - 1);
  trim(r);
  trim(q);
  return {q, r};
}

Coeffs rem(const Coeffs& f, const Coeffs& g, const Field& F) { return divrem(f, g, F).second; }
Coeffs quo(const Coeffs& f, const Coeffs& g, const Field& F) { return divrem(f, g, F).first; }

Coeffs gcd(Coeffs f, Coeffs g, const Field& F) {
  while (!g.empty()) {
    Coeffs r = rem(f, g, F);
    f = std::move(g);
    g = std::move(r);
  }
  return monic(f, F);
}

Xgcd xgcd(const Coeffs& f, const Coeffs& g, const Field& F) {
  Coeffs r0 = f, r1 = g;
  Coeffs s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r] = divrem(r0, r1, F);
    r0 = std::move(r1);
    r1 = std::move(r);
    Coeffs s2 = sub(s0, mul(q, s1, F), F);
    Coeffs t2 = sub(t0, mul(q, t1, F), F);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.empty()) return {r0, s0, t0};
  const std::uint64_t inv_lead = F.inv(r0.back());
  return {scale(r0, inv_lead, F), scale(s0, inv_lead, F), scale(t0, inv_lead, F)};
}

Coeffs powmod(const Coeffs& base, const BigInt& e, const Coeffs& modulus, const Field& F) {
  Coeffs result = rem(Coeffs{1}, modulus, F);
  Coeffs b = rem(base, modulus, F);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = rem(mul(result, result, F), modulus, F);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(mul(result, b, F), modulus, F);
  }
  return result;
}

bool is_one(const Coeffs& f) { return f.size() == 1 && f[0] == 1; }

namespace {

// Coefficients of x^(i p) become those of x^i; valid when f' = 0 over F_p.
Coeffs pth_root(const Coeffs& f, const Field& F) {
  Coeffs r;
  for (std::size_t i = 0; i < f.size(); i += F.p) r.push_back(f[i]);
  return r;
}

}  // namespace

std::vector<std::pair<Coeffs, unsigned>> squarefree(const Coeffs& f, const Field& F) {
  std::vector<std::pair<Coeffs, unsigned>> out;
  if (f.size() <= 1) return out;
  Coeffs c = gcd(f, derivative(f, F), F);
  Coeffs w = quo(f, c, F);
  unsigned i = 1;
  while (w.size() > 1) {
    Coeffs y = gcd(w, c, F);
    Coeffs z = quo(w, y, F);
    if (z.size() > 1) out.emplace_back(monic(z, F), i);
    ++i;
    w = std::move(y);
    c = quo(c, w, F);
  }
  if (c.size() > 1) {
    for (auto& [g, m] : squarefree(monic(pth_root(c, F), F), F))
      out.emplace_back(std::move(g), m * static_cast<unsigned>(F.p));
  }
  return out;
}

std::vector<std::pair<Coeffs, std::size_t>> distinct_degree(Coeffs f, const Field& F) {
  std::vector<std::pair<Coeffs, std::size_t>> out;
  const Coeffs x{0, 1};
  Coeffs h = x;
  const BigInt p(static_cast<unsigned long>(F.p));
  for (std::size_t d = 1; f.size() > 1 && 2 * d <= deg(f); ++d) {
    h = powmod(h, p, f, F);
    Coeffs g = gcd(f, sub(h, x, F), F);
    if (g.size() > 1) {
      f = quo(f, g, F);
      h = rem(h, f, F);
      out.emplace_back(std::move(g), d);
    }
  }
  if (f.size() > 1) {
    const std::size_t d = deg(f);
    out.emplace_back(monic(f, F), d);
  }
  return out;
}

namespace {

Coeffs random_poly(std::size_t below_degree, const Field& F, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> dist(0, F.p - 1);
  Coeffs r(below_degree);
  for (auto& c : r) c = dist(rng);
  trim(r);
  return r;
}

// Splitting polynomial for Cantor-Zassenhaus: a^((p^d-1)/2) - 1 for odd p,
// the trace a + a^2 + ... + a^(2^(d-1)) for p = 2.
Coeffs splitter(const Coeffs& a, const Coeffs& f, std::size_t d, const Field& F) {
  if (F.p == 2) {
    Coeffs term = a, acc = a;
    for (std::size_t i = 1; i < d; ++i) {
      term = rem(mul(term, term, F), f, F);
      acc = add(acc, term, F);
    }
    return acc;
  }
  BigInt e = pow(BigInt(static_cast<unsigned long>(F.p)), d);
  e = (e - 1) / 2;
  return sub(powmod(a, e, f, F), Coeffs{1}, F);
}

}  // namespace

std::vector<Coeffs> equal_degree(const Coeffs& f, std::size_t d, const Field& F,
                                 std::mt19937_64& rng) {
  if (deg(f) == d) return {monic(f, F)};
  for (;;) {
    const Coeffs a = random_poly(deg(f), F, rng);
    if (a.size() <= 1) continue;
    Coeffs g = gcd(f, a, F);
    if (g.size() <= 1) g = gcd(f, splitter(a, f, d, F), F);
    if (g.size() <= 1 || g.size() == f.size()) continue;
    auto left = equal_degree(g, d, F, rng);
    auto right = equal_degree(quo(f, g, F), d, F, rng);
    left.insert(left.end(), std::make_move_iterator(right.begin()),
                std::make_move_iterator(right.end()));
    return left;
  }
}

}  // namespace cuboid::zp
