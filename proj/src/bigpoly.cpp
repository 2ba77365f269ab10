#include "cuboid/bigpoly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <utility>

#include "cuboid/error.hpp"

namespace cuboid {

IntPoly::IntPoly(std::initializer_list<BigInt> coeffs) : coeffs_(coeffs) { normalize(); }

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPoly IntPoly::monomial(std::size_t k, BigInt c) {
  std::vector<BigInt> v(k + 1);
  v[k] = std::move(c);
  return IntPoly(std::move(v));
}

void IntPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Degree IntPoly::degree() const noexcept {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

std::size_t IntPoly::checked_degree() const {
  if (coeffs_.empty()) throw Error(Errc::ZeroPolynomial, "degree of the zero polynomial");
  return coeffs_.size() - 1;
}

BigInt IntPoly::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : BigInt(0); }

const BigInt& IntPoly::leading() const {
  if (coeffs_.empty()) throw Error(Errc::ZeroPolynomial, "leading coefficient of the zero polynomial");
  return coeffs_.back();
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator*=(const BigInt& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  normalize();
  return *this;
}

IntPoly operator*(const IntPoly& p, const IntPoly& q) {
  if (p.is_zero() || q.is_zero()) return {};
  std::vector<BigInt> r(p.coeffs_.size() + q.coeffs_.size() - 1);
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
    if (p.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < q.coeffs_.size(); ++j) r[i + j] += p.coeffs_[i] * q.coeffs_[j];
  }
  return IntPoly(std::move(r));
}

bool operator<(const IntPoly& p, const IntPoly& q) {
  if (p.coeffs_.size() != q.coeffs_.size()) return p.coeffs_.size() < q.coeffs_.size();
  return std::lexicographical_compare(p.coeffs_.rbegin(), p.coeffs_.rend(), q.coeffs_.rbegin(),
                                      q.coeffs_.rend());
}

std::string IntPoly::to_string(char var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const BigInt& c = coeffs_[k];
    if (c == 0) continue;
    const BigInt mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << '*';
    os << var;
    if (k > 1) os << '^' << k;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntPoly& p) { return os << p.to_string(); }

IntPoly add(const IntPoly& p, const IntPoly& q) { return p + q; }

IntPoly mul(const IntPoly& p, const IntPoly& q) { return p * q; }

BigInt eval(const IntPoly& p, const BigInt& x) {
  BigInt acc = 0;
  const auto c = p.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * x + c[k];
  return acc;
}

std::optional<IntPoly> divide_exact(const IntPoly& p, const IntPoly& d) {
  if (d.is_zero()) throw Error(Errc::ZeroDivisor, "division by the zero polynomial");
  if (p.is_zero()) return IntPoly{};
  const std::size_t dp = *p.degree();
  const std::size_t dd = *d.degree();
  if (dp < dd) return std::nullopt;

  std::vector<BigInt> rem(p.coeffs().begin(), p.coeffs().end());
  std::vector<BigInt> quot(dp - dd + 1);
  const auto dc = d.coeffs();
  const BigInt& lead = dc.back();
  for (std::size_t k = dp - dd + 1; k-- > 0;) {
    BigInt& top = rem[k + dd];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) return std::nullopt;
    BigInt q;
    mpz_divexact(q.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    for (std::size_t j = 0; j <= dd; ++j) rem[k + j] -= q * dc[j];
    quot[k] = std::move(q);
  }
  for (std::size_t j = 0; j < dd; ++j)
    if (rem[j] != 0) return std::nullopt;
  return IntPoly(std::move(quot));
}

std::optional<IntPoly> compress_even(const IntPoly& p) {
  const auto c = p.coeffs();
  std::vector<BigInt> r;
  r.reserve(c.size() / 2 + 1);
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k % 2 == 1) {
      if (c[k] != 0) return std::nullopt;
    } else {
      r.push_back(c[k]);
    }
  }
  return IntPoly(std::move(r));
}

IntPoly expand_even(const IntPoly& r) {
  const auto c = r.coeffs();
  if (c.empty()) return {};
  std::vector<BigInt> out(2 * c.size() - 1);
  for (std::size_t k = 0; k < c.size(); ++k) out[2 * k] = c[k];
  return IntPoly(std::move(out));
}

BigInt content(const IntPoly& p) {
  if (p.is_zero()) throw Error(Errc::ZeroPolynomial, "content of the zero polynomial");
  BigInt g = 0;
  for (const auto& c : p.coeffs()) {
    g = cuboid::gcd(g, c);
    if (g == 1) break;
  }
  return g;
}

IntPoly primitive_part(const IntPoly& p) {
  if (p.is_zero()) return {};
  BigInt c = content(p);
  if (p.leading() < 0) c = -c;
  std::vector<BigInt> r(p.coeffs().begin(), p.coeffs().end());
  for (auto& x : r) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  return IntPoly(std::move(r));
}

IntPoly derivative(const IntPoly& p) {
  const auto c = p.coeffs();
  if (c.size() <= 1) return {};
  std::vector<BigInt> r(c.size() - 1);
  for (std::size_t k = 1; k < c.size(); ++k) r[k - 1] = c[k] * static_cast<unsigned long>(k);
  return IntPoly(std::move(r));
}

IntPoly reflect(const IntPoly& p) {
  std::vector<BigInt> r(p.coeffs().begin(), p.coeffs().end());
  for (std::size_t k = 1; k < r.size(); k += 2) r[k] = -r[k];
  return IntPoly(std::move(r));
}

namespace {

// lc(b)^(deg a - deg b + 1) * a mod b, for deg a >= deg b.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  std::vector<BigInt> r(a.coeffs().begin(), a.coeffs().end());
  const auto bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  const BigInt& lead = bc.back();
  while (r.size() > db && !r.empty()) {
    const BigInt top = r.back();
    const std::size_t shift = r.size() - 1 - db;
    for (auto& x : r) x *= lead;
    for (std::size_t j = 0; j <= db; ++j) r[shift + j] -= top * bc[j];
    while (!r.empty() && r.back() == 0) r.pop_back();
  }
  return IntPoly(std::move(r));
}

}  // namespace

IntPoly gcd(const IntPoly& p, const IntPoly& q) {
  if (p.is_zero()) return primitive_part(q) * (q.is_zero() ? BigInt(0) : content(q));
  if (q.is_zero()) return primitive_part(p) * content(p);
  const BigInt scale = cuboid::gcd(content(p), content(q));
  IntPoly a = primitive_part(p);
  IntPoly b = primitive_part(q);
  if (*a.degree() < *b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPoly r = pseudo_remainder(a, b);
    a = std::move(b);
    b = primitive_part(r);
  }
  return primitive_part(a) * scale;
}

}  // namespace cuboid
