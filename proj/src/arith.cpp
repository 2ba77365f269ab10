#include "cuboid/arith.hpp"

#include <algorithm>
#include <map>

#include "cuboid/error.hpp"

namespace cuboid {

namespace {

constexpr unsigned long kTrialLimit = 10000;

// Pollard-Brent; n is an odd composite. Returns a nontrivial factor.
BigInt pollard_brent(const BigInt& n) {
  for (unsigned long c = 1;; ++c) {
    BigInt y = 2, x, ys, q = 1, g = 1;
    const unsigned long m = 64;
    unsigned long r = 1;
    auto step = [&](const BigInt& v) {
      BigInt w = v * v + c;
      mpz_mod(w.get_mpz_t(), w.get_mpz_t(), n.get_mpz_t());
      return w;
    };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = step(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = step(y);
          BigInt diff = abs(x - y);
          q = (q * diff) % n;
        }
        g = cuboid::gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = step(ys);
        g = cuboid::gcd(abs(x - ys), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split_into(const BigInt& n, std::map<BigInt, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  const BigInt d = pollard_brent(n);
  split_into(d, out);
  split_into(n / d, out);
}

}  // namespace

bool is_perfect_square(const BigInt& n) {
  return sgn(n) >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

std::optional<BigInt> exact_sqrt(const BigInt& n) {
  if (!is_perfect_square(n)) return std::nullopt;
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

bool coprime(const BigInt& a, const BigInt& b) { return cuboid::gcd(a, b) == 1; }

bool coprime(const BigInt& a, const BigInt& b, const BigInt& c) {
  return cuboid::gcd(cuboid::gcd(a, b), c) == 1;
}

BigInt pow(const BigInt& base, unsigned long exponent) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

bool is_prime(const BigInt& n) {
  return n >= 2 && mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

std::vector<std::pair<BigInt, unsigned>> factor_integer(const BigInt& n) {
  if (n == 0) throw Error(Errc::InvalidArgument, "cannot factor zero");
  BigInt rest = abs(n);
  std::map<BigInt, unsigned> found;
  for (unsigned long p = 2; p <= kTrialLimit; p += (p == 2 ? 1 : 2)) {
    if (BigInt(p) * p > rest) break;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      ++found[BigInt(p)];
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
    }
  }
  split_into(rest, found);
  return {found.begin(), found.end()};
}

std::vector<BigInt> positive_divisors(const BigInt& n) {
  std::vector<BigInt> divisors{BigInt(1)};
  for (const auto& [prime, exponent] : factor_integer(n)) {
    const std::size_t base = divisors.size();
    BigInt power = 1;
    for (unsigned e = 1; e <= exponent; ++e) {
      power *= prime;
      for (std::size_t i = 0; i < base; ++i) divisors.push_back(divisors[i] * power);
    }
  }
  std::sort(divisors.begin(), divisors.end());
  return divisors;
}

std::uint64_t PrimeSequence::next() {
  BigInt c(static_cast<unsigned long>(current_));
  mpz_nextprime(c.get_mpz_t(), c.get_mpz_t());
  current_ = c.get_ui();
  return current_;
}

std::int64_t to_int64(const BigInt& n) {
  if (!n.fits_slong_p()) throw Error(Errc::InvalidArgument, "value out of 64-bit range: " + n.get_str());
  return n.get_si();
}

}  // namespace cuboid
