#include "cuboid/irreducibility.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <random>
#include <set>

#include "cuboid/error.hpp"
#include "hensel.hpp"
#include "zp_poly.hpp"

namespace cuboid {

namespace {

// Upper limit on primes scanned while looking for admissible ones; every
// squarefree input has only finitely many inadmissible primes.
constexpr std::size_t kMaxScannedPrimes = 5000;

zp::Field checked_field(const IntPoly& f, const BigInt& prime) {
  if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "cannot reduce the zero polynomial");
  if (!prime.fits_ulong_p() || prime > 0xffffffffUL || !is_prime(prime))
    throw Error(Errc::InvalidArgument, "modulus must be a prime below 2^32: " + prime.get_str());
  if (mpz_divisible_p(f.leading().get_mpz_t(), prime.get_mpz_t()))
    throw Error(Errc::BadPrime, prime.get_str() + " divides the leading coefficient");
  return zp::Field{prime.get_ui()};
}

bool squarefree_mod(const zp::Coeffs& monic_f, const zp::Field& F) {
  if (monic_f.size() <= 1) return true;
  return zp::is_one(zp::gcd(monic_f, zp::derivative(monic_f, F), F));
}

std::vector<std::size_t> ddf_degrees(const zp::Coeffs& monic_f, const zp::Field& F) {
  std::vector<std::size_t> degrees;
  for (const auto& [g, d] : zp::distinct_degree(monic_f, F))
    for (std::size_t i = 0; i < zp::deg(g) / d; ++i) degrees.push_back(d);
  return degrees;
}

// Admissible: prime does not divide lc(f) and f stays squarefree mod prime.
std::optional<DegreePattern> pattern_if_admissible(const IntPoly& f, std::uint64_t prime) {
  if (mpz_divisible_ui_p(f.leading().get_mpz_t(), prime)) return std::nullopt;
  const zp::Field F{prime};
  const zp::Coeffs fm = zp::monic(zp::reduce(f, F), F);
  if (!squarefree_mod(fm, F)) return std::nullopt;
  return DegreePattern::from_factor_degrees(ddf_degrees(fm, F));
}

void require_primitive_nonconstant(const IntPoly& f) {
  if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "zero polynomial");
  if (*f.degree() == 0) throw Error(Errc::ConstantPolynomial, "constant polynomial");
  if (content(f) != 1) throw Error(Errc::NotPrimitive, "content is " + content(f).get_str());
}

bool squarefree_over_z(const IntPoly& f) { return *gcd(f, derivative(f)).degree() == 0; }

struct SquarefreeResult {
  std::vector<IntPoly> factors;
  std::optional<IrreducibilityProof> proof;  // set iff factors.size() == 1
  std::set<std::uint64_t> primes;
};

// Irreducible factors of a squarefree primitive f with positive leading
// coefficient.
SquarefreeResult factor_squarefree(const IntPoly& f, std::size_t budget) {
  SquarefreeResult out;
  const auto certified = certify_irreducible(f, budget);
  if (const auto* cert = std::get_if<Certificate>(&certified)) {
    IrreducibilityProof proof;
    proof.method = IrreducibilityProof::Method::DegreePatterns;
    proof.patterns = cert->patterns;
    for (const auto& pp : cert->patterns) out.primes.insert(pp.prime);
    out.factors.push_back(f);
    out.proof = std::move(proof);
    return out;
  }
  const auto& inc = std::get<Inconclusive>(certified);
  for (const auto& pp : inc.patterns) out.primes.insert(pp.prime);

  // Lift at the prime with the fewest modular factors.
  std::uint64_t best_prime = 0;
  std::vector<ModFactor> best;
  for (const auto& pp : inc.patterns) {
    auto mf = factor_mod_p(f, BigInt(static_cast<unsigned long>(pp.prime)));
    if (best_prime == 0 || mf.size() < best.size()) {
      best_prime = pp.prime;
      best = std::move(mf);
    }
  }
  const zp::Field F{best_prime};
  std::vector<zp::Coeffs> modular;
  for (const auto& m : best) modular.push_back(zp::reduce(m.factor, F));

  const BigInt target = 2 * factor_coefficient_bound(f);
  const hensel::Lifted lifted = hensel::lift(f, modular, F, target);

  IrreducibilityProof proof;
  proof.method = IrreducibilityProof::Method::Recombination;
  proof.patterns = inc.patterns;
  proof.lift_prime = best_prime;
  proof.lift_exponent = lifted.exponent;
  proof.modular_factors = modular.size();

  // Recombination by increasing degree of the candidate factor: 1, 2, ...,
  // deg/2. A factor found at degree d is irreducible because every smaller
  // degree was exhausted first.
  std::vector<IntPoly> pool = lifted.factors;
  IntPoly rest = f;
  for (std::size_t d = 1; 2 * d <= *rest.degree(); ++d) {
    if (!inc.intersection.contains(d)) continue;
    bool found = true;
    while (found && 2 * d <= *rest.degree()) {
      found = false;
      const std::size_t r = pool.size();
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << r); ++mask) {
        std::size_t total = 0;
        for (std::size_t i = 0; i < r; ++i)
          if (mask >> i & 1) total += *pool[i].degree();
        if (total != d) continue;
        ++proof.subsets_tested;
        IntPoly cand{rest.leading()};
        for (std::size_t i = 0; i < r; ++i)
          if (mask >> i & 1) cand = hensel::mod_nonneg(cand * pool[i], lifted.modulus);
        cand = primitive_part(hensel::mod_symmetric(cand, lifted.modulus));
        auto quotient = divide_exact(rest, cand);
        if (!quotient) continue;
        out.factors.push_back(cand);
        rest = std::move(*quotient);
        std::vector<IntPoly> kept;
        for (std::size_t i = 0; i < r; ++i)
          if (!(mask >> i & 1)) kept.push_back(std::move(pool[i]));
        pool = std::move(kept);
        found = true;
        break;
      }
    }
  }
  if (*rest.degree() > 0) out.factors.push_back(rest);
  if (out.factors.size() == 1) out.proof = std::move(proof);
  return out;
}

}  // namespace

std::vector<ModFactor> factor_mod_p(const IntPoly& f, const BigInt& prime) {
  const zp::Field F = checked_field(f, prime);
  const zp::Coeffs fm = zp::monic(zp::reduce(f, F), F);
  std::mt19937_64 rng(0x5eed0000ULL + F.p);
  std::vector<ModFactor> out;
  for (const auto& [part, multiplicity] : zp::squarefree(fm, F))
    for (const auto& [product, d] : zp::distinct_degree(part, F))
      for (const auto& g : zp::equal_degree(product, d, F, rng))
        out.push_back({zp::lift(g), multiplicity});
  std::sort(out.begin(), out.end(), [](const ModFactor& x, const ModFactor& y) {
    if (x.factor == y.factor) return x.multiplicity < y.multiplicity;
    return x.factor < y.factor;
  });
  return out;
}

DegreePattern DegreePattern::from_factor_degrees(const std::vector<std::size_t>& degrees) {
  std::size_t total = 0;
  for (auto d : degrees) total += d;
  DegreePattern p;
  p.reachable_.assign(total + 1, false);
  p.reachable_[0] = true;
  for (auto d : degrees)
    for (std::size_t s = total + 1; s-- > d;)
      if (p.reachable_[s - d]) p.reachable_[s] = true;
  return p;
}

DegreePattern DegreePattern::full(std::size_t total) {
  DegreePattern p;
  p.reachable_.assign(total + 1, true);
  return p;
}

std::vector<std::size_t> DegreePattern::degrees() const {
  std::vector<std::size_t> out;
  for (std::size_t d = 0; d < reachable_.size(); ++d)
    if (reachable_[d]) out.push_back(d);
  return out;
}

bool DegreePattern::is_trivial() const {
  const auto d = degrees();
  return d.size() <= 2;
}

DegreePattern& DegreePattern::intersect(const DegreePattern& other) {
  if (other.reachable_.size() != reachable_.size())
    throw Error(Errc::DegreeMismatch, "patterns of different total degree");
  for (std::size_t d = 0; d < reachable_.size(); ++d)
    reachable_[d] = reachable_[d] && other.reachable_[d];
  return *this;
}

DegreePattern degree_pattern(const IntPoly& f, const BigInt& prime) {
  const zp::Field F = checked_field(f, prime);
  const zp::Coeffs fm = zp::monic(zp::reduce(f, F), F);
  if (!squarefree_mod(fm, F))
    throw Error(Errc::NotSquarefreeModP, "not squarefree modulo " + prime.get_str());
  return DegreePattern::from_factor_degrees(ddf_degrees(fm, F));
}

CertifyResult certify_irreducible(const IntPoly& f, std::size_t prime_budget) {
  require_primitive_nonconstant(f);
  if (!squarefree_over_z(f)) throw Error(Errc::NotSquarefree, "input has a repeated factor");

  const std::size_t n = *f.degree();
  std::vector<PrimePattern> patterns;
  DegreePattern acc = DegreePattern::full(n);
  PrimeSequence primes;
  for (std::size_t scanned = 0; patterns.size() < std::max<std::size_t>(prime_budget, 1);
       ++scanned) {
    if (scanned == kMaxScannedPrimes)
      throw Error(Errc::Internal, "no admissible prime found for " + f.to_string());
    const std::uint64_t p = primes.next();
    auto pattern = pattern_if_admissible(f, p);
    if (!pattern) continue;
    acc.intersect(*pattern);
    patterns.push_back({p, std::move(*pattern)});
    if (acc.is_trivial()) return Certificate{std::move(patterns)};
  }
  return Inconclusive{std::move(patterns), std::move(acc)};
}

bool verify_certificate(const IntPoly& f, const Certificate& cert) {
  if (f.is_zero() || cert.patterns.empty()) return false;
  DegreePattern acc = DegreePattern::full(*f.degree());
  for (const auto& pp : cert.patterns) {
    DegreePattern fresh;
    try {
      fresh = degree_pattern(f, BigInt(static_cast<unsigned long>(pp.prime)));
    } catch (const Error& e) {
      if (e.code() == Errc::NotSquarefreeModP || e.code() == Errc::BadPrime) return false;
      throw;
    }
    if (!(fresh == pp.pattern)) return false;
    acc.intersect(fresh);
  }
  return acc.is_trivial();
}

FactorizationOutcome FactorizationOutcome::reducible(std::vector<IntPoly> factors,
                                                     std::vector<std::uint64_t> primes) {
  FactorizationOutcome o;
  o.value_ = std::move(factors);
  o.primes_ = std::move(primes);
  return o;
}

FactorizationOutcome FactorizationOutcome::irreducible(IrreducibilityProof proof) {
  FactorizationOutcome o;
  for (const auto& pp : proof.patterns) o.primes_.push_back(pp.prime);
  if (proof.lift_prime != 0) o.primes_.push_back(proof.lift_prime);
  std::sort(o.primes_.begin(), o.primes_.end());
  o.primes_.erase(std::unique(o.primes_.begin(), o.primes_.end()), o.primes_.end());
  o.value_ = std::move(proof);
  return o;
}

const std::vector<IntPoly>& FactorizationOutcome::factors() const {
  static const std::vector<IntPoly> none;
  if (const auto* f = std::get_if<std::vector<IntPoly>>(&value_)) return *f;
  return none;
}

const IrreducibilityProof& FactorizationOutcome::proof() const {
  if (const auto* p = std::get_if<IrreducibilityProof>(&value_)) return *p;
  throw Error(Errc::InvalidArgument, "reducible outcome has no irreducibility proof");
}

BigInt factor_coefficient_bound(const IntPoly& f) {
  BigInt norm2 = 0;
  for (const auto& c : f.coeffs()) norm2 += c * c;
  BigInt root;
  mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
  return pow(BigInt(2), f.checked_degree()) * (root + 1) * abs(f.leading());
}

FactorizationOutcome factor_over_z(const IntPoly& f, std::size_t prime_budget) {
  require_primitive_nonconstant(f);
  const bool negative = f.leading() < 0;
  const IntPoly g = negative ? -f : f;

  const IntPoly repeated = gcd(g, derivative(g));
  const auto squarefree_part = divide_exact(g, repeated);
  if (!squarefree_part) throw Error(Errc::Internal, "gcd with derivative does not divide");

  SquarefreeResult sf = factor_squarefree(primitive_part(*squarefree_part), prime_budget);

  std::vector<IntPoly> factors;
  for (const auto& q : sf.factors) {
    IntPoly rest = g;
    while (auto next = divide_exact(rest, q)) {
      factors.push_back(q);
      rest = std::move(*next);
      if (*rest.degree() == 0) break;
    }
  }
  std::sort(factors.begin(), factors.end());

  if (factors.size() == 1) {
    if (!(factors.front() == g) || !sf.proof)
      throw Error(Errc::Internal, "irreducible verdict does not reproduce the input");
    return FactorizationOutcome::irreducible(std::move(*sf.proof));
  }

  if (negative) factors.front() = -factors.front();
  IntPoly product{1};
  for (const auto& q : factors) product = product * q;
  if (!(product == f)) throw Error(Errc::Internal, "factor product does not reproduce the input");
  return FactorizationOutcome::reducible(std::move(factors), {sf.primes.begin(), sf.primes.end()});
}

}  // namespace cuboid
