// Acceptance suite: one PASS/FAIL line per criterion, each under its time
// limit. Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include <json.hpp>

#include "cuboid/cli.hpp"
#include "cuboid/cuboid_polys.hpp"
#include "cuboid/cuboid_search.hpp"
#include "cuboid/irreducibility.hpp"
#include "cuboid/linear_factor.hpp"
#include "cuboid/report.hpp"
#include "support/oracles.hpp"

using namespace cuboid;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

std::vector<std::pair<long, long>> coprime_pairs(long bound) {
  std::vector<std::pair<long, long>> out;
  for (long x = 1; x <= bound; ++x)
    for (long y = 1; y <= bound; ++y)
      if (x != y && std::gcd(x, y) == 1) out.emplace_back(x, y);
  return out;
}

std::string str(const BigInt& n) { return n.get_str(); }

IntPoly product(const std::vector<IntPoly>& factors) {
  IntPoly p{1};
  for (const auto& f : factors) p = p * f;
  return p;
}

oracle::Poly to_oracle(const IntPoly& p) {
  oracle::Poly out;
  for (const auto& c : p.coeffs()) out.push_back(c.get_si());
  return out;
}

struct CliResult {
  int code;
  std::string out, err;
};

CliResult run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "cuboid");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Outcome no_integer_roots() {
  Outcome r;
  const auto pairs = coprime_pairs(50);
  if (pairs.size() != 1546) r.fail("expected 1546 pairs, got " + std::to_string(pairs.size()));
  for (const auto& [a, u] : pairs) {
    const RootSet roots = integer_roots(build_p_au(a, u));
    if (!roots.empty()) r.fail("roots for (" + std::to_string(a) + "," + std::to_string(u) + ")");
  }
  r.detail = r.ok ? std::to_string(pairs.size()) + " coprime pairs, no roots" : r.detail;
  return r;
}

Outcome linear_factor_system() {
  Outcome r;
  const auto pairs = coprime_pairs(50);
  for (const auto& [a, u] : pairs)
    if (!solve_linear_factor_system(a, u).empty())
      r.fail("solution for (" + std::to_string(a) + "," + std::to_string(u) + ")");
  for (long a = 1; a <= 50; ++a) {
    const std::vector<LinearFactorSolution> expected{{-a, 0, -a}, {a, 0, a}};
    if (solve_linear_factor_system(a, a) != expected) r.fail("a = u = " + std::to_string(a));
  }
  if (r.ok) r.detail = std::to_string(pairs.size()) + " pairs unsolvable, a = u <= 50 gives (+-a, 0, +-a)";
  return r;
}

Outcome symmetry_identities() {
  Outcome r;
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<long> param(1, 1000);
  std::uniform_int_distribution<int> odd(0, 3), pair_index(0, 3);
  for (int i = 0; i < 500; ++i) {
    const long a = param(rng), u = param(rng);
    const IntPoly p = build_p_au(a, u);
    const BigInt m = BigInt(a) * u;
    if (!check_parity(p) || !check_inversion_symmetry(p, m)) {
      r.fail("identity fails at (" + std::to_string(a) + "," + std::to_string(u) + ")");
      continue;
    }
    std::vector<BigInt> c(p.coeffs().begin(), p.coeffs().end());
    std::vector<BigInt> odd_bump = c;
    odd_bump[2 * odd(rng) + 1] += 1;
    if (check_parity(IntPoly(odd_bump))) r.fail("parity survives an odd perturbation");
    // The t^4 coefficient pairs with itself, so only the other even slots are bumped.
    static constexpr int slots[] = {0, 2, 6, 8};
    std::vector<BigInt> even_bump = c;
    even_bump[slots[pair_index(rng)]] += 1;
    if (check_inversion_symmetry(IntPoly(even_bump), m))
      r.fail("inversion survives a perturbation at (" + std::to_string(a) + "," + std::to_string(u) + ")");
  }
  if (r.ok) r.detail = "500 random pairs, perturbations detected";
  return r;
}

Outcome expansion_identity() {
  Outcome r;
  for (long a = 1; a <= 50; ++a)
    for (const auto& s : solve_linear_factor_system(a, a))
      if (expand_product(s.a0, s.c0, s.b2, a, a) != build_p_au(a, a)) r.fail("a = u = " + std::to_string(a));

  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<long> param(1, 30), coin(0, 3), noise(-50, 50);
  int matches = 0;
  for (int i = 0; i < 100; ++i) {
    const long a = param(rng);
    const long u = coin(rng) == 0 ? a : param(rng);
    // A0 C0 = a u holds by construction: A0 ranges over signed divisors of a u.
    const auto divisors = positive_divisors(BigInt(a) * u);
    const BigInt a0 = divisors[std::uniform_int_distribution<std::size_t>(0, divisors.size() - 1)(rng)] *
                      (coin(rng) < 2 ? 1 : -1);
    const BigInt c0 = BigInt(a) * u / a0;
    const BigInt d = c0 * c0 - a0 * a0;
    const BigInt w = BigInt(u) * u - BigInt(a) * a;
    // Half the tuples satisfy the first equation, so the second one decides.
    const BigInt b2 = coin(rng) < 2 ? 6 * w - d : BigInt(noise(rng));
    const bool system = b2 + d == 6 * w && d * b2 == w * w && a0 * c0 == BigInt(a) * u;
    const bool match = expand_product(a0, c0, b2, a, u) == build_p_au(a, u);
    if (match != system)
      r.fail("mismatch at A0=" + str(a0) + " B2=" + str(b2) + " C0=" + str(c0) + " a=" + std::to_string(a) +
             " u=" + std::to_string(u));
    matches += match;
  }
  if (matches == 0) r.fail("no tuple satisfied the system");
  if (r.ok) r.detail = "100 tuples, " + std::to_string(matches) + " satisfy the system and match";
  return r;
}

Outcome special_cases() {
  Outcome r;
  struct Sample {
    SpecialCase expected;
    long a, b, u;
  };
  const std::vector<Sample> samples{
      {SpecialCase::AEqualsB, 2, 2, 3},          {SpecialCase::AEqualsB, 1, 1, 2},
      {SpecialCase::AEqualsB, 3, 3, 7},          {SpecialCase::AEqualsB, 5, 5, 2},
      {SpecialCase::AEqualsB, 4, 4, 9},          {SpecialCase::AllEqual, 1, 1, 1},
      {SpecialCase::AllEqual, 2, 2, 2},          {SpecialCase::AllEqual, 3, 3, 3},
      {SpecialCase::AllEqual, 5, 5, 5},          {SpecialCase::AllEqual, 8, 8, 8},
      {SpecialCase::BUEqualsASquared, 4, 2, 8},  {SpecialCase::BUEqualsASquared, 2, 1, 4},
      {SpecialCase::BUEqualsASquared, 6, 4, 9},  {SpecialCase::BUEqualsASquared, 3, 1, 9},
      {SpecialCase::BUEqualsASquared, 6, 3, 12}, {SpecialCase::AUEqualsBSquared, 1, 2, 4},
      {SpecialCase::AUEqualsBSquared, 4, 2, 1},  {SpecialCase::AUEqualsBSquared, 9, 6, 4},
      {SpecialCase::AUEqualsBSquared, 1, 3, 9},  {SpecialCase::AUEqualsBSquared, 2, 4, 8},
      {SpecialCase::AEqualsU, 2, 3, 2},          {SpecialCase::AEqualsU, 1, 4, 1},
      {SpecialCase::AEqualsU, 3, 5, 3},          {SpecialCase::AEqualsU, 7, 2, 7},
      {SpecialCase::AEqualsU, 4, 9, 4},          {SpecialCase::BEqualsU, 2, 3, 3},
      {SpecialCase::BEqualsU, 1, 4, 4},          {SpecialCase::BEqualsU, 5, 2, 2},
      {SpecialCase::BEqualsU, 3, 7, 7},          {SpecialCase::BEqualsU, 9, 4, 4},
  };
  std::set<SpecialCase> covered;
  for (const auto& s : samples) {
    const std::string label =
        "(" + std::to_string(s.a) + "," + std::to_string(s.b) + "," + std::to_string(s.u) + ")";
    const auto cases = detect_special_cases(s.a, s.b, s.u);
    if (std::find(cases.begin(), cases.end(), s.expected) == cases.end()) {
      r.fail(label + " is not " + std::string(to_string(s.expected)));
      continue;
    }
    covered.insert(s.expected);
    const IntPoly p = build_p_abu(s.a, s.b, s.u);
    const auto outcome = factor_over_z(p);
    if (outcome.is_irreducible()) {
      r.fail(label + " reported irreducible");
      continue;
    }
    for (const auto& f : outcome.factors())
      if (f.degree().value_or(0) < 1) r.fail(label + " has a constant factor");
    if (product(outcome.factors()) != p) r.fail(label + " factor product differs");
  }
  if (covered.size() != 6) r.fail("not all six cases covered");
  if (r.ok) r.detail = std::to_string(samples.size()) + " triples over 6 cases, exact factorizations";
  return r;
}

Outcome conjecture_sweeps() {
  Outcome r;
  struct Job {
    const char* family;
    long bound;
    std::size_t expected_points;
  };
  std::size_t triples = 0;
  for (long a = 1; a <= 8; ++a)
    for (long b = 1; b <= 8; ++b)
      for (long u = 1; u <= 8; ++u) triples += std::gcd(std::gcd(a, b), u) == 1;
  const std::vector<Job> jobs{{"p_au", 20, coprime_pairs(20).size()},
                              {"q_pq", 12, coprime_pairs(12).size()},
                              {"p_abu", 8, triples}};
  std::string detail;
  for (const auto& job : jobs) {
    const auto res = run_cli({"sweep", job.family, "--bound", std::to_string(job.bound), "--workers", "4"});
    if (res.code != cli::kOk) r.fail(std::string(job.family) + " exit " + std::to_string(res.code) + ": " + res.err);
    const auto j = nlohmann::json::parse(res.out);
    const auto& verdicts = j.at("verdicts");
    if (verdicts.size() != job.expected_points) r.fail(std::string(job.family) + " point count");
    std::size_t irreducible = 0;
    for (const auto& v : verdicts) {
      const bool special = v.contains("special");
      const bool reducible = v.at("verdict") == "reducible";
      if (!special && reducible) r.fail(std::string(job.family) + " reducible at " + v.at("params").dump());
      irreducible += !reducible;
    }
    detail += std::string(detail.empty() ? "" : ", ") + job.family + " " + std::to_string(irreducible) + "/" +
              std::to_string(verdicts.size()) + " irreducible";
  }
  if (r.ok) r.detail = detail + "; all others special";
  return r;
}

Outcome oracle_agreement() {
  Outcome r;
  std::mt19937_64 rng(777);
  std::uniform_int_distribution<int> deg(1, 8), small_deg(1, 4), coeff(-20, 20), c3(-4, 4);
  int checked = 0, reducible = 0;
  while (checked < 200) {
    IntPoly f;
    if (checked % 2 == 0) {
      std::vector<BigInt> c(deg(rng) + 1);
      for (auto& x : c) x = coeff(rng);
      f = IntPoly(c);
    } else {
      // Products keep the corpus from being almost entirely irreducible.
      std::vector<BigInt> c1(small_deg(rng) + 1), c2(small_deg(rng) + 1);
      for (auto& x : c1) x = c3(rng);
      for (auto& x : c2) x = c3(rng);
      f = IntPoly(c1) * IntPoly(c2);
    }
    if (f.is_zero() || f.degree().value() < 1 || f.degree().value() > 8) continue;
    bool in_range = true;
    for (const auto& c : f.coeffs()) in_range = in_range && abs(c) <= 20;
    if (!in_range) continue;
    f = primitive_part(f);
    ++checked;

    const bool oracle_reducible = oracle::Kronecker(to_oracle(f)).find_factor().has_value();
    const auto outcome = factor_over_z(f);
    if (outcome.is_irreducible() == oracle_reducible) {
      r.fail("verdicts differ on " + f.to_string());
      continue;
    }
    if (outcome.is_irreducible()) continue;
    ++reducible;
    if (product(outcome.factors()) != f) r.fail("product differs on " + f.to_string());
    for (const auto& g : outcome.factors())
      if (g.degree().value() >= 2 && oracle::Kronecker(to_oracle(g)).find_factor())
        r.fail("factor " + g.to_string() + " of " + f.to_string() + " still splits");
  }
  if (r.ok) r.detail = "200 polynomials (" + std::to_string(reducible) + " reducible), complete factorizations agree";
  return r;
}

Outcome cuboid_ground_truth() {
  Outcome r;
  const auto bricks = enumerate_euler_bricks(300, 4);
  std::vector<std::tuple<long, long, long>> got;
  for (const auto& b : bricks) {
    got.emplace_back(b.x.get_si(), b.y.get_si(), b.z.get_si());
    if (!is_valid_brick(b)) r.fail("invalid brick");
    if (check_perfect(b)) r.fail("perfect brick reported");
  }
  // Largest edges of primitive Euler bricks up to 300 are 240 and 275.
  const std::vector<std::tuple<long, long, long>> known{{44, 117, 240}, {240, 252, 275}};
  if (got != known) r.fail("brick list differs from the known list");
  std::vector<std::tuple<long, long, long>> naive;
  for (const auto& [x, y, z] : oracle::naive_euler_bricks(300)) naive.emplace_back(x, y, z);
  if (got != naive) r.fail("brick list differs from the naive triple loop");
  if (r.ok) r.detail = std::to_string(bricks.size()) + " primitive bricks, none perfect";
  return r;
}

Outcome determinism() {
  Outcome r;
  const auto first = run_cli({"sweep", "p_abu", "--bound", "6", "--workers", "4"});
  const auto second = run_cli({"sweep", "p_abu", "--bound", "6", "--workers", "2"});
  if (first.code != cli::kOk || second.code != cli::kOk) r.fail("sweep exit code");
  const std::string a = payload(nlohmann::json::parse(first.out)).dump();
  const std::string b = payload(nlohmann::json::parse(second.out)).dump();
  if (a != b) r.fail("payloads differ");
  if (r.ok) r.detail = "payloads identical (" + std::to_string(a.size()) + " bytes)";
  return r;
}

struct Criterion {
  int id;
  const char* name;
  double limit_s;
  std::function<Outcome()> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "no integer roots for coprime a != u <= 50", 60, no_integer_roots},
      {2, "linear-factor system solutions", 10, linear_factor_system},
      {3, "parity and inversion symmetry", 5, symmetry_identities},
      {4, "expansion identity", 5, expansion_identity},
      {5, "special triples factor exactly", 300, special_cases},
      {6, "irreducibility sweeps", 600, conjecture_sweeps},
      {7, "factorizer agrees with Kronecker oracle", 300, oracle_agreement},
      {8, "Euler brick ground truth up to 300", 30, cuboid_ground_truth},
      {9, "sweep payload determinism", 600, determinism},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && secs > c.limit_s) o.fail("exceeded " + std::to_string(static_cast<int>(c.limit_s)) + " s");
    failures += !o.ok;
    std::printf("%s [%d] %s: %s (%.2f s)\n", o.ok ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
