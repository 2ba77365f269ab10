#include "cuboid/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <thread>

#include "cuboid/error.hpp"

namespace cuboid {

std::string_view to_string(Family f) noexcept {
  switch (f) {
    case Family::PAu: return "p_au";
    case Family::QPq: return "q_pq";
    case Family::PAbu: return "p_abu";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view name) noexcept {
  if (name == "p_au") return Family::PAu;
  if (name == "q_pq") return Family::QPq;
  if (name == "p_abu") return Family::PAbu;
  return std::nullopt;
}

std::size_t family_arity(Family f) noexcept { return f == Family::PAbu ? 3 : 2; }

IntPoly build_family(Family f, const std::vector<BigInt>& params) {
  if (params.size() != family_arity(f))
    throw Error(Errc::InvalidArgument, std::string(to_string(f)) + " takes " +
                                           std::to_string(family_arity(f)) + " parameters");
  switch (f) {
    case Family::PAu: return build_p_au(params[0], params[1]);
    case Family::QPq: return build_q_pq(params[0], params[1]);
    case Family::PAbu: return build_p_abu(params[0], params[1], params[2]);
  }
  throw Error(Errc::Internal, "unknown family");
}

std::vector<const SweepPoint*> SweepReport::counterexamples() const {
  std::vector<const SweepPoint*> out;
  for (const auto& p : points)
    if (!p.consistent()) out.push_back(&p);
  return out;
}

std::vector<std::vector<BigInt>> sweep_parameters(Family f, unsigned bound) {
  std::vector<std::vector<BigInt>> out;
  if (f == Family::PAbu) {
    for (unsigned a = 1; a <= bound; ++a)
      for (unsigned b = 1; b <= bound; ++b)
        for (unsigned u = 1; u <= bound; ++u)
          if (coprime(BigInt(a), BigInt(b), BigInt(u))) out.push_back({a, b, u});
    return out;
  }
  for (unsigned x = 1; x <= bound; ++x)
    for (unsigned y = 1; y <= bound; ++y)
      if (x != y && coprime(BigInt(x), BigInt(y))) out.push_back({x, y});
  return out;
}

namespace {

SweepPoint decide(Family f, std::vector<BigInt> params, std::size_t budget) {
  SweepPoint pt;
  if (f == Family::PAbu) {
    pt.special = detect_special_cases(params[0], params[1], params[2]);
    pt.expected_reducible = !pt.special.empty();
  }
  const auto outcome = factor_over_z(build_family(f, params), budget);
  pt.params = std::move(params);
  pt.reducible = !outcome.is_irreducible();
  pt.factors = outcome.factors();
  pt.primes = outcome.primes();
  return pt;
}

}  // namespace

SweepReport sweep_conjecture(Family f, unsigned bound, const SweepOptions& options) {
  if (bound < 2) throw Error(Errc::InvalidArgument, "sweep bound must be at least 2");
  if (options.workers == 0) throw Error(Errc::InvalidArgument, "worker count must be at least 1");
  const auto start = std::chrono::steady_clock::now();

  auto params = sweep_parameters(f, bound);
  SweepReport report;
  report.family = f;
  report.bound = bound;
  report.points.resize(params.size());

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < params.size();) {
      try {
        report.points[i] = decide(f, params[i], options.prime_budget);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const unsigned n = std::min<unsigned>(options.workers, static_cast<unsigned>(params.size()));
  std::vector<std::jthread> threads;
  for (unsigned w = 1; w < n; ++w) threads.emplace_back(work);
  work();
  threads.clear();
  if (failure) std::rethrow_exception(failure);

  report.walltime_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace cuboid
