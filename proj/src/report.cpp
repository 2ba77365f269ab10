#include "cuboid/report.hpp"

#include <sstream>

namespace cuboid {

nlohmann::json to_json(const BigInt& n) {
  if (n.fits_slong_p()) return static_cast<std::int64_t>(n.get_si());
  return n.get_str();
}

nlohmann::json to_json(const IntPoly& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : p.coeffs()) arr.push_back(to_json(c));
  return arr;
}

namespace {

std::string join_params(const std::vector<BigInt>& params, char sep) {
  std::string s;
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) s += sep;
    s += params[i].get_str();
  }
  return s;
}

std::string coeff_string(const IntPoly& p) {
  std::string s;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (i) s += ' ';
    s += p.coeffs()[i].get_str();
  }
  return s;
}

}  // namespace

nlohmann::json sweep_to_json(const SweepReport& report, unsigned workers) {
  nlohmann::json verdicts = nlohmann::json::array();
  for (const auto& pt : report.points) {
    nlohmann::json v;
    nlohmann::json params = nlohmann::json::array();
    for (const auto& x : pt.params) params.push_back(to_json(x));
    v["params"] = std::move(params);
    v["verdict"] = pt.reducible ? "reducible" : "irreducible";
    v["primes"] = pt.primes;
    if (pt.reducible) {
      nlohmann::json factors = nlohmann::json::array();
      for (const auto& f : pt.factors) factors.push_back(to_json(f));
      v["factors"] = std::move(factors);
    }
    if (!pt.special.empty()) {
      nlohmann::json special = nlohmann::json::array();
      for (auto c : pt.special) special.push_back(std::string(to_string(c)));
      v["special"] = std::move(special);
    }
    if (!pt.consistent()) v["counterexample"] = true;
    verdicts.push_back(std::move(v));
  }
  nlohmann::json j;
  j["schema"] = kSchemaVersion;
  j["family"] = std::string(to_string(report.family));
  j["range"] = {{"min", report.lower}, {"max", report.bound}};
  j["verdicts"] = std::move(verdicts);
  j["meta"] = {{"walltime_ms", report.walltime_ms}, {"workers", workers}};
  return j;
}

std::string sweep_to_csv(const SweepReport& report) {
  std::ostringstream os;
  os << "params,verdict,special,factors,primes\n";
  for (const auto& pt : report.points) {
    os << join_params(pt.params, ' ') << ',' << (pt.reducible ? "reducible" : "irreducible")
       << ',';
    for (std::size_t i = 0; i < pt.special.size(); ++i)
      os << (i ? " " : "") << to_string(pt.special[i]);
    os << ',';
    for (std::size_t i = 0; i < pt.factors.size(); ++i)
      os << (i ? ";" : "") << coeff_string(pt.factors[i]);
    os << ',';
    for (std::size_t i = 0; i < pt.primes.size(); ++i) os << (i ? " " : "") << pt.primes[i];
    os << '\n';
  }
  return os.str();
}

nlohmann::json bricks_to_json(const std::vector<Brick>& bricks, unsigned max_edge) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& b : bricks) {
    arr.push_back({{"x", to_json(b.x)},
                   {"y", to_json(b.y)},
                   {"z", to_json(b.z)},
                   {"dxy", to_json(b.dxy)},
                   {"dyz", to_json(b.dyz)},
                   {"dzx", to_json(b.dzx)},
                   {"body", b.body ? to_json(*b.body) : nlohmann::json(nullptr)},
                   {"perfect", b.body.has_value()}});
  }
  return {{"schema", kSchemaVersion}, {"max_edge", max_edge}, {"bricks", std::move(arr)}};
}

std::string bricks_to_csv(const std::vector<Brick>& bricks) {
  std::ostringstream os;
  os << "x,y,z,dxy,dyz,dzx,body\n";
  for (const auto& b : bricks) {
    os << b.x << ',' << b.y << ',' << b.z << ',' << b.dxy << ',' << b.dyz << ',' << b.dzx << ',';
    if (b.body) os << *b.body;
    os << '\n';
  }
  return os.str();
}

nlohmann::json payload(nlohmann::json report) {
  report.erase("meta");
  return report;
}

}  // namespace cuboid
