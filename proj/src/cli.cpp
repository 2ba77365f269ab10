#include "cuboid/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "cuboid/cuboid_polys.hpp"
#include "cuboid/cuboid_search.hpp"
#include "cuboid/error.hpp"
#include "cuboid/linear_factor.hpp"
#include "cuboid/report.hpp"
#include "cuboid/sweep.hpp"

namespace cuboid::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

BigInt parse_integer(const std::string& s) {
  BigInt n;
  if (s.empty() || n.set_str(s, 10) != 0) throw UsageError("not an integer: " + s);
  return n;
}

unsigned default_workers() {
  const char* env = std::getenv("CUBOID_POLY_WORKERS");
  if (env == nullptr || *env == '\0') return 1;
  const BigInt n = parse_integer(env);
  if (n < 1 || n > 1024) throw UsageError("CUBOID_POLY_WORKERS must be in [1, 1024]");
  return static_cast<unsigned>(n.get_ui());
}

// Writes `text` to `path`, or to `out` when path is empty.
void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open output file '" + path + "'");
  file << text;
  if (!file.flush()) throw UsageError("failed writing output file '" + path + "'");
}

std::string coeff_line(const IntPoly& p) {
  std::string s;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (i) s += ' ';
    s += p.coeffs()[i].get_str();
  }
  return s;
}

std::string tuple(const std::vector<BigInt>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
  return s + ")";
}

struct BuildArgs {
  std::string family;
  std::vector<std::string> params;
  std::string format = "text";
};

int cmd_build(const BuildArgs& args, std::ostream& out) {
  const auto family = parse_family(args.family);
  if (!family) throw UsageError("unknown family '" + args.family + "' (p_abu, p_au, q_pq)");
  if (args.params.size() != family_arity(*family))
    throw UsageError(args.family + " needs " + std::to_string(family_arity(*family)) +
                     " parameters, got " + std::to_string(args.params.size()));
  std::vector<BigInt> params;
  for (const auto& s : args.params) params.push_back(parse_integer(s));
  const IntPoly p = build_family(*family, params);

  if (args.format == "json") {
    nlohmann::json params_json = nlohmann::json::array();
    for (const auto& x : params) params_json.push_back(to_json(x));
    const nlohmann::json j = {{"schema", kSchemaVersion},
                              {"family", args.family},
                              {"params", params_json},
                              {"coefficients", to_json(p)},
                              {"rendering", p.to_string()}};
    out << j.dump(2) << '\n';
  } else {
    out << coeff_line(p) << '\n' << p.to_string() << '\n';
  }
  return kOk;
}

struct CheckArgs {
  std::string a, u;
  std::string format = "text";
};

int cmd_check(const CheckArgs& args, std::ostream& out, std::ostream& err) {
  const BigInt a = parse_integer(args.a);
  const BigInt u = parse_integer(args.u);
  const IntPoly p = build_p_au(a, u);
  const bool parity = check_parity(p);
  const bool inversion = check_inversion_symmetry(p, a * u);
  const RootSet roots = integer_roots(p);
  const auto solutions = solve_linear_factor_system(a, u);
  const bool degenerate = abs(a) == abs(u);
  const bool oracles_agree = roots.empty() == solutions.empty();

  int code = kOk;
  std::string verdict;
  if (!parity || !inversion || !oracles_agree) {
    code = kInconsistent;
    verdict = "inconsistent";
  } else if (!roots.empty() && !degenerate) {
    code = kFound;
    verdict = "linear factor found with |a| != |u|";
  } else if (degenerate) {
    verdict = "linear factors explained by |a| = |u|";
  } else {
    verdict = "no linear factor";
  }

  if (args.format == "json") {
    nlohmann::json roots_json = nlohmann::json::array();
    for (const auto& r : roots) roots_json.push_back(to_json(r));
    nlohmann::json sols = nlohmann::json::array();
    for (const auto& s : solutions)
      sols.push_back({{"A0", to_json(s.a0)}, {"B2", to_json(s.b2)}, {"C0", to_json(s.c0)}});
    const nlohmann::json j = {{"schema", kSchemaVersion},
                              {"params", {to_json(a), to_json(u)}},
                              {"parity", parity},
                              {"inversion_symmetry", inversion},
                              {"integer_roots", roots_json},
                              {"solutions", sols},
                              {"verdict", verdict}};
    out << j.dump(2) << '\n';
  } else {
    out << "P_au(" << a << "," << u << ") = " << p << '\n';
    out << "parity: " << (parity ? "ok" : "FAILED") << '\n';
    out << "inversion symmetry (m = " << a * u << "): " << (inversion ? "ok" : "FAILED") << '\n';
    out << "integer roots:";
    if (roots.empty()) out << " none";
    for (const auto& r : roots) out << ' ' << r;
    out << '\n' << "linear-factor system solutions (A0, B2, C0):";
    if (solutions.empty()) out << " none";
    for (const auto& s : solutions) out << " (" << s.a0 << ", " << s.b2 << ", " << s.c0 << ")";
    out << '\n' << "verdict: " << verdict << '\n';
  }
  if (code == kInconsistent) err << "error: root search and linear-factor system disagree\n";
  return code;
}

struct SweepArgs {
  std::string family;
  unsigned bound = 0;
  std::size_t budget = kDefaultPrimeBudget;
  unsigned workers = 0;
  std::string out_path;
  std::string format = "json";
};

int cmd_sweep(const SweepArgs& args, std::ostream& out, std::ostream& err) {
  const auto family = parse_family(args.family);
  if (!family) throw UsageError("unknown family '" + args.family + "' (p_abu, p_au, q_pq)");
  if (args.bound < 2) throw UsageError("--bound must be at least 2");
  if (args.budget < 1) throw UsageError("--budget must be at least 1");
  const unsigned workers = args.workers ? args.workers : default_workers();

  const SweepReport report = sweep_conjecture(*family, args.bound, {args.budget, workers});
  const auto bad = report.counterexamples();
  for (const auto* pt : bad) {
    err << "COUNTEREXAMPLE: " << args.family << tuple(pt->params) << " is "
        << (pt->reducible ? "reducible" : "irreducible") << '\n';
    for (const auto& f : pt->factors) err << "  factor: " << f << '\n';
  }

  std::string text;
  if (args.format == "csv") {
    text = sweep_to_csv(report);
  } else if (args.format == "text") {
    std::ostringstream os;
    std::size_t reducible = 0;
    for (const auto& pt : report.points) reducible += pt.reducible;
    os << "family " << args.family << ", parameters 1.." << args.bound << '\n'
       << "points: " << report.points.size() << ", irreducible: "
       << report.points.size() - reducible << ", reducible: " << reducible << '\n'
       << "counterexamples: " << bad.size() << '\n';
    for (const auto& pt : report.points)
      if (pt.reducible) {
        os << "  reducible " << tuple(pt.params);
        for (const auto& f : pt.factors) os << " [" << f << "]";
        os << '\n';
      }
    text = os.str();
  } else {
    text = sweep_to_json(report, workers).dump(2) + "\n";
  }
  emit(text, args.out_path, out);
  if (!args.out_path.empty())
    out << "wrote " << report.points.size() << " verdicts to " << args.out_path << '\n';
  return bad.empty() ? kOk : kFound;
}

struct BricksArgs {
  int max_edge = 0;
  unsigned workers = 0;
  std::string out_path;
  std::string format = "csv";
};

int cmd_bricks(const BricksArgs& args, std::ostream& out, std::ostream& err) {
  if (args.max_edge < 1) throw UsageError("max_edge must be at least 1");
  const unsigned workers = args.workers ? args.workers : default_workers();
  const auto bricks = enumerate_euler_bricks(static_cast<unsigned>(args.max_edge), workers);
  bool perfect = false;
  for (const auto& b : bricks) {
    if (check_perfect(b)) {
      perfect = true;
      err << "PERFECT CUBOID: " << b.x << ' ' << b.y << ' ' << b.z << '\n';
    }
  }

  std::string text;
  if (args.format == "json") {
    text = bricks_to_json(bricks, static_cast<unsigned>(args.max_edge)).dump(2) + "\n";
  } else if (args.format == "text") {
    std::ostringstream os;
    os << bricks.size() << " primitive Euler bricks with edges <= " << args.max_edge << '\n';
    for (const auto& b : bricks)
      os << "  " << b.x << " x " << b.y << " x " << b.z << "  faces " << b.dxy << ' ' << b.dyz
         << ' ' << b.dzx << "  " << (b.body ? "PERFECT" : "not perfect") << '\n';
    text = os.str();
  } else {
    text = bricks_to_csv(bricks);
  }
  emit(text, args.out_path, out);
  return perfect ? kFound : kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cuboid polynomial toolkit: construction, symmetry checks, linear-factor "
               "analysis, irreducibility sweeps and Euler brick search"};
  app.require_subcommand(1);
  const std::vector<std::string> formats{"json", "csv", "text"};

  BuildArgs build;
  auto* build_cmd = app.add_subcommand("build", "Print a cuboid polynomial");
  build_cmd->add_option("family", build.family, "p_abu | p_au | q_pq")->required();
  build_cmd->add_option("params", build.params, "Integer parameters");
  build_cmd->add_option("--format", build.format)->check(CLI::IsMember({"json", "text"}));

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "Symmetry and linear-factor report for P_au");
  check_cmd->add_option("a", check.a)->required();
  check_cmd->add_option("u", check.u)->required();
  check_cmd->add_option("--format", check.format)->check(CLI::IsMember({"json", "text"}));

  SweepArgs sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Irreducibility sweep over coprime parameters");
  sweep_cmd->add_option("family", sweep.family, "p_abu | p_au | q_pq")->required();
  sweep_cmd->add_option("--bound", sweep.bound, "Largest parameter value")->required();
  sweep_cmd->add_option("--budget", sweep.budget, "Primes tried for degree patterns");
  sweep_cmd->add_option("--workers", sweep.workers, "Worker threads (default $CUBOID_POLY_WORKERS or 1)");
  sweep_cmd->add_option("--out", sweep.out_path, "Output file (default stdout)");
  sweep_cmd->add_option("--format", sweep.format)->check(CLI::IsMember(formats));

  BricksArgs bricks;
  auto* bricks_cmd = app.add_subcommand("bricks", "Enumerate primitive Euler bricks");
  bricks_cmd->add_option("max_edge", bricks.max_edge)->required();
  bricks_cmd->add_option("--workers", bricks.workers);
  bricks_cmd->add_option("--out", bricks.out_path);
  bricks_cmd->add_option("--format", bricks.format)->check(CLI::IsMember(formats));

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (build_cmd->parsed()) return cmd_build(build, out);
    if (check_cmd->parsed()) return cmd_check(check, out, err);
    if (sweep_cmd->parsed()) return cmd_sweep(sweep, out, err);
    if (bricks_cmd->parsed()) return cmd_bricks(bricks, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == Errc::Internal ? kInconsistent : kUsage;
  }
  return kUsage;
}

}  // namespace cuboid::cli
