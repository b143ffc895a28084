#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <utility>

#include "crspan/builtins.hpp"
#include "crspan/crmap.hpp"
#include "crspan/error.hpp"
#include "crspan/identity.hpp"
#include "crspan/json_io.hpp"
#include "crspan/rigidity.hpp"

namespace crspan::cli {

namespace {

using crspan::json::ordered_json;

void add_map_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--input,-i", cfg.input, "CR map JSON file");
  sub->add_option("--builtin", cfg.builtin, "Built-in map: dt, hst or linear")
      ->check(CLI::IsMember({"dt", "hst", "linear"}));
  sub->add_option("--n", cfg.n, "Source CR dimension");
  sub->add_option("--N", cfg.target_n, "Target CR dimension (linear only)");
  sub->add_option("--u", cfg.u, "Circle parameter for dt, rational p/q");
  sub->add_option("--u-s", cfg.u_s, "Circle parameter s for hst");
  sub->add_option("--u-t", cfg.u_t, "Circle parameter t for hst");
}

void add_format_options(CLI::App* sub, RunConfig& cfg, std::string& format) {
  sub->add_option("--format", format, "Output format: table or json")->check(CLI::IsMember({"table", "json"}));
  sub->add_flag("--approx", cfg.approx, "Add decimal hints to tables");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kParse, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json::json parse_json_file(const std::string& path) {
  try {
    return json::json::parse(read_file(path));
  } catch (const json::json::exception& e) {
    throw Error(ErrorKind::kParse, "'" + path + "': " + e.what());
  }
}

CRMap load_map(const RunConfig& cfg) {
  if (cfg.input && cfg.builtin) throw Error(ErrorKind::kParse, "use either --input or --builtin, not both");
  if (cfg.input) return json::crmap_from_json(parse_json_file(*cfg.input));
  if (!cfg.builtin) throw Error(ErrorKind::kParse, "a map is required: pass --input FILE or --builtin NAME");
  if (*cfg.builtin == "dt") return builtin_dt(cfg.n, parse_rational(cfg.u));
  if (*cfg.builtin == "hst") return builtin_hst(cfg.n, parse_rational(cfg.u_s), parse_rational(cfg.u_t));
  return linear_embedding(cfg.n, cfg.target_n.value_or(cfg.n));
}

IdentityProblem load_problem(const RunConfig& cfg) {
  if (!cfg.input) throw Error(ErrorKind::kParse, "an identity problem file is required (--input FILE)");
  return json::identity_problem_from_json(parse_json_file(*cfg.input));
}

// Two-column aligned table.
class Table {
 public:
  void row(std::string key, std::string value) { rows_.emplace_back(std::move(key), std::move(value)); }

  void print(std::ostream& out) const {
    std::size_t width = 0;
    for (const auto& r : rows_) width = std::max(width, r.first.size());
    for (const auto& [k, v] : rows_) out << std::left << std::setw(static_cast<int>(width) + 2) << k << v << '\n';
  }

 private:
  std::vector<std::pair<std::string, std::string>> rows_;
};

template <typename Range>
std::string join(const Range& values) {
  std::string out = "(";
  bool first = true;
  for (const auto& v : values) {
    if (!first) out += ", ";
    first = false;
    out += v;
  }
  return out + ")";
}

std::string counts(const std::vector<std::size_t>& v) {
  std::vector<std::string> s;
  for (auto x : v) s.push_back(std::to_string(x));
  return join(s);
}

std::string optional_count(const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : "-"; }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string point_string(const Point& p, bool approx) {
  std::vector<std::string> s;
  for (const auto& x : p) s.push_back(approx ? to_string(x) + " ~ " + approx_string(x) : to_string(x));
  return join(s);
}

std::string poly_list(const std::vector<MultiPoly>& polys) {
  std::vector<std::string> s;
  for (const auto& p : polys) s.push_back(p.to_string());
  return join(s);
}

void emit(const ordered_json& j, std::ostream& out) { out << j.dump(2) << '\n'; }

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const CRMap f = load_map(cfg);
  const SphereCheck check = check_sphere_map(f);
  if (cfg.format == Format::kJson) {
    ordered_json j;
    j["verified"] = check.ok;
    j["remainder"] = json::to_json(check.remainder);
    emit(j, out);
  } else {
    Table t;
    t.row("n", std::to_string(f.n()));
    t.row("N", std::to_string(f.target_n()));
    t.row("sphere map", yes_no(check.ok));
    if (!check.ok) t.row("remainder", check.remainder.to_string());
    t.print(out);
  }
  if (!check.ok) {
    err << "sphere identity fails: nonzero remainder " << check.remainder.to_string() << '\n';
    return kExitNotSphereMap;
  }
  return kExitOk;
}

int cmd_analyze(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const CRMap f = load_map(cfg);
  const Analysis a = analyze(f, cfg.trials, cfg.seed);
  const RigidityVerdict& v = a.verdict;
  const DefectReport& d = v.defect();
  if (cfg.format == Format::kJson) {
    ordered_json j = json::to_json(v);
    j["base_point"] = json::point_to_json(a.profile.profile.base_point);
    j["trials"] = cfg.trials;
    j["seed"] = cfg.seed;
    emit(j, out);
  } else {
    Table t;
    t.row("n", std::to_string(d.n));
    t.row("N", std::to_string(d.target_n));
    t.row("base point", point_string(a.profile.profile.base_point, cfg.approx));
    t.row("dims d_1..d_l0", counts(d.dims));
    t.row("l0", std::to_string(d.dims.size()));
    t.row("d", std::to_string(d.d));
    std::vector<std::string> kl;
    for (const auto& k : d.k_per_level) kl.push_back(optional_count(k));
    t.row("k_l (l = 2..l0)", join(kl));
    t.row("k", optional_count(d.k));
    t.row("plane bound n+d+k+1", optional_count(d.plane_bound));
    t.row("image span", std::to_string(v.image_span()));
    t.row("hypothesis", d.hypothesis_ok ? "satisfied" : "not satisfied: " + d.reason);
    t.row("codim criterion", yes_no(d.codim_criterion_ok));
    t.row("lower bound n+d+1", yes_no(v.lower_bound_ok()));
    t.row("upper bound", yes_no(v.upper_bound_ok()));
    t.row("sharp", yes_no(v.sharp()));
    t.print(out);
  }
  for (const auto& w : v.warnings()) err << "warning: " << w << '\n';
  if (v.invariant_violated()) {
    err << "internal invariant violated: image span outside the proven range\n";
    return kExitInvariantViolation;
  }
  return d.hypothesis_ok ? kExitOk : kExitHypothesisFailed;
}

ordered_json solution_pairs(const std::vector<SolutionPair>& pairs) {
  ordered_json a = ordered_json::array();
  for (const auto& s : pairs) a.push_back(json::to_json(s));
  return a;
}

void table_solutions(Table& t, const std::vector<SolutionPair>& pairs) {
  for (std::size_t i = 0; i < pairs.size(); ++i) t.row("r^(" + std::to_string(i + 1) + ")", pairs[i].r.to_string());
}

int cmd_identity_solve(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const IdentityProblem prob = load_problem(cfg);
  std::optional<SolutionSpace> matrix, conjugate;
  if (cfg.form == "matrix" || cfg.form == "both") matrix = solve_matrix_form(prob);
  if (cfg.form == "conjugate" || cfg.form == "both") conjugate = solve_conjugate_form(prob);
  const bool mismatch = matrix && conjugate && matrix->dim != conjugate->dim;
  if (cfg.format == Format::kJson) {
    ordered_json j;
    j["problem"] = json::to_json(prob);
    j["form"] = cfg.form;
    if (matrix) j["matrix_form"] = json::to_json(*matrix);
    if (conjugate) j["conjugate_form"] = json::to_json(*conjugate);
    emit(j, out);
  } else {
    Table t;
    t.row("n", std::to_string(prob.n()));
    t.row("m", std::to_string(prob.m()));
    t.row("degree", std::to_string(prob.degree()));
    t.row("p", poly_list(prob.p()));
    if (matrix) {
      t.row("dim S (matrix form)", std::to_string(matrix->dim));
      table_solutions(t, matrix->basis);
    }
    if (conjugate) t.row("dim S (conjugate form)", std::to_string(conjugate->dim));
    t.print(out);
  }
  if (mismatch) {
    err << "matrix and conjugate formulations disagree\n";
    return kExitInvariantViolation;
  }
  return kExitOk;
}

int cmd_identity_check(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const IdentityProblem prob = load_problem(cfg);
  const BoundReport rep = check_bound(prob);
  if (cfg.format == Format::kJson) {
    emit(json::to_json(rep), out);
  } else {
    Table t;
    t.row("n", std::to_string(rep.n));
    t.row("m", std::to_string(rep.m));
    t.row("bound k", optional_count(rep.bound));
    t.row("dim S", std::to_string(rep.dim));
    t.row("violation", yes_no(rep.violation));
    t.row("tight", yes_no(rep.tight));
    t.print(out);
  }
  if (rep.violation) {
    err << "dim S exceeds the proven bound\n";
    return kExitInvariantViolation;
  }
  return kExitOk;
}

int cmd_identity_sharp(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (!cfg.k) throw Error(ErrorKind::kParse, "identity-sharp needs --k");
  const SharpExample ex = sharp_example(cfg.n, *cfg.k);
  const std::size_t dim = solve_matrix_form(ex.problem).dim;
  const auto bound = lemma_bound(ex.problem.n(), ex.problem.m());
  const IdentityProblem long_prefix = sharp_example_long_prefix(cfg.n, *cfg.k);
  const std::size_t long_dim = solve_matrix_form(long_prefix).dim;
  const auto long_bound = lemma_bound(long_prefix.n(), long_prefix.m());
  const bool tight = bound && dim == *bound;

  if (cfg.format == Format::kJson) {
    ordered_json j;
    j["n"] = cfg.n;
    j["k"] = *cfg.k;
    j["problem"] = json::to_json(ex.problem);
    j["solutions"] = solution_pairs(ex.solutions);
    j["dim"] = dim;
    j["lemma_bound"] = bound ? ordered_json(*bound) : ordered_json(nullptr);
    j["tight"] = tight;
    ordered_json lp;
    lp["m"] = long_prefix.m();
    lp["dim"] = long_dim;
    lp["lemma_bound"] = long_bound ? ordered_json(*long_bound) : ordered_json(nullptr);
    j["long_prefix"] = std::move(lp);
    emit(j, out);
  } else {
    Table t;
    t.row("n", std::to_string(cfg.n));
    t.row("k", std::to_string(*cfg.k));
    t.row("m", std::to_string(ex.problem.m()));
    t.row("p", poly_list(ex.problem.p()));
    table_solutions(t, ex.solutions);
    t.row("dim S", std::to_string(dim));
    t.row("lemma bound", optional_count(bound));
    t.row("tight", yes_no(tight));
    t.row("long prefix m", std::to_string(long_prefix.m()));
    t.row("long prefix dim S", std::to_string(long_dim));
    t.row("long prefix bound", optional_count(long_bound));
    t.print(out);
  }
  if (dim < ex.solutions.size() || (bound && dim > *bound)) {
    err << "sharp example dimension outside [k, bound]\n";
    return kExitInvariantViolation;
  }
  return kExitOk;
}

int cmd_decompose(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  std::optional<IdentityProblem> prob;
  std::vector<SolutionPair> solutions;
  if (cfg.input) {
    prob = load_problem(cfg);
    solutions = solve_matrix_form(*prob).basis;
  } else {
    if (!cfg.k) throw Error(ErrorKind::kParse, "decompose needs --input FILE or --n/--k for a sharp example");
    SharpExample ex = sharp_example(cfg.n, *cfg.k);
    prob = std::move(ex.problem);
    solutions = std::move(ex.solutions);
  }
  const Decomposition dec = decompose(*prob, solutions);
  const bool ok = reconstruct(dec, prob->m(), prob->n()) == prob->p();
  if (cfg.format == Format::kJson) {
    ordered_json j;
    j["problem"] = json::to_json(*prob);
    j["decomposition"] = json::to_json(dec);
    j["reconstructs"] = ok;
    emit(j, out);
  } else {
    Table t;
    t.row("n", std::to_string(prob->n()));
    t.row("m", std::to_string(prob->m()));
    t.row("solutions used", std::to_string(solutions.size()));
    t.row("kappa", std::to_string(dec.kernel_basis.size()));
    for (std::size_t j = 0; j < dec.h.size(); ++j) {
      t.row("v_" + std::to_string(j + 1), point_string(dec.kernel_basis[j], false));
      t.row("h_" + std::to_string(j + 1), dec.h[j].to_string());
    }
    for (std::size_t i = 0; i < dec.s.size(); ++i) {
      t.row("r^(" + std::to_string(i + 1) + ")", dec.r[i].to_string());
      t.row("s^(" + std::to_string(i + 1) + ")", poly_list(dec.s[i]));
    }
    t.row("reconstructs p", yes_no(ok));
    t.print(out);
  }
  return ok ? kExitOk : kExitInvariantViolation;
}

int cmd_builtin(const RunConfig& cfg, std::ostream& out) {
  const CRMap f = load_map(cfg);
  if (cfg.format == Format::kJson) {
    emit(json::to_json(f), out);
  } else {
    Table t;
    t.row("n", std::to_string(f.n()));
    t.row("N", std::to_string(f.target_n()));
    for (std::size_t k = 0; k < f.components().size(); ++k)
      t.row("f_" + std::to_string(k + 1), f.components()[k].to_string());
    t.print(out);
  }
  return kExitOk;
}

}  // namespace

std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
                                    int& exit_code) {
  RunConfig cfg;
  std::string format = "table";
  CLI::App app{"Exact degeneracy ranks, plane bounds and polynomial identities for sphere maps", "crspan"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "Check that a map sends S^n into S^N");
  add_map_options(verify, cfg);
  add_format_options(verify, cfg, format);

  auto* analyze_cmd = app.add_subcommand("analyze", "Degeneracy profile, defect and image span of a map");
  add_map_options(analyze_cmd, cfg);
  add_format_options(analyze_cmd, cfg, format);
  analyze_cmd->add_option("--trials", cfg.trials, "Sampled base points")->check(CLI::PositiveNumber);
  analyze_cmd->add_option("--seed", cfg.seed, "Sampling seed");

  auto* solve = app.add_subcommand("identity-solve", "Solve p(z)Q = r(z)z exactly");
  solve->add_option("--input,-i", cfg.input, "Identity problem JSON file")->required();
  solve->add_option("--form", cfg.form, "matrix, conjugate or both")
      ->check(CLI::IsMember({"matrix", "conjugate", "both"}));
  add_format_options(solve, cfg, format);

  auto* check = app.add_subcommand("identity-check", "Compare dim S with the proven bound");
  check->add_option("--input,-i", cfg.input, "Identity problem JSON file")->required();
  add_format_options(check, cfg, format);

  auto* sharp = app.add_subcommand("identity-sharp", "Build the sharp monomial example");
  sharp->add_option("--n", cfg.n, "Number of variables")->required();
  sharp->add_option("--k", cfg.k, "Number of constructed solutions")->required();
  add_format_options(sharp, cfg, format);

  auto* decomp = app.add_subcommand("decompose", "Decompose p along a set of solutions");
  decomp->add_option("--input,-i", cfg.input, "Identity problem JSON file (uses the full solution basis)");
  decomp->add_option("--n", cfg.n, "Sharp example: number of variables");
  decomp->add_option("--k", cfg.k, "Sharp example: number of solutions");
  add_format_options(decomp, cfg, format);

  auto* builtin = app.add_subcommand("builtin", "Print a built-in map");
  add_map_options(builtin, cfg);
  add_format_options(builtin, cfg, format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    exit_code = app.exit(e, out, err);
    if (exit_code != 0) exit_code = kExitMalformedInput;
    return std::nullopt;
  }

  cfg.format = format == "json" ? Format::kJson : Format::kTable;
  if (*verify) cfg.command = Command::kVerify;
  if (*analyze_cmd) cfg.command = Command::kAnalyze;
  if (*solve) cfg.command = Command::kIdentitySolve;
  if (*check) cfg.command = Command::kIdentityCheck;
  if (*sharp) cfg.command = Command::kIdentitySharp;
  if (*decomp) cfg.command = Command::kDecompose;
  if (*builtin) cfg.command = Command::kBuiltin;
  exit_code = kExitOk;
  return cfg;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.trials < 1) throw Error(ErrorKind::kParse, "--trials must be >= 1");
    switch (config.command) {
      case Command::kVerify: return cmd_verify(config, out, err);
      case Command::kAnalyze: return cmd_analyze(config, out, err);
      case Command::kIdentitySolve: return cmd_identity_solve(config, out, err);
      case Command::kIdentityCheck: return cmd_identity_check(config, out, err);
      case Command::kIdentitySharp: return cmd_identity_sharp(config, out, err);
      case Command::kDecompose: return cmd_decompose(config, out, err);
      case Command::kBuiltin: return cmd_builtin(config, out);
    }
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    switch (e.kind()) {
      case ErrorKind::kSphereVerification: return kExitNotSphereMap;
      case ErrorKind::kInvariantViolation: return kExitInvariantViolation;
      default: return kExitMalformedInput;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitMalformedInput;
  }
  return kExitMalformedInput;
}

}  // namespace crspan::cli
