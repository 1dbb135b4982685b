#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "CLI11.hpp"
#include "ossmax/coverage.hpp"
#include "ossmax/instance_io.hpp"
#include "ossmax/quadratic.hpp"
#include "ossmax/solvers.hpp"
#include "ossmax/stochastic.hpp"
#include "ossmax/verify.hpp"
#include "run_record.hpp"

namespace ossmax::cli {
namespace {

namespace fs = std::filesystem;

// Grid oracle limits, mirrored so solve can skip the ratio instead of failing.
constexpr std::size_t kGridMaxDimension = 8;
constexpr double kGridMaxPoints = 1e7;

fs::path default_out_dir() {
  const char* env = std::getenv(kOutDirEnv);
  return (env != nullptr && *env != '\0') ? fs::path(env) : fs::path(".");
}

std::vector<std::string> split(const std::string& text, const char* seps) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (std::strchr(seps, c) != nullptr) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

double parse_real(const std::string& s) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size()) throw ValidationError("not a number: '" + s + "'");
  return v;
}

std::size_t parse_index(const std::string& s) {
  const double v = parse_real(s);
  if (v < 0 || v != std::floor(v)) {
    throw ValidationError("not an index: '" + s + "'");
  }
  return static_cast<std::size_t>(v);
}

// Flags that map one-to-one onto SolverConfig fields.
struct ConfigFlags {
  SolverConfig config;
  CLI::Option* sigma = nullptr;
};

void add_config_flags(CLI::App& app, ConfigFlags& f) {
  SolverConfig& c = f.config;
  app.add_option("--alpha", c.alpha, "jump-start scale in (0,1]");
  app.add_option("--epsilon", c.epsilon, "accuracy parameter in (0,1)");
  app.add_option("--eta", c.eta, "eta-local parameter (0 disables the cap)");
  f.sigma = app.add_option("--sigma", c.sigma,
                           "one-sided smoothness (default: instance's claim)");
  app.add_option("--delta-tol", c.delta_tol, "line-search resolution");
  app.add_option("--batch", c.spg_batch, "samples per stochastic estimate");
  app.add_option("--theta", c.noise_theta, "gradient noise level");
  app.add_option("--lipschitz", c.lipschitz_L, "gradient Lipschitz bound L");
  app.add_option("--diameter", c.diameter_D, "polytope diameter bound D");
  app.add_option("--seed", c.seed, "master seed");
  app.add_option("--threads", c.threads, "workers inside one adaptive round");
}

SolverConfig resolve_config(const ConfigFlags& f, const Instance& inst) {
  SolverConfig c = f.config;
  if (f.sigma == nullptr || f.sigma->count() == 0) {
    c.sigma = inst.objective->sigma_claimed();
  }
  c.validate();
  return c;
}

bool grid_affordable(std::size_t n, int resolution) {
  if (resolution <= 0 || n > kGridMaxDimension) return false;
  return std::pow(resolution + 1.0, static_cast<double>(n)) <= kGridMaxPoints;
}

RunRecord run_solver(const Instance& inst, const std::string& id,
                     const std::string& solver, const SolverConfig& cfg,
                     int grid_resolution) {
  RunRecord rec;
  rec.instance = id;
  rec.solver = solver;
  rec.config = cfg;
  rec.n = inst.objective->dimension();

  const auto start = std::chrono::steady_clock::now();
  Solution sol;
  if (solver == "jspg") {
    sol = jspg_solve(*inst.objective, *inst.polytope, cfg);
  } else if (solver == "serial") {
    sol = serial_baseline_solve(*inst.objective, *inst.polytope, cfg);
  } else if (solver == "spg") {
    StochasticObjective noisy(inst.objective, cfg.noise_theta, cfg.seed);
    sol = spg_solve(noisy, *inst.polytope, cfg);
  } else {
    throw ValidationError("unknown solver '" + solver + "'");
  }
  rec.wall_seconds = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - start)
                         .count();

  rec.value = sol.value;
  rec.adaptive_rounds = sol.trace.adaptive_rounds;
  rec.outer_rounds = sol.trace.outer_rounds;
  rec.inner_rounds = sol.trace.inner_rounds;
  rec.value_queries = sol.trace.value_queries;
  rec.gradient_queries = sol.trace.gradient_queries;

  const OptBounds bounds = opt_bounds(*inst.objective, *inst.polytope);
  rec.opt_lower = bounds.lower;
  rec.opt_upper = bounds.upper;
  rec.threshold = guaranteed_ratio(cfg);
  if (grid_affordable(rec.n, grid_resolution)) {
    const double g = brute_force_opt(*inst.objective, *inst.polytope,
                                     grid_resolution, cfg.threads)
                         .value;
    rec.grid_value = g;
    if (g > 0.0) rec.ratio = sol.value / g;
  }
  return rec;
}

void append_csv(const fs::path& path, const RunRecord& rec) {
  const bool fresh = !fs::exists(path) || fs::file_size(path) == 0;
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::app);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "'");
  if (fresh) out << csv_header() << '\n';
  write_csv_row(out, rec);
  if (!out) throw std::runtime_error("write failed for '" + path.string() + "'");
}

std::string opt_text(const std::optional<double>& v, const char* fmt) {
  if (!v) return "n/a";
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, *v);
  return buf;
}

void print_summary(std::ostream& out, const RunRecord& r) {
  out << r.solver << " on " << r.instance << " (n=" << r.n << ")\n"
      << "  value       " << opt_text(r.value, "%.6g") << "\n"
      << "  opt bracket [" << opt_text(r.opt_lower, "%.6g") << ", "
      << opt_text(r.opt_upper, "%.6g") << "], grid "
      << opt_text(r.grid_value, "%.6g") << "\n"
      << "  ratio       " << opt_text(r.ratio, "%.4f") << " (threshold "
      << opt_text(r.threshold, "%.4f") << ")\n"
      << "  rounds      " << r.adaptive_rounds << " adaptive, " << r.outer_rounds
      << " outer, " << r.inner_rounds << " inner\n"
      << "  queries     " << r.value_queries << " value, " << r.gradient_queries
      << " gradient\n";
}

std::string vec_text(const Vector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%s%.4g", i ? "," : "", v[i]);
    s += buf;
  }
  return s + ")";
}

// --- generate -------------------------------------------------------------

struct GenerateArgs {
  std::string kind;
  std::size_t n = 0;
  std::size_t m = 0;
  double density = 0.5;
  double weight_min = 0.5;
  double weight_max = 2.0;
  std::string points;
  std::string linear;
  std::size_t point_dim = 2;
  double b_min = 0.1;
  double b_max = 1.0;
  std::string polytope = "box";
  double upper = 1.0;
  std::size_t budget = 0;
  std::string order;
  std::uint64_t seed = 1;
  std::string out;
};

std::shared_ptr<const Polytope> make_polytope(const GenerateArgs& a,
                                              std::size_t n) {
  if (a.polytope == "box") return std::make_shared<BoxPolytope>(n, a.upper);
  if (a.polytope == "cardinality") {
    return std::make_shared<CardinalityPolytope>(n,
                                                 a.budget ? a.budget : (n + 1) / 2);
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  if (a.order.empty()) {
    for (std::size_t i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
  } else {
    for (const auto& p : split(a.order, ",;")) {
      const auto ends = split(p, ":");
      if (ends.size() != 2) throw ValidationError("order pairs look like i:j");
      pairs.emplace_back(parse_index(ends[0]), parse_index(ends[1]));
    }
  }
  return std::make_shared<MonotoneLinearPolytope>(n, std::move(pairs));
}

int cmd_generate(const GenerateArgs& a, std::ostream& out) {
  Instance inst;
  std::size_t n = a.n;
  if (a.kind == "coverage") {
    if (n == 0) throw ValidationError("coverage needs --n");
    CoverageParams p;
    p.n = n;
    p.m = a.m ? a.m : 2 * n;
    p.density = a.density;
    p.weight_min = a.weight_min;
    p.weight_max = a.weight_max;
    p.seed = a.seed;
    inst.objective =
        std::make_shared<CoverageMultilinearObjective>(make_coverage_instance(p));
  } else if (!a.points.empty()) {
    std::vector<Vector> pts;
    for (const auto& p : split(a.points, ";")) {
      Vector coords;
      for (const auto& c : split(p, ",")) coords.push_back(parse_real(c));
      pts.push_back(std::move(coords));
    }
    n = pts.size();
    Vector b(n, 0.0);
    if (!a.linear.empty()) {
      const auto parts = split(a.linear, ",;");
      if (parts.size() != n) throw ValidationError("--linear needs one entry per point");
      for (std::size_t i = 0; i < n; ++i) b[i] = parse_real(parts[i]);
    }
    inst.objective = std::make_shared<QuadraticSemiMetricObjective>(
        make_semimetric_instance(pts, std::move(b)));
  } else {
    if (n == 0) throw ValidationError("quadratic-semimetric needs --n or --points");
    inst.objective = std::make_shared<QuadraticSemiMetricObjective>(
        random_semimetric_instance(n, a.point_dim, a.b_min, a.b_max, a.seed));
  }
  inst.polytope = make_polytope(a, n);

  fs::path path = a.out;
  if (path.empty()) {
    path = default_out_dir() / (a.kind + "-n" + std::to_string(n) + "-s" +
                                std::to_string(a.seed) + ".inst");
  }
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  write_instance_file(path.string(), inst);
  out << path.string() << '\n';
  return kSuccess;
}

// --- solve ----------------------------------------------------------------

struct SolveArgs {
  std::string instance;
  std::string solver = "jspg";
  std::string id;
  std::string out;
  int grid_resolution = 10;
  ConfigFlags flags;
};

int cmd_solve(const SolveArgs& a, std::ostream& out) {
  const Instance inst = read_instance_file(a.instance);
  const SolverConfig cfg = resolve_config(a.flags, inst);
  const std::string id =
      a.id.empty() ? fs::path(a.instance).stem().string() : a.id;
  const RunRecord rec = run_solver(inst, id, a.solver, cfg, a.grid_resolution);
  const fs::path csv = a.out.empty() ? default_out_dir() / "results.csv"
                                     : fs::path(a.out);
  append_csv(csv, rec);
  print_summary(out, rec);
  out << "  csv         " << csv.string() << '\n';
  return kSuccess;
}

// --- verify ---------------------------------------------------------------

struct VerifyArgs {
  std::string instance;
  double sigma = 0.0;
  CLI::Option* sigma_opt = nullptr;
  double eta = 0.0;
  CLI::Option* eta_opt = nullptr;
  std::size_t trials = 1000;
  std::uint64_t seed = 1;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const Instance inst = read_instance_file(a.instance);
  const Objective& obj = *inst.objective;
  const double sigma =
      a.sigma_opt->count() ? a.sigma : obj.sigma_claimed();
  bool pass = true;

  const OssReport oss = verify_oss(obj, sigma, a.trials, a.seed);
  pass = pass && oss.pass;
  out << "one-sided smoothness, sigma=" << sigma << ": "
      << (oss.pass ? "PASS" : "FAIL") << " over " << oss.samples
      << " samples, worst violation " << oss.worst_violation << '\n';
  if (!oss.pass) {
    out << "  witness x=" << vec_text(oss.witness_x)
        << " u=" << vec_text(oss.witness_u) << '\n';
  }

  if (const auto* q = dynamic_cast<const QuadraticSemiMetricObjective*>(&obj)) {
    const SemimetricReport sm = verify_semimetric(q->matrix(), q->dimension(), sigma);
    pass = pass && sm.pass;
    out << "semi-metric triples, sigma=" << sigma << ": "
        << (sm.pass ? "PASS" : "FAIL") << ", worst violation "
        << sm.worst_violation << '\n';
    if (!sm.pass) {
      out << "  witness triple (i,j,k)=(" << sm.witness[0] << ','
          << sm.witness[1] << ',' << sm.witness[2] << ")\n";
    }
  }

  if (a.eta_opt->count()) {
    const EtaLocalReport el = verify_eta_local(obj, a.eta, a.trials, a.seed);
    pass = pass && el.pass;
    out << "eta-local, eta=" << a.eta << ": " << (el.pass ? "PASS" : "FAIL")
        << ", worst violation " << el.worst_violation << '\n';
    if (!el.pass) {
      out << "  witness x=" << vec_text(el.witness_x)
          << " u=" << vec_text(el.witness_u) << " s=" << el.witness_step << '\n';
    }
  }
  out << "verdict: " << (pass ? "PASS" : "FAIL") << '\n';
  return pass ? kSuccess : kVerificationFailed;
}

// --- bench ----------------------------------------------------------------

struct BenchArgs {
  std::string suite;
  std::string out_dir;
  int grid_resolution = 10;
};

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

void write_bench_summary(std::ostream& out, const std::vector<RunRecord>& rows) {
  using Key = std::tuple<std::string, double, std::size_t>;
  std::map<Key, std::vector<const RunRecord*>> groups;
  for (const auto& r : rows) {
    if (r.status == "ok") groups[{r.solver, r.config.epsilon, r.n}].push_back(&r);
  }
  out << "# medians per (solver, epsilon, n) over successful rows\n"
      << "solver epsilon n runs adaptive_rounds value_queries "
         "gradient_queries rounds_eps2_per_log_n min_ratio\n";
  std::map<std::pair<std::string, double>, std::vector<double>> curves;
  for (const auto& [key, group] : groups) {
    const auto& [solver, eps, n] = key;
    std::vector<double> rounds, values, grads, ratios;
    for (const RunRecord* r : group) {
      rounds.push_back(static_cast<double>(r->adaptive_rounds));
      values.push_back(static_cast<double>(r->value_queries));
      grads.push_back(static_cast<double>(r->gradient_queries));
      if (r->ratio) ratios.push_back(*r->ratio);
    }
    const double mr = median(rounds);
    curves[{solver, eps}].push_back(mr);
    char line[256];
    const double scale = n > 1 ? std::log(static_cast<double>(n)) / (eps * eps) : 0.0;
    std::snprintf(line, sizeof line, "%s %g %zu %zu %g %g %g %s %s\n",
                  solver.c_str(), eps, n, group.size(), mr, median(values),
                  median(grads),
                  scale > 0 ? format_real(mr / scale).c_str() : "n/a",
                  ratios.empty()
                      ? "n/a"
                      : format_real(*std::min_element(ratios.begin(), ratios.end()))
                            .c_str());
    out << line;
  }
  for (const auto& [key, medians] : curves) {
    const bool monotone = std::is_sorted(medians.begin(), medians.end());
    out << "# " << key.first << " epsilon=" << key.second
        << ": median adaptive_rounds nondecreasing in n: "
        << (monotone ? "yes" : "no") << '\n';
  }
}

int cmd_bench(const BenchArgs& a, std::ostream& out, std::ostream& err) {
  std::ifstream suite(a.suite);
  if (!suite) throw std::runtime_error("cannot open suite '" + a.suite + "'");
  const fs::path base = fs::path(a.suite).parent_path();
  const fs::path dir = a.out_dir.empty() ? default_out_dir() : fs::path(a.out_dir);
  fs::create_directories(dir);

  std::vector<RunRecord> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(suite, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ss(line);
    std::string inst_path, solver;
    if (!(ss >> inst_path)) continue;
    ss >> solver;
    std::string rest;
    std::getline(ss, rest);

    RunRecord rec;
    rec.instance = fs::path(inst_path).stem().string();
    rec.solver = solver;
    try {
      CLI::App row_app("suite row");
      ConfigFlags flags;
      add_config_flags(row_app, flags);
      row_app.parse(rest, false);
      fs::path p = inst_path;
      if (p.is_relative()) p = base / p;
      const Instance inst = read_instance_file(p.string());
      rec = run_solver(inst, rec.instance, solver, resolve_config(flags, inst),
                       a.grid_resolution);
    } catch (const std::exception& ex) {
      rec.status = "error: " + std::string(ex.what());
      err << a.suite << ':' << line_no << ": " << ex.what() << '\n';
    }
    rows.push_back(std::move(rec));
  }

  const fs::path csv = dir / "results.csv";
  {
    std::ofstream f(csv, std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write '" + csv.string() + "'");
    f << csv_header() << '\n';
    for (const auto& r : rows) write_csv_row(f, r);
  }
  const fs::path summary = dir / "summary.txt";
  {
    std::ofstream f(summary, std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write '" + summary.string() + "'");
    write_bench_summary(f, rows);
  }
  const auto failed = std::count_if(rows.begin(), rows.end(),
                                    [](const RunRecord& r) { return r.status != "ok"; });
  out << rows.size() << " runs, " << failed << " failed\n"
      << "  csv     " << csv.string() << "\n  summary " << summary.string() << '\n';
  return failed == 0 ? kSuccess : kRuntime;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app("Parallel greedy maximisation of one-sided smooth functions");
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* g = app.add_subcommand("generate", "write a seeded instance file");
  g->add_option("--kind", gen.kind, "objective family")
      ->required()
      ->check(CLI::IsMember({"coverage", "quadratic-semimetric"}));
  g->add_option("--n", gen.n, "dimension");
  g->add_option("--m", gen.m, "coverage: element count (default 2n)");
  g->add_option("--density", gen.density, "coverage: incidence probability");
  g->add_option("--weight-min", gen.weight_min, "coverage: weight lower bound");
  g->add_option("--weight-max", gen.weight_max, "coverage: weight upper bound");
  g->add_option("--points", gen.points,
                "quadratic: explicit points, ';' between points, ',' between coords");
  g->add_option("--linear", gen.linear, "quadratic: b, comma separated");
  g->add_option("--point-dim", gen.point_dim, "quadratic: random point dimension");
  g->add_option("--bmin", gen.b_min, "quadratic: b lower bound");
  g->add_option("--bmax", gen.b_max, "quadratic: b upper bound");
  g->add_option("--polytope", gen.polytope, "feasible region")
      ->check(CLI::IsMember({"box", "cardinality", "monotone-linear"}));
  g->add_option("--upper", gen.upper, "box: common upper bound");
  g->add_option("--budget", gen.budget, "cardinality: k (default ceil(n/2))");
  g->add_option("--order", gen.order,
                "monotone-linear: pairs i:j meaning x_i <= x_j (default chain)");
  g->add_option("--seed", gen.seed, "generator seed");
  g->add_option("--out", gen.out, "output path");

  SolveArgs sol;
  auto* s = app.add_subcommand("solve", "run one solver on an instance");
  s->add_option("instance", sol.instance, "instance file")->required();
  s->add_option("--solver", sol.solver, "jspg, spg or serial")
      ->check(CLI::IsMember({"jspg", "spg", "serial"}));
  s->add_option("--id", sol.id, "instance id for the CSV row");
  s->add_option("--out", sol.out, "CSV file to append to");
  s->add_option("--grid-resolution", sol.grid_resolution,
                "grid oracle resolution, 0 to skip");
  add_config_flags(*s, sol.flags);

  VerifyArgs ver;
  auto* v = app.add_subcommand("verify", "check the smoothness claims of an instance");
  v->add_option("instance", ver.instance, "instance file")->required();
  ver.sigma_opt = v->add_option("--sigma", ver.sigma, "sigma to check (default: claimed)");
  ver.eta_opt = v->add_option("--eta", ver.eta, "also check eta-locality");
  v->add_option("--trials", ver.trials, "random samples");
  v->add_option("--seed", ver.seed, "sampling seed");

  BenchArgs bench;
  auto* b = app.add_subcommand("bench", "run a suite file and summarise");
  b->add_option("suite", bench.suite, "suite file")->required();
  b->add_option("--out-dir", bench.out_dir, "directory for results.csv and summary.txt");
  b->add_option("--grid-resolution", bench.grid_resolution,
                "grid oracle resolution, 0 to skip");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kValidation;
  }

  try {
    if (*g) return cmd_generate(gen, out);
    if (*s) return cmd_solve(sol, out);
    if (*v) return cmd_verify(ver, out);
    return cmd_bench(bench, out, err);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kValidation;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kValidation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kRuntime;
  }
}

}  // namespace ossmax::cli
