// Acceptance driver: one PASS/FAIL line per criterion, tolerances pinned
// below. `--calibrate` prints the raw sweep numbers used to freeze the
// round and query constants and exits without judging anything.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ossmax/config.hpp"
#include "ossmax/coverage.hpp"
#include "ossmax/polytope.hpp"
#include "ossmax/quadratic.hpp"
#include "ossmax/solvers.hpp"
#include "ossmax/stochastic.hpp"
#include "ossmax/verify.hpp"
#include "../support/suite.hpp"

namespace {

using namespace ossmax;
using ossmax::testing::SuiteEntry;

// Pinned tolerances.
constexpr double kEpsilon = 0.1;
constexpr int kGridResolution = 10;
constexpr double kRatioSlack = 0.01;        // fraction of grid OPT
constexpr double kSigmaZeroRatio = 1.0 - 1.0 / 2.718281828459045 - 0.1;
constexpr double kMaxLogLogSlope = 0.5;
constexpr double kVarianceEnvelope = 2.0;
constexpr double kDecaySlopeLo = -1.0;
constexpr double kDecaySlopeHi = -0.4;
constexpr double kSpgMatch = 0.02;
constexpr std::size_t kOssSamples = 1000;
constexpr double kEnumerationTol = 1e-9;
constexpr double kAdaptivityFactor = 4.0;
constexpr double kValueMatch = 0.05;

// Frozen from `--calibrate` at n = 4, epsilon = 0.2: twice the median
// measurement, rounded up. Measured 3 rounds, 1 gradient call, 25 value
// queries, i.e. 0.0866, 0.0289, 0.7213 per log(n)/eps^2.
constexpr double kRoundConstant = 0.18;      // C
constexpr double kGradientConstant = 0.06;   // C'
constexpr double kValueConstant = 1.5;       // C''

const std::vector<std::size_t> kSweepN = {4, 8, 16, 32};
const std::vector<double> kSweepEps = {0.1, 0.2};
const std::vector<std::uint64_t> kSweepSeeds = {11, 12, 13, 14, 15};

struct Outcome {
  bool pass = true;
  std::string detail;
};

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

// Least-squares slope of log(y) against log(x).
double log_log_slope(const std::vector<double>& xs,
                     const std::vector<double>& ys) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double k = static_cast<double>(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double lx = std::log(xs[i]);
    const double ly = std::log(ys[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

std::string fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

// Lipschitz bound on the coverage gradient: Frobenius norm of the entrywise
// bound |d2F/dx_i dx_j| <= sum of weights shared by sets i and j.
double coverage_lipschitz(const CoverageMultilinearObjective& c) {
  const std::size_t n = c.dimension();
  std::vector<std::vector<bool>> member(n,
                                        std::vector<bool>(c.element_count()));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t e : c.sets()[i]) member[i][e] = true;
  }
  double sq = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      double shared = 0.0;
      for (std::size_t e = 0; e < c.element_count(); ++e) {
        if (member[i][e] && member[j][e]) shared += c.weights()[e];
      }
      sq += shared * shared;
    }
  }
  return std::sqrt(sq);
}

struct GridCache {
  std::map<std::string, double> opt;
  double get(const SuiteEntry& e) {
    auto it = opt.find(e.id);
    if (it != opt.end()) return it->second;
    const double v =
        brute_force_opt(*e.objective, *e.polytope, kGridResolution, 4).value;
    opt[e.id] = v;
    return v;
  }
};

SolverConfig suite_config(const SuiteEntry& e) {
  SolverConfig cfg;
  cfg.epsilon = kEpsilon;
  cfg.alpha = e.alpha;
  cfg.sigma = e.sigma;
  return cfg;
}

Outcome criterion_ratio(const std::vector<SuiteEntry>& suite, GridCache& grid) {
  Outcome out;
  double worst = 1e300;
  std::string worst_id;
  for (const auto& e : suite) {
    const SolverConfig cfg = suite_config(e);
    const Solution sol = jspg_solve(*e.objective, *e.polytope, cfg);
    const double opt = grid.get(e);
    const double need = guaranteed_ratio(cfg) * opt - kRatioSlack * opt;
    const double margin = (sol.value - need) / opt;
    if (!membership(*e.polytope, sol.x) || sol.value < need) out.pass = false;
    if (margin < worst) {
      worst = margin;
      worst_id = e.id;
    }
  }
  out.detail = "20 instances, worst margin " + fmt("%.4f", worst) +
               " x OPT (" + worst_id + ")";
  return out;
}

Outcome criterion_sigma_zero(const std::vector<SuiteEntry>& suite,
                             GridCache& grid) {
  Outcome out;
  double worst = 1e300;
  int count = 0;
  for (const auto& e : suite) {
    if (e.sigma != 0.0) continue;
    ++count;
    const Solution sol = jspg_solve(*e.objective, *e.polytope, suite_config(e));
    const double ratio = sol.value / grid.get(e);
    worst = std::min(worst, ratio);
    if (ratio < kSigmaZeroRatio) out.pass = false;
  }
  out.detail = std::to_string(count) + " instances, min ratio " +
               fmt("%.4f", worst) + " >= " + fmt("%.4f", kSigmaZeroRatio);
  return out;
}

struct SweepCell {
  double rounds = 0, gradient_calls = 0, value_queries = 0;
};

std::map<std::pair<std::size_t, double>, SweepCell> run_sweep() {
  std::map<std::pair<std::size_t, double>, SweepCell> cells;
  for (double eps : kSweepEps) {
    for (std::size_t n : kSweepN) {
      std::vector<double> rounds, grads, values;
      for (std::uint64_t seed : kSweepSeeds) {
        const SuiteEntry e = ossmax::testing::sweep_instance(n, seed);
        SolverConfig cfg;
        cfg.epsilon = eps;
        e.objective->reset_counters();
        const Solution sol = jspg_solve(*e.objective, *e.polytope, cfg);
        rounds.push_back(static_cast<double>(sol.trace.adaptive_rounds));
        grads.push_back(static_cast<double>(e.objective->gradient_queries()));
        values.push_back(static_cast<double>(e.objective->value_queries()));
      }
      cells[{n, eps}] = {median(rounds), median(grads), median(values)};
    }
  }
  return cells;
}

double scale(std::size_t n, double eps) {
  return std::log(static_cast<double>(n)) / (eps * eps);
}

Outcome criterion_rounds(
    const std::map<std::pair<std::size_t, double>, SweepCell>& cells) {
  Outcome out;
  std::ostringstream d;
  double worst = 0.0;
  for (double eps : kSweepEps) {
    std::vector<double> xs, ys;
    for (std::size_t n : kSweepN) {
      const SweepCell& c = cells.at({n, eps});
      worst = std::max(worst, c.rounds / (kRoundConstant * scale(n, eps)));
      xs.push_back(static_cast<double>(n));
      ys.push_back(c.rounds);
    }
    const double slope = log_log_slope(xs, ys);
    if (!(slope < kMaxLogLogSlope)) out.pass = false;
    d << "eps=" << eps << " slope " << fmt("%.3f", slope) << "; ";
  }
  if (worst > 1.0) out.pass = false;
  d << "max rounds/(C log n/eps^2) " << fmt("%.3f", worst) << " (C="
    << kRoundConstant << ")";
  out.detail = d.str();
  return out;
}

Outcome criterion_queries(
    const std::map<std::pair<std::size_t, double>, SweepCell>& cells) {
  Outcome out;
  double worst_g = 0.0, worst_v = 0.0;
  for (const auto& [key, c] : cells) {
    const auto [n, eps] = key;
    // Each full gradient call answers n partial-derivative queries.
    const double partials = c.gradient_calls * static_cast<double>(n);
    worst_g = std::max(worst_g, partials / (kGradientConstant *
                                            static_cast<double>(n) *
                                            scale(n, eps)));
    worst_v = std::max(worst_v, c.value_queries / (kValueConstant * scale(n, eps)));
  }
  if (worst_g > 1.0 || worst_v > 1.0) out.pass = false;
  out.detail = "max grad/(C' n log n/eps^2) " + fmt("%.3f", worst_g) +
               ", max value/(C'' log n/eps^2) " + fmt("%.3f", worst_v) +
               " (line-search probes batched per round)";
  return out;
}

Outcome criterion_variance() {
  Outcome out;
  const SuiteEntry e = ossmax::testing::sweep_instance(8, 77);
  const auto& cov = dynamic_cast<const CoverageMultilinearObjective&>(*e.objective);
  const double theta = 0.5;
  // x is frozen, so the iterate path has diameter 0 and only the noise and
  // initial-gap terms of kappa are active.
  const double lipschitz = coverage_lipschitz(cov);
  const double diameter = 0.0;
  const Vector x(cov.dimension(), 0.5);
  const Vector g = cov.gradient(x);
  const double gap0 = dot(g, g);  // d starts at zero
  const std::vector<int> checkpoints = {5, 10, 25, 50, 100, 200};
  std::vector<double> mse(checkpoints.size(), 0.0);
  const int seeds = 50;
  for (int s = 0; s < seeds; ++s) {
    StochasticObjective noisy(e.objective, theta, 9000 + s);
    GradientEstimate est(cov.dimension());
    std::size_t next = 0;
    for (int t = 0; t < 200; ++t) {
      SampleStream stream = noisy.stream(static_cast<std::uint64_t>(t));
      est.update(noisy.sample_gradient(x, stream), static_cast<double>(t));
      if (next < checkpoints.size() && t + 1 == checkpoints[next]) {
        double err = 0.0;
        for (std::size_t i = 0; i < g.size(); ++i) {
          err += (g[i] - est.d()[i]) * (g[i] - est.d()[i]);
        }
        mse[next++] += err / seeds;
      }
    }
  }
  std::vector<double> xs;
  double worst = 0.0;
  for (std::size_t k = 0; k < checkpoints.size(); ++k) {
    const double t = checkpoints[k];
    const double bound = kappa(gap0, theta, lipschitz, diameter, t);
    worst = std::max(worst, mse[k] / bound);
    if (mse[k] > kVarianceEnvelope * bound) out.pass = false;
    xs.push_back(t + 9.0);
  }
  const double slope = log_log_slope(xs, mse);
  if (slope < kDecaySlopeLo || slope > kDecaySlopeHi) out.pass = false;
  out.detail = "max mse/kappa " + fmt("%.3f", worst) + ", decay slope " +
               fmt("%.3f", slope) + " in [-1.0, -0.4]";
  return out;
}

Outcome criterion_spg(const std::vector<SuiteEntry>& suite, GridCache& grid) {
  Outcome out;
  double worst_margin = 1e300, worst_match = 0.0;
  for (const auto& e : suite) {
    if (e.sigma != 0.0) continue;
    const auto& cov =
        dynamic_cast<const CoverageMultilinearObjective&>(*e.objective);
    const double opt = grid.get(e);
    const double jspg = jspg_solve(*e.objective, *e.polytope, suite_config(e)).value;
    for (double theta : {0.0, 0.25}) {
      SolverConfig cfg = suite_config(e);
      cfg.noise_theta = theta;
      cfg.seed = 31;
      if (theta > 0.0) {
        cfg.lipschitz_L = coverage_lipschitz(cov);
        cfg.diameter_D = l2_norm(e.polytope->upper_corner());
      }
      StochasticObjective noisy(e.objective, theta, 4242);
      const Solution sol = spg_solve(noisy, *e.polytope, cfg);
      const double gap0 = theta * theta / static_cast<double>(cfg.spg_batch);
      const double k_final = kappa(gap0, theta, cfg.lipschitz_L,
                                   cfg.diameter_D, sol.t_final);
      const double c = cfg.mu() * e.polytope->l1_radius() + 1.0;
      const double need = kSigmaZeroRatio * opt - c * std::sqrt(k_final);
      worst_margin = std::min(worst_margin, (sol.value - need) / opt);
      if (sol.value < need || !membership(*e.polytope, sol.x)) out.pass = false;
      if (theta == 0.0) {
        const double rel = std::abs(sol.value - jspg) / jspg;
        worst_match = std::max(worst_match, rel);
        if (rel > kSpgMatch) out.pass = false;
      }
    }
  }
  out.detail = "worst margin " + fmt("%.4f", worst_margin) +
               " x OPT, theta=0 max |spg-jspg|/jspg " + fmt("%.4f", worst_match);
  return out;
}

Outcome criterion_oss(const std::vector<SuiteEntry>& suite) {
  Outcome out;
  int checked = 0;
  for (const auto& e : suite) {
    const OssReport r = verify_oss(*e.objective, e.sigma, kOssSamples, 5);
    if (!r.pass) out.pass = false;
    ++checked;
  }
  // Collinear points {0,1,3}: M_02 = 3 while sigma (M_01 + M_12) = 0.9 at
  // sigma = 0.3. With b = 0 the quadratic breaks the inequality.
  const auto bad =
      make_semimetric_instance({{0.0}, {1.0}, {3.0}}, Vector(3, 0.0));
  const OssReport r = verify_oss(bad, 0.3, kOssSamples, 5);
  const SemimetricReport s = verify_semimetric(bad.matrix(), 3, 0.3);
  if (r.pass || s.pass) out.pass = false;
  std::ostringstream d;
  d << checked << " shipped instances pass; violating instance fails, worst "
    << fmt("%.4f", r.worst_violation) << " at x=(";
  for (std::size_t i = 0; i < r.witness_x.size(); ++i) {
    d << (i ? "," : "") << fmt("%.3f", r.witness_x[i]);
  }
  d << ") u=(";
  for (std::size_t i = 0; i < r.witness_u.size(); ++i) {
    d << (i ? "," : "") << fmt("%.3f", r.witness_u[i]);
  }
  d << "), triple (" << s.witness[0] << "," << s.witness[1] << ","
    << s.witness[2] << ")";
  out.detail = d.str();
  return out;
}

// Independent ground truth: expectation of the set function over all 2^n
// outcomes of independent rounding.
double enumerate_expectation(const CoverageMultilinearObjective& c,
                             const Vector& x) {
  const std::size_t n = c.dimension();
  double total = 0.0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    double prob = 1.0;
    std::vector<bool> covered(c.element_count(), false);
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1u << i)) {
        prob *= x[i];
        for (std::size_t e : c.sets()[i]) covered[e] = true;
      } else {
        prob *= 1.0 - x[i];
      }
    }
    double f = 0.0;
    for (std::size_t e = 0; e < covered.size(); ++e) {
      if (covered[e]) f += c.weights()[e];
    }
    total += prob * f;
  }
  return total;
}

Outcome criterion_enumeration(const std::vector<SuiteEntry>& suite) {
  Outcome out;
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst = 0.0;
  int points = 0;
  for (const auto& e : suite) {
    const auto* cov =
        dynamic_cast<const CoverageMultilinearObjective*>(e.objective.get());
    if (cov == nullptr || cov->dimension() > 6) continue;
    for (int k = 0; k < 50; ++k) {
      Vector x(cov->dimension());
      for (auto& v : x) v = unit(rng);
      if (k == 0) std::fill(x.begin(), x.end(), 1.0);
      if (k == 1) std::fill(x.begin(), x.end(), 0.0);
      const double err = std::abs(cov->value(x) - enumerate_expectation(*cov, x));
      worst = std::max(worst, err);
      ++points;
    }
  }
  if (worst > kEnumerationTol) out.pass = false;
  out.detail = std::to_string(points) + " points, max |closed-enum| " +
               fmt("%.2e", worst);
  return out;
}

Outcome criterion_non_downward_closed() {
  Outcome out;
  const MonotoneLinearPolytope p(2, {{0, 1}});
  const auto f = make_linear_objective({2.0, 1.0});
  SolverConfig cfg;
  cfg.epsilon = kEpsilon;
  const Solution sol = jspg_solve(f, p, cfg);
  const double opt = brute_force_opt(f, p, kGridResolution).value;
  const double ratio = sol.value / opt;
  const bool feasible = membership(p, sol.x) && sol.x[0] <= sol.x[1] + 1e-9;
  out.pass = feasible && ratio >= guaranteed_ratio(cfg);
  out.detail = "x=(" + fmt("%.4f", sol.x[0]) + "," + fmt("%.4f", sol.x[1]) +
               "), ratio " + fmt("%.4f", ratio) + " >= " +
               fmt("%.4f", guaranteed_ratio(cfg));
  return out;
}

Outcome criterion_adaptivity() {
  Outcome out;
  double worst_factor = 1e300, worst_gap = 0.0;
  for (std::uint64_t seed : {21, 22, 23}) {
    const SuiteEntry e = ossmax::testing::sweep_instance(16, seed);
    SolverConfig cfg;
    cfg.epsilon = kEpsilon;
    const Solution par = jspg_solve(*e.objective, *e.polytope, cfg);
    const Solution ser = serial_baseline_solve(*e.objective, *e.polytope, cfg);
    const double factor = static_cast<double>(ser.trace.adaptive_rounds) /
                          static_cast<double>(par.trace.adaptive_rounds);
    const double gap = std::abs(par.value - ser.value) / ser.value;
    worst_factor = std::min(worst_factor, factor);
    worst_gap = std::max(worst_gap, gap);
    if (factor < kAdaptivityFactor || gap > kValueMatch) out.pass = false;
  }
  out.detail = "min serial/jspg rounds " + fmt("%.2f", worst_factor) +
               ", max value gap " + fmt("%.4f", worst_gap);
  return out;
}

int calibrate() {
  const auto cells = run_sweep();
  std::printf("n eps rounds grad_calls value_queries | per log(n)/eps^2\n");
  for (const auto& [key, c] : cells) {
    const double s = scale(key.first, key.second);
    std::printf("%zu %.1f %.0f %.0f %.0f | %.4f %.4f %.4f\n", key.first,
                key.second, c.rounds, c.gradient_calls, c.value_queries,
                c.rounds / s, c.gradient_calls / s, c.value_queries / s);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1 && std::strcmp(argv[1], "--calibrate") == 0) return calibrate();

  const auto suite = ossmax::testing::ratio_suite();
  GridCache grid;
  std::map<std::pair<std::size_t, double>, SweepCell> sweep;
  bool sweep_done = false;
  auto sweep_cells = [&]() -> const auto& {
    if (!sweep_done) {
      sweep = run_sweep();
      sweep_done = true;
    }
    return sweep;
  };

  const std::vector<std::pair<int, std::function<Outcome()>>> criteria = {
      {1, [&] { return criterion_ratio(suite, grid); }},
      {2, [&] { return criterion_sigma_zero(suite, grid); }},
      {3, [&] { return criterion_rounds(sweep_cells()); }},
      {4, [&] { return criterion_queries(sweep_cells()); }},
      {5, [&] { return criterion_variance(); }},
      {6, [&] { return criterion_spg(suite, grid); }},
      {7, [&] { return criterion_oss(suite); }},
      {8, [&] { return criterion_enumeration(suite); }},
      {9, [&] { return criterion_non_downward_closed(); }},
      {10, [&] { return criterion_adaptivity(); }},
  };

  int failures = 0;
  for (const auto& [id, run] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& ex) {
      o.pass = false;
      o.detail = std::string("exception: ") + ex.what();
    }
    const double secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    if (!o.pass) ++failures;
    std::printf("criterion %2d: %s  %s  [%.1fs]\n", id, o.pass ? "PASS" : "FAIL",
                o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
