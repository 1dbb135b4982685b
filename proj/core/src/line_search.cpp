#include <algorithm>
#include <cmath>
#include <limits>

#include "ossmax/parallel.hpp"
#include "ossmax/solvers.hpp"
#include "solver_common.hpp"

namespace ossmax {

ScalarSearchResult max_delta_search(double cap, double delta_tol, double slope,
                                    double slack, const GainEvaluator& gains,
                                    SolverTrace& trace) {
  if (!(cap > 0.0)) return {};
  std::vector<double> ladder;
  for (double d = delta_tol; d < cap; d *= 2.0) ladder.push_back(d);
  ladder.push_back(cap);

  auto passes = [&](double delta, double gain) {
    if (!std::isfinite(gain)) {
      throw SolverError("line search: non-finite objective value");
    }
    return gain >= slope * delta - slack;
  };

  GainBatch first = gains(ladder);
  ++trace.adaptive_rounds;
  trace.value_queries += first.value_queries;

  std::size_t fail = ladder.size();
  for (std::size_t i = 0; i < ladder.size(); ++i) {
    if (!passes(ladder[i], first.gains[i])) {
      fail = i;
      break;
    }
  }
  if (fail == ladder.size()) return {cap, first.gains.back()};
  if (fail == 0) return {};

  double lo = ladder[fail - 1];
  double lo_gain = first.gains[fail - 1];
  double hi = ladder[fail];
  while (hi - lo > delta_tol) {
    const double mid = 0.5 * (lo + hi);
    const double probe[] = {mid};
    GainBatch b = gains(probe);
    ++trace.adaptive_rounds;
    trace.value_queries += b.value_queries;
    if (passes(mid, b.gains[0])) {
      lo = mid;
      lo_gain = b.gains[0];
    } else {
      hi = mid;
    }
  }
  return {lo, lo_gain};
}

LineSearchResult choose_max_delta(const Objective& objective,
                                  const Polytope& polytope, ConstVectorView x,
                                  double fx, const std::vector<Vector>& basis,
                                  const DirectionSet& set, double lambda,
                                  double t, const SolverConfig& config,
                                  SolverTrace& trace) {
  if (set.empty()) throw ValidationError("choose_max_delta: empty set");
  const double n = static_cast<double>(objective.dimension());
  const double mu = config.mu();
  const double eps = config.epsilon;
  const double rho = polytope.l1_radius();

  Vector move = mean_direction(basis, set);
  for (auto& v : move) v *= rho;

  double cap = std::min(1.0 - t, 1.0 / (mu * (1.0 - eps)));
  if (config.eta > 0.0) cap = std::min(cap, 1.0 / (n * config.eta));
  cap = std::min(cap, polytope.max_step(x, move));

  LineSearchResult result;
  result.cap = cap;
  const double slope = mu * (1.0 - eps) * (1.0 - eps) * lambda;
  const double slack = config.value_tol * std::max(1.0, std::abs(fx));

  GainEvaluator gains = [&](std::span<const double> deltas) {
    GainBatch batch;
    batch.gains.resize(deltas.size());
    parallel_for(deltas.size(), config.threads, [&](std::size_t i) {
      batch.gains[i] = objective.value(detail::clamp_unit(axpy(x, deltas[i], move))) - fx;
    });
    batch.value_queries = deltas.size();
    return batch;
  };

  const ScalarSearchResult found =
      max_delta_search(cap, config.delta_tol, slope, slack, gains, trace);
  if (found.delta <= 0.0) return result;
  result.delta = found.delta;
  result.x = detail::clamp_unit(axpy(x, found.delta, move));
  result.value = fx + found.gain;
  return result;
}

}  // namespace ossmax
