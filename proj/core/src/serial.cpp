#include <algorithm>
#include <cmath>
#include <limits>

#include "ossmax/solvers.hpp"
#include "solver_common.hpp"

namespace ossmax {

Solution serial_baseline_solve(const Objective& objective,
                               const Polytope& polytope,
                               const SolverConfig& config) {
  config.validate();
  detail::check_problem(objective.dimension(), polytope);

  const auto& basis = polytope.basis();
  const double rho = polytope.l1_radius();
  const double delta =
      config.epsilon / static_cast<double>(objective.dimension());

  Solution out;
  SolverTrace& trace = out.trace;

  Vector x = polytope.max_l1_point();
  for (auto& v : x) v *= config.alpha;
  double t = config.alpha;
  double fx = objective.value(x);
  ++trace.value_queries;
  ++trace.adaptive_rounds;
  trace.history.push_back({t, 0.0, 0.0, 0, fx});

  // Full-length steps take (1 - alpha) / delta iterations; clipped steps
  // exhaust a direction, so this leaves ample room.
  const auto step_cap = static_cast<std::uint64_t>(
      std::ceil((1.0 - config.alpha) / delta) +
      basis.size() * static_cast<double>(config.outer_round_cap()));

  while (!detail::horizon_reached(t)) {
    if (trace.inner_rounds >= step_cap) {
      throw SolverError("serial baseline: step cap exceeded");
    }
    const Vector g = objective.gradient(x);
    ++trace.gradient_queries;
    ++trace.adaptive_rounds;
    detail::require_finite(g, "gradient oracle");
    const std::vector<bool> eligible =
        eligible_directions(polytope, x, rho, config.delta_tol);

    std::size_t best = basis.size();
    double best_slope = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (!eligible[i]) continue;
      const double slope = dot(basis[i], g);
      if (slope > best_slope) {
        best_slope = slope;
        best = i;
      }
    }
    if (best == basis.size()) break;

    Vector move = basis[best];
    for (auto& v : move) v *= rho;
    const double step =
        std::min({delta, 1.0 - t, polytope.max_step(x, move)});
    x = detail::clamp_unit(axpy(x, step, move));
    t += step;
    fx = objective.value(x);
    ++trace.value_queries;
    if (!std::isfinite(fx)) throw SolverError("objective returned non-finite");
    ++trace.inner_rounds;
    trace.history.push_back({t, 0.0, step, 1, fx});
  }

  out.x = std::move(x);
  out.value = fx;
  out.t_final = t;
  return out;
}

}  // namespace ossmax
