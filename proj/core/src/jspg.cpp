#include <cmath>

#include "ossmax/solvers.hpp"
#include "solver_common.hpp"

namespace ossmax {

Solution jspg_solve(const Objective& objective, const Polytope& polytope,
                    const SolverConfig& config) {
  config.validate();
  detail::check_problem(objective.dimension(), polytope);

  const auto& basis = polytope.basis();
  const double mu = config.mu();
  // One unit of solver time moves rho units of l1 mass, so t in [0,1] spans
  // the whole polytope. Selection compares per-direction slopes against
  // lambda / rho.
  const double rho = polytope.l1_radius();

  Solution out;
  SolverTrace& trace = out.trace;

  Vector x = polytope.max_l1_point();
  for (auto& v : x) v *= config.alpha;
  double t = config.alpha;

  // F(x0) and the three bound evaluations are independent: one round.
  double fx = objective.value(x);
  const OptBounds bounds = opt_bounds(objective, polytope);
  trace.value_queries += 4;
  ++trace.adaptive_rounds;
  if (!std::isfinite(fx) || !std::isfinite(bounds.lower) ||
      !std::isfinite(bounds.upper)) {
    throw SolverError("objective returned a non-finite value");
  }

  double lambda = bounds.upper;
  const double lambda_stop = std::exp(-mu) * bounds.lower;
  trace.history.push_back({t, lambda, 0.0, 0, fx});

  // The gradient is only re-queried once x has moved; an outer round that
  // just lowers lambda at the same x asks the oracle nothing new.
  Vector g;
  bool g_current = false;

  const auto cap = config.outer_round_cap();
  while (!detail::horizon_reached(t) && lambda >= lambda_stop && lambda > 0.0) {
    if (static_cast<std::int64_t>(trace.outer_rounds) >= cap) {
      throw SolverError("jspg: max_outer_rounds exceeded");
    }
    trace.lambda_schedule.push_back(lambda);

    const bool fresh = !g_current;
    if (fresh) {
      g = objective.gradient(x);
      ++trace.gradient_queries;
      detail::require_finite(g, "gradient oracle");
      g_current = true;
    }
    std::vector<bool> eligible =
        eligible_directions(polytope, x, rho, config.delta_tol);
    if (!detail::any_of(eligible)) break;  // no feasible ascent direction left
    DirectionSet set = select_directions(g, basis, lambda / rho, config, trace,
                                         eligible, fresh);
    detail::record_selection(config, trace, x, g, set, eligible);

    while (!set.empty() && !detail::horizon_reached(t)) {
      LineSearchResult step = choose_max_delta(objective, polytope, x, fx, basis,
                                               set, lambda, t, config, trace);
      if (step.delta <= 0.0) break;  // stale set: decay lambda
      x = std::move(step.x);
      fx = step.value;
      g_current = false;
      t += step.delta;
      ++trace.inner_rounds;
      trace.history.push_back({t, lambda, step.delta, set.size(), fx});
      if (detail::horizon_reached(t)) break;

      g = objective.gradient(x);
      ++trace.gradient_queries;
      detail::require_finite(g, "gradient oracle");
      g_current = true;
      eligible = eligible_directions(polytope, x, rho, config.delta_tol);
      set = select_directions(g, basis, lambda / rho, config, trace, eligible);
      detail::record_selection(config, trace, x, g, set, eligible);
    }
    lambda *= 1.0 - config.epsilon;
    ++trace.outer_rounds;
  }

  out.x = std::move(x);
  out.value = fx;
  out.lambda_final = lambda;
  out.t_final = t;
  return out;
}

}  // namespace ossmax
