#include <algorithm>
#include <cmath>

#include "ossmax/parallel.hpp"
#include "ossmax/solvers.hpp"
#include "solver_common.hpp"

namespace ossmax {

Solution spg_solve(const StochasticObjective& objective,
                   const Polytope& polytope, const SolverConfig& config) {
  config.validate();
  detail::check_problem(objective.dimension(), polytope);

  const auto& basis = polytope.basis();
  const Objective& truth = objective.truth();
  const double n = static_cast<double>(objective.dimension());
  const double mu = config.mu();
  const double eps = config.epsilon;
  const double rho = polytope.l1_radius();
  const std::int64_t batch = config.spg_batch;
  const double theta = config.noise_theta;

  // Stream indices are handed out sequentially before any concurrent work,
  // so results do not depend on the thread count.
  std::uint64_t next_stream = 0;
  auto fresh_stream = [&] {
    return objective.stream((config.seed << 32) + next_stream++);
  };

  Solution out;
  SolverTrace& trace = out.trace;

  Vector x(objective.dimension(), 0.0);
  double t = 0.0;

  // Round 0: prime d with a batch mean at x0 and estimate the OPT bracket.
  GradientEstimate estimate(objective.dimension());
  {
    SampleStream s = fresh_stream();
    estimate.prime(objective.mean_gradient(x, batch, s));
    trace.gradient_queries += static_cast<std::uint64_t>(batch);
  }
  detail::require_finite(estimate.d(), "stochastic gradient oracle");
  // E||grad F(x0) - d0||^2 <= theta^2 / batch for the batch mean.
  const double initial_gap_sq = theta * theta / static_cast<double>(batch);

  const Vector ones(objective.dimension(), 1.0);
  SampleStream bound_stream = fresh_stream();
  const double lower = objective.mean_value(polytope.max_l1_point(), batch,
                                            bound_stream);
  const double upper =
      std::min(objective.mean_value(ones, batch, bound_stream),
               objective.mean_value(polytope.upper_corner(), batch,
                                    bound_stream));
  trace.value_queries += 3 * static_cast<std::uint64_t>(batch);
  ++trace.adaptive_rounds;

  double lambda = upper;
  const double lambda_stop = std::exp(-mu) * lower;
  double true_value = truth.value(x);
  trace.history.push_back({t, lambda, 0.0, 0, true_value});

  double a2_cap = 1.0 / (mu * mu * (1.0 - eps));
  if (config.eta > 0.0) a2_cap = std::min(a2_cap, 1.0 / (n * config.eta));

  // d only changes after an accepted step; reselecting on the same d at a
  // lower lambda issues no oracle queries.
  bool d_fresh = true;

  const auto cap = config.outer_round_cap();
  while (!detail::horizon_reached(t) && lambda >= lambda_stop && lambda > 0.0) {
    if (static_cast<std::int64_t>(trace.outer_rounds) >= cap) {
      throw SolverError("spg: max_outer_rounds exceeded");
    }
    trace.lambda_schedule.push_back(lambda);

    std::vector<bool> eligible =
        eligible_directions(polytope, x, rho, config.delta_tol);
    if (!detail::any_of(eligible)) break;
    DirectionSet set = select_directions(estimate.d(), basis, lambda / rho,
                                         config, trace, eligible, d_fresh);
    d_fresh = false;
    detail::record_selection(config, trace, x, estimate.d(), set, eligible);

    while (!set.empty() && !detail::horizon_reached(t)) {
      const double k = kappa(initial_gap_sq, theta, config.lipschitz_L,
                             config.diameter_D, t);
      if (!std::isfinite(k)) throw SolverError("spg: non-finite kappa");
      const double lambda_eff = lambda + std::sqrt(k) * rho / mu;

      Vector move = mean_direction(basis, set);
      for (auto& v : move) v *= rho;
      const double step_cap =
          std::min({1.0 - t, a2_cap, polytope.max_step(x, move)});
      const double slope = mu * (1.0 - eps) * (1.0 - eps) * lambda_eff;
      const double slack = config.value_tol * std::max(1.0, std::abs(lambda));

      GainEvaluator gains = [&](std::span<const double> deltas) {
        std::vector<SampleStream> streams;
        streams.reserve(deltas.size());
        for (std::size_t i = 0; i < deltas.size(); ++i) {
          streams.push_back(fresh_stream());
        }
        GainBatch b;
        b.gains.resize(deltas.size());
        parallel_for(deltas.size(), config.threads, [&](std::size_t i) {
          const Vector to = detail::clamp_unit(axpy(x, deltas[i], move));
          b.gains[i] = objective.mean_value_difference(x, to, batch, streams[i]);
        });
        b.value_queries = 2 * static_cast<std::uint64_t>(batch) * deltas.size();
        return b;
      };
      const ScalarSearchResult found = max_delta_search(
          step_cap, config.delta_tol, slope, slack, gains, trace);
      if (found.delta <= 0.0) break;

      x = detail::clamp_unit(axpy(x, found.delta, move));
      SampleStream s = fresh_stream();
      const Vector sample = objective.sample_gradient(x, s);
      ++trace.gradient_queries;
      detail::require_finite(sample, "stochastic gradient oracle");
      estimate.update(sample, t);  // rho uses the pre-update t
      t += found.delta;
      ++trace.inner_rounds;
      true_value = truth.value(x);
      trace.history.push_back({t, lambda, found.delta, set.size(), true_value});
      if (detail::horizon_reached(t)) break;

      eligible = eligible_directions(polytope, x, rho, config.delta_tol);
      set = select_directions(estimate.d(), basis, lambda / rho, config, trace,
                              eligible);
      detail::record_selection(config, trace, x, estimate.d(), set, eligible);
    }
    lambda *= 1.0 - eps;
    ++trace.outer_rounds;
  }

  out.x = std::move(x);
  out.value = true_value;
  out.lambda_final = lambda;
  out.t_final = t;
  return out;
}

}  // namespace ossmax
