#ifndef OSSMAX_SOLVERS_HPP_
#define OSSMAX_SOLVERS_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "ossmax/config.hpp"
#include "ossmax/objective.hpp"
#include "ossmax/polytope.hpp"
#include "ossmax/stochastic.hpp"
#include "ossmax/trace.hpp"

namespace ossmax {

// ---------------------------------------------------------------------------
// Direction selection

struct DirectionSet {
  std::vector<std::size_t> members;  // indices into the basis
  double lambda = 0.0;               // threshold scale passed to selection
  double threshold = 0.0;            // (1 - epsilon) mu lambda
  std::uint64_t round = 0;           // adaptive round that produced the set

  bool empty() const { return members.empty(); }
  std::size_t size() const { return members.size(); }
};

// All basis directions v with v^T signal >= (1 - epsilon) mu lambda (minus
// value_tol). `eligible`, when non-empty, masks out directions P cannot move
// along. Counts as one adaptive round when `fresh_signal` is set, i.e. the
// signal came from new oracle answers rather than a reused one.
DirectionSet select_directions(ConstVectorView signal,
                               const std::vector<Vector>& basis, double lambda,
                               const SolverConfig& config, SolverTrace& trace,
                               const std::vector<bool>& eligible = {},
                               bool fresh_signal = true);

// (1/|S|) sum_{i in S} v_i
Vector mean_direction(const std::vector<Vector>& basis,
                      const DirectionSet& set);

// Directions along which P admits a move of at least delta_tol * scale.
std::vector<bool> eligible_directions(const Polytope& polytope,
                                      ConstVectorView x, double scale,
                                      double delta_tol);

// ---------------------------------------------------------------------------
// Line search

struct LineSearchResult {
  double delta = 0.0;  // 0 signals a stale direction set
  Vector x;            // iterate after the step (unset when delta == 0)
  double value = 0.0;  // F at x
  double cap = 0.0;    // min of the step caps and the feasibility limit
};

// Largest delta in [delta_tol, cap] (to delta_tol resolution) with
//   F(x + delta rho d) - F(x) >= mu (1 - epsilon)^2 delta lambda,
// where d is the mean direction of `set`, rho = polytope.l1_radius() and
// cap = min(1/(n eta), 1/(mu (1 - epsilon)), 1 - t, feasibility limit).
// Probes the ladder {delta_tol 2^j} and cap in one adaptive round, then
// bisects between the last pass and the first failure one probe per round.
LineSearchResult choose_max_delta(const Objective& objective,
                                  const Polytope& polytope, ConstVectorView x,
                                  double fx, const std::vector<Vector>& basis,
                                  const DirectionSet& set, double lambda,
                                  double t, const SolverConfig& config,
                                  SolverTrace& trace);

// Ladder/bisection core shared by the solvers. `gains` evaluates the
// objective increase at a batch of candidate steps (one adaptive round) and
// reports how many value queries it spent. A candidate passes when
// gain >= slope * delta - slack.
struct GainBatch {
  std::vector<double> gains;
  std::uint64_t value_queries = 0;
};
using GainEvaluator = std::function<GainBatch(std::span<const double>)>;

struct ScalarSearchResult {
  double delta = 0.0;
  double gain = 0.0;
};

ScalarSearchResult max_delta_search(double cap, double delta_tol, double slope,
                                    double slack, const GainEvaluator& gains,
                                    SolverTrace& trace);

// ---------------------------------------------------------------------------
// Stochastic gradient estimate

// rho_t = (4 / (t + 8))^(2/3)
double momentum_weight(double t);

// max{5 gap0_sq, 16 theta^2 + 2 L^2 D^2} / (t + 9)^(2/3), where gap0_sq bounds
// ||grad F(x0) - d0||^2.
double kappa(double initial_gap_sq, double theta, double lipschitz,
             double diameter, double t);

class GradientEstimate {
 public:
  explicit GradientEstimate(std::size_t dimension)
      : d_(dimension, 0.0) {}

  const Vector& d() const { return d_; }
  double t_last() const { return t_last_; }
  double rho_last() const { return rho_last_; }
  std::uint64_t updates() const { return updates_; }

  // d <- (1 - rho_t) d + rho_t sample
  void update(ConstVectorView sample, double t);

  // Overwrites d without counting an update. SPG uses it to start from a
  // batch mean instead of 0.
  void prime(ConstVectorView d);

 private:
  Vector d_;
  double t_last_ = 0.0;
  double rho_last_ = 0.0;
  std::uint64_t updates_ = 0;
};

GradientEstimate update_gradient_estimate(GradientEstimate estimate,
                                          ConstVectorView sample, double t);

// ---------------------------------------------------------------------------
// Solvers

// Jump-start parallel greedy. Starts from alpha * max_l1_point at t = alpha,
// lambda from the upper OPT bound, and stops once t >= 1, lambda drops below
// e^{-mu} times the lower OPT bound, or no basis direction can move.
Solution jspg_solve(const Objective& objective, const Polytope& polytope,
                    const SolverConfig& config);

// Stochastic parallel greedy driven by the momentum estimate d_t. Starts at
// x = 0 with d primed by a batch mean; value tests use batch means of
// f(., y). trace counts stochastic samples; Solution::value is the
// ground-truth F(x).
Solution spg_solve(const StochasticObjective& objective,
                   const Polytope& polytope, const SolverConfig& config);

// One best direction per step with fixed delta = epsilon / n. Reference point
// for the adaptivity gap; carries no guarantee.
Solution serial_baseline_solve(const Objective& objective,
                               const Polytope& polytope,
                               const SolverConfig& config);

struct GridResult {
  double value = 0.0;
  Vector argmax;
  std::uint64_t points_evaluated = 0;
};

// Exhaustive max over the lattice {0, 1/res, ..., 1}^n intersected with P.
// Requires n <= 8 and (res + 1)^n <= 1e7.
GridResult brute_force_opt(const Objective& objective, const Polytope& polytope,
                           int resolution, unsigned threads = 1);

}  // namespace ossmax

#endif  // OSSMAX_SOLVERS_HPP_
