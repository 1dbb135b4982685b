#include <algorithm>

#include "ossmax/solvers.hpp"

namespace ossmax {

DirectionSet select_directions(ConstVectorView signal,
                               const std::vector<Vector>& basis, double lambda,
                               const SolverConfig& config, SolverTrace& trace,
                               const std::vector<bool>& eligible,
                               bool fresh_signal) {
  if (!(lambda > 0.0)) throw ValidationError("select_directions: lambda <= 0");
  if (!eligible.empty() && eligible.size() != basis.size()) {
    throw ValidationError("select_directions: eligibility mask size mismatch");
  }
  DirectionSet set;
  set.lambda = lambda;
  set.threshold = (1.0 - config.epsilon) * config.mu() * lambda;
  if (fresh_signal) ++trace.adaptive_rounds;
  set.round = trace.adaptive_rounds;
  // All r inner products belong to the same round; no cross-dependency.
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!eligible.empty() && !eligible[i]) continue;
    if (dot(basis[i], signal) >= set.threshold - config.value_tol) {
      set.members.push_back(i);
    }
  }
  return set;
}

Vector mean_direction(const std::vector<Vector>& basis,
                      const DirectionSet& set) {
  if (set.empty()) throw ValidationError("mean_direction: empty set");
  Vector d(basis[set.members.front()].size(), 0.0);
  for (std::size_t i : set.members) {
    for (std::size_t c = 0; c < d.size(); ++c) d[c] += basis[i][c];
  }
  const double scale = 1.0 / static_cast<double>(set.size());
  for (auto& v : d) v *= scale;
  return d;
}

std::vector<bool> eligible_directions(const Polytope& polytope,
                                      ConstVectorView x, double scale,
                                      double delta_tol) {
  const auto& basis = polytope.basis();
  std::vector<bool> out(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    out[i] = polytope.max_step(x, basis[i]) >= delta_tol * scale;
  }
  return out;
}

}  // namespace ossmax
