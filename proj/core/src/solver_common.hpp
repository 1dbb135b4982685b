#ifndef OSSMAX_SRC_SOLVER_COMMON_HPP_
#define OSSMAX_SRC_SOLVER_COMMON_HPP_

#include <algorithm>
#include <string>

#include "ossmax/solvers.hpp"

namespace ossmax::detail {

// t has reached the unit horizon, up to accumulated rounding.
inline bool horizon_reached(double t) { return t >= 1.0 - 1e-12; }

inline bool any_of(const std::vector<bool>& mask) {
  return std::find(mask.begin(), mask.end(), true) != mask.end();
}

inline void require_finite(ConstVectorView v, const char* what) {
  if (!all_finite(v)) {
    throw SolverError(std::string(what) + " returned non-finite values");
  }
}

inline void check_problem(std::size_t objective_dim, const Polytope& polytope) {
  if (objective_dim != polytope.dimension()) {
    throw ValidationError("objective and polytope dimensions differ");
  }
  if (polytope.basis().empty()) throw SolverError("polytope has an empty basis");
  if (!(polytope.l1_radius() > 0.0)) {
    throw ValidationError("polytope max-l1 point is 0; nothing to optimise");
  }
}

inline void record_selection(const SolverConfig& config, SolverTrace& trace,
                             ConstVectorView x, ConstVectorView signal,
                             const DirectionSet& set,
                             const std::vector<bool>& eligible) {
  if (!config.record_selections) return;
  trace.selections.push_back(SelectionRecord{
      Vector(x.begin(), x.end()), Vector(signal.begin(), signal.end()),
      set.threshold, set.members, eligible});
}

inline Vector clamp_unit(Vector x) {
  for (auto& v : x) v = std::clamp(v, 0.0, 1.0);
  return x;
}

}  // namespace ossmax::detail

#endif  // OSSMAX_SRC_SOLVER_COMMON_HPP_
