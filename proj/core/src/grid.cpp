#include <cmath>
#include <limits>

#include "ossmax/parallel.hpp"
#include "ossmax/solvers.hpp"

namespace ossmax {

GridResult brute_force_opt(const Objective& objective, const Polytope& polytope,
                           int resolution, unsigned threads) {
  const std::size_t n = objective.dimension();
  if (n != polytope.dimension()) {
    throw ValidationError("brute_force_opt: dimension mismatch");
  }
  if (n > 8) throw ValidationError("brute_force_opt: n must be <= 8");
  if (resolution < 1) throw ValidationError("brute_force_opt: resolution < 1");
  const double per_axis = static_cast<double>(resolution) + 1.0;
  if (std::pow(per_axis, static_cast<double>(n)) > 1e7) {
    throw ValidationError("brute_force_opt: grid budget of 1e7 points exceeded");
  }
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= resolution + 1;

  const unsigned workers = std::max(1u, threads);
  std::vector<GridResult> partial(workers);
  for (auto& p : partial) p.value = -std::numeric_limits<double>::infinity();

  parallel_for(workers, workers, [&](std::size_t w) {
    GridResult& best = partial[w];
    Vector x(n);
    for (std::uint64_t idx = w; idx < total; idx += workers) {
      std::uint64_t rest = idx;
      for (std::size_t i = 0; i < n; ++i) {
        x[i] = static_cast<double>(rest % (resolution + 1)) / resolution;
        rest /= resolution + 1;
      }
      if (!polytope.contains(x)) continue;
      const double v = objective.value(x);
      ++best.points_evaluated;
      if (v > best.value) {
        best.value = v;
        best.argmax = x;
      }
    }
  });

  GridResult out = partial.front();
  for (std::size_t w = 1; w < workers; ++w) {
    out.points_evaluated += partial[w].points_evaluated;
    if (partial[w].value > out.value) {
      out.value = partial[w].value;
      out.argmax = partial[w].argmax;
    }
  }
  return out;
}

}  // namespace ossmax
