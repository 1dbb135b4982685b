#include "ossmax/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <utility>

namespace ossmax {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Largest s with x + s d <= upper componentwise.
double box_step(ConstVectorView x, ConstVectorView d, ConstVectorView upper) {
  double s = kInf;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (d[i] > 0.0) s = std::min(s, (upper[i] - x[i]) / d[i]);
  }
  return std::max(0.0, s);
}

double unit_box_step(ConstVectorView x, ConstVectorView d) {
  double s = kInf;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (d[i] > 0.0) s = std::min(s, (1.0 - x[i]) / d[i]);
  }
  return std::max(0.0, s);
}

}  // namespace

Polytope::Polytope(std::size_t dimension) : dimension_(dimension) {
  if (dimension == 0) throw ValidationError("polytope dimension must be >= 1");
  basis_.assign(dimension, Vector(dimension, 0.0));
  for (std::size_t i = 0; i < dimension; ++i) basis_[i][i] = 1.0;
}

bool Polytope::contains(ConstVectorView x, double tol) const {
  if (x.size() != dimension_) return false;
  for (double e : x) {
    if (!std::isfinite(e) || e < -tol || e > 1.0 + tol) return false;
  }
  return contains_inner(x, tol);
}

double Polytope::max_step(ConstVectorView x, ConstVectorView d) const {
  double hi = unit_box_step(x, d);
  if (!std::isfinite(hi)) return hi;
  if (contains(axpy(x, hi, d))) return hi;
  double lo = 0.0;
  for (int it = 0; it < 100 && hi - lo > 1e-15 * std::max(1.0, hi); ++it) {
    const double mid = 0.5 * (lo + hi);
    if (contains(axpy(x, mid, d))) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

double Polytope::l1_radius() const { return l1_norm(max_l1_point()); }

// --- box ---------------------------------------------------------------------

BoxPolytope::BoxPolytope(Vector upper)
    : Polytope(upper.size()), upper_(std::move(upper)) {
  for (double c : upper_) {
    if (!(c > 0.0 && c <= 1.0)) {
      throw ValidationError("box polytope: upper bounds must lie in (0, 1]");
    }
  }
}

BoxPolytope::BoxPolytope(std::size_t n, double upper)
    : BoxPolytope(Vector(n, upper)) {}

bool BoxPolytope::contains_inner(ConstVectorView x, double tol) const {
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] > upper_[i] + tol) return false;
  }
  return true;
}

double BoxPolytope::max_step(ConstVectorView x, ConstVectorView d) const {
  return box_step(x, d, upper_);
}

// --- cardinality -------------------------------------------------------------

CardinalityPolytope::CardinalityPolytope(std::size_t n, std::size_t budget)
    : Polytope(n), budget_(budget) {
  if (budget < 1 || budget > n) {
    throw ValidationError("cardinality polytope: need 1 <= k <= n");
  }
}

bool CardinalityPolytope::contains_inner(ConstVectorView x,
                                         double tol) const {
  const double sum = std::accumulate(x.begin(), x.end(), 0.0);
  return sum <= static_cast<double>(budget_) + tol;
}

double CardinalityPolytope::max_step(ConstVectorView x,
                                     ConstVectorView d) const {
  double s = unit_box_step(x, d);
  const double used = std::accumulate(x.begin(), x.end(), 0.0);
  const double rate = std::accumulate(d.begin(), d.end(), 0.0);
  if (rate > 0.0) {
    s = std::min(s, (static_cast<double>(budget_) - used) / rate);
  }
  return std::max(0.0, s);
}

Vector CardinalityPolytope::max_l1_point() const {
  Vector x(dimension(), 0.0);
  std::fill_n(x.begin(), budget_, 1.0);
  return x;
}

Vector CardinalityPolytope::upper_corner() const {
  return Vector(dimension(), 1.0);
}

// --- monotone-linear ---------------------------------------------------------

MonotoneLinearPolytope::MonotoneLinearPolytope(
    std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> order)
    : Polytope(n), order_(std::move(order)) {
  for (const auto& [lo, hi] : order_) {
    if (lo >= n || hi >= n || lo == hi) {
      throw ValidationError("monotone-linear polytope: bad order pair");
    }
  }
}

bool MonotoneLinearPolytope::contains_inner(ConstVectorView x,
                                            double tol) const {
  for (const auto& [lo, hi] : order_) {
    if (x[lo] > x[hi] + tol) return false;
  }
  return true;
}

double MonotoneLinearPolytope::max_step(ConstVectorView x,
                                        ConstVectorView d) const {
  double s = unit_box_step(x, d);
  for (const auto& [lo, hi] : order_) {
    if (d[lo] > d[hi]) s = std::min(s, (x[hi] - x[lo]) / (d[lo] - d[hi]));
  }
  return std::max(0.0, s);
}

Vector MonotoneLinearPolytope::max_l1_point() const {
  return Vector(dimension(), 1.0);
}

Vector MonotoneLinearPolytope::upper_corner() const {
  return Vector(dimension(), 1.0);
}

// --- free functions ----------------------------------------------------------

bool membership(const Polytope& polytope, ConstVectorView x, double tol) {
  require_dimension(x, polytope.dimension(), "membership");
  return polytope.contains(x, tol);
}

const std::vector<Vector>& basis_directions(const Polytope& polytope) {
  return polytope.basis();
}

OptBounds opt_bounds(const Objective& objective, const Polytope& polytope) {
  if (objective.dimension() != polytope.dimension()) {
    throw ValidationError("opt_bounds: objective/polytope dimension mismatch");
  }
  const Vector ones(polytope.dimension(), 1.0);
  OptBounds b;
  b.lower = objective.value(polytope.max_l1_point());
  b.upper = std::min(objective.value(ones),
                     objective.value(polytope.upper_corner()));
  return b;
}

}  // namespace ossmax
