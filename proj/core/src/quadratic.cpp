#include "ossmax/quadratic.hpp"

#include <cmath>
#include <random>
#include <utility>

namespace ossmax {
namespace {

std::size_t checked_dimension(const std::vector<double>& matrix,
                              const Vector& linear) {
  const std::size_t n = linear.size();
  if (n == 0) throw ValidationError("quadratic objective: empty b");
  if (matrix.size() != n * n) {
    throw ValidationError("quadratic objective: M must be n x n with n = |b|");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!(linear[i] >= 0.0) || !std::isfinite(linear[i])) {
      throw ValidationError("quadratic objective: b must be finite and >= 0");
    }
    for (std::size_t j = 0; j < n; ++j) {
      const double mij = matrix[i * n + j];
      if (!(mij >= 0.0) || !std::isfinite(mij)) {
        throw ValidationError("quadratic objective: M must be finite and >= 0");
      }
      if (mij != matrix[j * n + i]) {
        throw ValidationError("quadratic objective: M must be symmetric");
      }
    }
  }
  return n;
}

}  // namespace

QuadraticSemiMetricObjective::QuadraticSemiMetricObjective(
    std::vector<double> matrix, Vector linear, double sigma)
    : Objective(checked_dimension(matrix, linear), sigma),
      matrix_(std::move(matrix)),
      linear_(std::move(linear)) {}

double QuadraticSemiMetricObjective::evaluate(ConstVectorView x) const {
  const std::size_t n = dimension();
  double quad = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0.0) continue;
    double row = 0.0;
    for (std::size_t j = 0; j < n; ++j) row += matrix_[i * n + j] * x[j];
    quad += x[i] * row;
  }
  return 0.5 * quad + dot(linear_, x);
}

void QuadraticSemiMetricObjective::evaluate_gradient(
    ConstVectorView x, std::span<double> out) const {
  const std::size_t n = dimension();
  for (std::size_t i = 0; i < n; ++i) {
    double row = linear_[i];
    for (std::size_t j = 0; j < n; ++j) row += matrix_[i * n + j] * x[j];
    out[i] = row;
  }
}

std::optional<double> QuadraticSemiMetricObjective::exact_hessian_form(
    ConstVectorView, ConstVectorView u) const {
  const std::size_t n = dimension();
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) s += u[i] * matrix_[i * n + j] * u[j];
  }
  return s;
}

QuadraticSemiMetricObjective make_semimetric_instance(
    const std::vector<Vector>& points, Vector linear) {
  const std::size_t n = points.size();
  if (n < 2) throw ValidationError("semi-metric instance needs >= 2 points");
  if (linear.size() != n) {
    throw ValidationError("semi-metric instance: |b| must equal point count");
  }
  const std::size_t dim = points.front().size();
  for (const auto& p : points) {
    if (p.size() != dim) {
      throw ValidationError("semi-metric instance: points differ in dimension");
    }
  }
  std::vector<double> m(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      double sq = 0.0;
      for (std::size_t c = 0; c < dim; ++c) {
        const double diff = points[i][c] - points[j][c];
        sq += diff * diff;
      }
      m[i * n + j] = m[j * n + i] = std::sqrt(sq);
    }
  }
  return QuadraticSemiMetricObjective(std::move(m), std::move(linear), 1.0);
}

QuadraticSemiMetricObjective random_semimetric_instance(
    std::size_t n, std::size_t point_dim, double b_min, double b_max,
    std::uint64_t seed) {
  if (n < 2 || point_dim == 0) {
    throw ValidationError("random semi-metric instance: need n >= 2, dim >= 1");
  }
  if (!(b_min >= 0.0 && b_min <= b_max)) {
    throw ValidationError("random semi-metric instance: need 0 <= bmin <= bmax");
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Vector> points(n, Vector(point_dim));
  for (auto& p : points) {
    for (auto& c : p) c = unit(rng);
  }
  Vector b(n);
  for (auto& v : b) v = b_min + (b_max - b_min) * unit(rng);
  return make_semimetric_instance(points, std::move(b));
}

QuadraticSemiMetricObjective make_linear_objective(Vector linear) {
  const std::size_t n = linear.size();
  return QuadraticSemiMetricObjective(std::vector<double>(n * n, 0.0),
                                      std::move(linear), 0.0);
}

}  // namespace ossmax
