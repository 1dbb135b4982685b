#ifndef OSSMAX_QUADRATIC_HPP_
#define OSSMAX_QUADRATIC_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ossmax/objective.hpp"

namespace ossmax {

// F(x) = 1/2 x^T M x + b^T x with M symmetric nonnegative and b >= 0.
// One-sided sigma-smooth whenever M is a sigma-semi-metric.
class QuadraticSemiMetricObjective final : public Objective {
 public:
  // `matrix` is row-major n x n.
  QuadraticSemiMetricObjective(std::vector<double> matrix, Vector linear,
                               double sigma);

  const std::vector<double>& matrix() const { return matrix_; }
  const Vector& linear() const { return linear_; }
  double entry(std::size_t i, std::size_t j) const {
    return matrix_[i * dimension() + j];
  }

 protected:
  double evaluate(ConstVectorView x) const override;
  void evaluate_gradient(ConstVectorView x,
                         std::span<double> out) const override;
  std::optional<double> exact_hessian_form(ConstVectorView x,
                                           ConstVectorView u) const override;

 private:
  std::vector<double> matrix_;
  Vector linear_;
};

// M_ij = ||p_i - p_j||_2 over the given points, sigma = 1.
QuadraticSemiMetricObjective make_semimetric_instance(
    const std::vector<Vector>& points, Vector linear);

// Random points in [0,1]^point_dim and b uniform in [b_min, b_max].
QuadraticSemiMetricObjective random_semimetric_instance(
    std::size_t n, std::size_t point_dim, double b_min, double b_max,
    std::uint64_t seed);

// F(x) = b^T x, expressed as a quadratic with M = 0.
QuadraticSemiMetricObjective make_linear_objective(Vector linear);

}  // namespace ossmax

#endif  // OSSMAX_QUADRATIC_HPP_
