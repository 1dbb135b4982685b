#ifndef OSSMAX_COVERAGE_HPP_
#define OSSMAX_COVERAGE_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ossmax/objective.hpp"

namespace ossmax {

// Multilinear extension of weighted coverage:
//   F(x) = sum_e w_e (1 - prod_{i : e in S_i} (1 - x_i)).
// Evaluated in closed form. Every mixed partial is <= 0, so F is continuous
// DR-submodular and one-sided 0-smooth.
class CoverageMultilinearObjective final : public Objective {
 public:
  // sets[i] lists the elements covered by coordinate i.
  CoverageMultilinearObjective(std::vector<double> weights,
                               std::vector<std::vector<std::size_t>> sets);

  std::size_t element_count() const { return weights_.size(); }
  const std::vector<double>& weights() const { return weights_; }
  const std::vector<std::vector<std::size_t>>& sets() const { return sets_; }

  // Weighted coverage of the set {i : chosen[i]}.
  double set_value(const std::vector<bool>& chosen) const;

  // d^2 F / dx_i dx_j for i != j (0 on the diagonal).
  double mixed_partial(ConstVectorView x, std::size_t i, std::size_t j) const;

 protected:
  double evaluate(ConstVectorView x) const override;
  void evaluate_gradient(ConstVectorView x,
                         std::span<double> out) const override;
  std::optional<double> exact_hessian_form(ConstVectorView x,
                                           ConstVectorView u) const override;

 private:
  std::vector<double> weights_;
  std::vector<std::vector<std::size_t>> sets_;
  std::vector<std::vector<std::size_t>> covered_by_;  // element -> coordinates
};

struct CoverageParams {
  std::size_t n = 1;
  std::size_t m = 1;
  double density = 0.5;
  double weight_min = 0.0;
  double weight_max = 1.0;
  std::uint64_t seed = 0;
};

// Each coordinate covers each element independently with probability
// `density`; uncovered elements are redrawn until covered.
CoverageMultilinearObjective make_coverage_instance(const CoverageParams& p);

}  // namespace ossmax

#endif  // OSSMAX_COVERAGE_HPP_
