#include <algorithm>
#include <cmath>

#include "ossmax/solvers.hpp"

namespace ossmax {

double momentum_weight(double t) {
  if (!(t >= 0.0)) throw ValidationError("momentum_weight: t must be >= 0");
  return std::pow(4.0 / (t + 8.0), 2.0 / 3.0);
}

double kappa(double initial_gap_sq, double theta, double lipschitz,
             double diameter, double t) {
  if (!(t >= 0.0)) throw ValidationError("kappa: t must be >= 0");
  const double numerator =
      std::max(5.0 * initial_gap_sq, 16.0 * theta * theta +
                                         2.0 * lipschitz * lipschitz *
                                             diameter * diameter);
  return numerator / std::pow(t + 9.0, 2.0 / 3.0);
}

void GradientEstimate::update(ConstVectorView sample, double t) {
  require_dimension(sample, d_.size(), "GradientEstimate::update");
  const double rho = momentum_weight(t);
  for (std::size_t i = 0; i < d_.size(); ++i) {
    d_[i] = (1.0 - rho) * d_[i] + rho * sample[i];
  }
  t_last_ = t;
  rho_last_ = rho;
  ++updates_;
}

void GradientEstimate::prime(ConstVectorView d) {
  require_dimension(d, d_.size(), "GradientEstimate::prime");
  d_.assign(d.begin(), d.end());
}

GradientEstimate update_gradient_estimate(GradientEstimate estimate,
                                          ConstVectorView sample, double t) {
  estimate.update(sample, t);
  return estimate;
}

}  // namespace ossmax
