#include "ossmax/config.hpp"

#include <cmath>
#include <string>

#include "ossmax/types.hpp"

namespace ossmax {
namespace {

constexpr double kEpsilonFloor = 1e-6;

void require(bool ok, const std::string& message) {
  if (!ok) throw ValidationError("SolverConfig: " + message);
}

}  // namespace

double mu(double alpha, double sigma) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw ValidationError("mu: alpha must lie in (0, 1]");
  }
  if (!(sigma >= 0.0) || !std::isfinite(sigma)) {
    throw ValidationError("mu: sigma must be a finite nonnegative number");
  }
  if (sigma == 0.0) return 1.0;
  return std::pow(alpha / (alpha + 1.0), 2.0 * sigma);
}

double guaranteed_ratio(double mu_value, double epsilon) {
  if (!(epsilon >= 0.0 && epsilon < 1.0)) {
    throw ValidationError("guaranteed_ratio: epsilon must lie in [0, 1)");
  }
  return (1.0 - epsilon) * (1.0 - std::exp(-mu_value));
}

double guaranteed_ratio(const SolverConfig& config) {
  config.validate();
  return guaranteed_ratio(config.mu(), config.epsilon);
}

std::int64_t default_max_outer_rounds(double epsilon) {
  return static_cast<std::int64_t>(
      std::ceil(10.0 * std::log(1.0 / kEpsilonFloor) / epsilon));
}

void SolverConfig::validate() const {
  require(alpha > 0.0 && alpha <= 1.0, "alpha must lie in (0, 1]");
  require(epsilon > 0.0 && epsilon < 1.0, "epsilon must lie in (0, 1)");
  require(eta >= 0.0 && std::isfinite(eta), "eta must be >= 0");
  require(sigma >= 0.0 && std::isfinite(sigma), "sigma must be >= 0");
  require(delta_tol > 0.0 && delta_tol < 1.0, "delta_tol must lie in (0, 1)");
  require(value_tol > 0.0 && std::isfinite(value_tol), "value_tol must be > 0");
  require(!max_outer_rounds || *max_outer_rounds > 0,
          "max_outer_rounds must be positive");
  require(spg_batch > 0, "spg_batch must be positive");
  require(lipschitz_L >= 0.0 && std::isfinite(lipschitz_L),
          "lipschitz_L must be >= 0");
  require(diameter_D >= 0.0 && std::isfinite(diameter_D),
          "diameter_D must be >= 0");
  require(noise_theta >= 0.0 && std::isfinite(noise_theta),
          "noise_theta must be >= 0");
  require(threads >= 1, "threads must be >= 1");
}

double SolverConfig::mu() const { return ossmax::mu(alpha, sigma); }

std::int64_t SolverConfig::outer_round_cap() const {
  return max_outer_rounds ? *max_outer_rounds
                          : default_max_outer_rounds(epsilon);
}

}  // namespace ossmax
