#ifndef OSSMAX_CONFIG_HPP_
#define OSSMAX_CONFIG_HPP_

#include <cstdint>
#include <optional>

namespace ossmax {

// Parameters shared by every solver. Plain aggregate; call validate() before
// use (the solvers do).
struct SolverConfig {
  double alpha = 0.05;      // jump-start scale, in (0,1]
  double epsilon = 0.1;     // in (0,1)
  double eta = 0.0;         // eta-local parameter; 0 disables the 1/(n eta) cap
  double sigma = 0.0;       // claimed one-sided smoothness
  double delta_tol = 1e-6;  // line-search resolution
  double value_tol = 1e-9;  // relative numeric slack
  std::optional<std::int64_t> max_outer_rounds;  // derived from epsilon if unset
  std::int64_t spg_batch = 64;
  double lipschitz_L = 0.0;
  double diameter_D = 0.0;
  double noise_theta = 0.0;
  std::uint64_t seed = 0;
  unsigned threads = 1;  // workers used inside one adaptive round
  bool record_selections = false;

  void validate() const;
  double mu() const;
  std::int64_t outer_round_cap() const;
};

// (alpha/(alpha+1))^(2 sigma). Throws ValidationError outside alpha in (0,1],
// sigma >= 0.
double mu(double alpha, double sigma);

// (1 - epsilon)(1 - e^{-mu}): the ratio the acceptance tests hold JSPG to.
double guaranteed_ratio(double mu_value, double epsilon);
double guaranteed_ratio(const SolverConfig& config);

// ceil(10 ln(1/1e-6) / epsilon)
std::int64_t default_max_outer_rounds(double epsilon);

}  // namespace ossmax

#endif  // OSSMAX_CONFIG_HPP_
