#ifndef OSSMAX_VERIFY_HPP_
#define OSSMAX_VERIFY_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "ossmax/objective.hpp"

namespace ossmax {

// Sampled check of u^T Hess F(x) u <= sigma (2 ||u||_1 / ||x||_1) u^T grad F(x)
// over x in (0,1]^n, u in [0,1]^n.
struct OssReport {
  bool pass = true;
  double worst_violation = 0.0;  // max over samples of LHS - RHS
  Vector witness_x;
  Vector witness_u;
  std::size_t samples = 0;
};

OssReport verify_oss(const Objective& objective, double sigma,
                     std::size_t trials, std::uint64_t seed,
                     double value_tol = 1e-9);

// Sampled check of u^T grad F(x + s u) >= (1 - eta s) u^T grad F(x) over
// feasible (x, u, s) with x + s u in [0,1]^n, s in [0,1].
struct EtaLocalReport {
  bool pass = true;
  double worst_violation = 0.0;  // max of RHS - LHS
  Vector witness_x;
  Vector witness_u;
  double witness_step = 0.0;
  std::size_t samples = 0;
};

EtaLocalReport verify_eta_local(const Objective& objective, double eta,
                                std::size_t trials, std::uint64_t seed,
                                double value_tol = 1e-9);

// Exhaustive check of M_ij <= sigma (M_ik + M_kj) over all n^3 triples.
struct SemimetricReport {
  bool pass = true;
  double worst_violation = 0.0;
  std::array<std::size_t, 3> witness{0, 0, 0};  // (i, j, k)
};

SemimetricReport verify_semimetric(const std::vector<double>& matrix,
                                   std::size_t n, double sigma,
                                   double value_tol = 1e-9);

// Central differences of the value oracle against the gradient oracle at
// `trials` interior points; tolerance max(abs_tol, rel_tol * |g_i|).
struct GradientCheckReport {
  bool pass = true;
  double worst_error = 0.0;
  Vector witness_x;
};

GradientCheckReport verify_gradient(const Objective& objective,
                                    std::size_t trials, std::uint64_t seed,
                                    double abs_tol = 1e-4,
                                    double rel_tol = 1e-4);

}  // namespace ossmax

#endif  // OSSMAX_VERIFY_HPP_
