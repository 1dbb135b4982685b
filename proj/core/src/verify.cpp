#include "ossmax/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace ossmax {
namespace {

constexpr double kMinXNorm = 1e-6;

Vector uniform_vector(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Vector v(n);
  for (auto& e : v) e = unit(rng);
  return v;
}

// x in (0,1]^n with ||x||_1 >= kMinXNorm.
Vector sample_nonzero_point(std::size_t n, std::mt19937_64& rng) {
  for (;;) {
    Vector x = uniform_vector(n, rng);
    for (auto& e : x) e = 1.0 - e;  // [0,1) -> (0,1]
    if (l1_norm(x) >= kMinXNorm) return x;
  }
}

}  // namespace

OssReport verify_oss(const Objective& objective, double sigma,
                     std::size_t trials, std::uint64_t seed,
                     double value_tol) {
  if (trials < 1) throw ValidationError("verify_oss: trials must be >= 1");
  if (!(sigma >= 0.0)) throw ValidationError("verify_oss: sigma must be >= 0");
  const std::size_t n = objective.dimension();
  std::mt19937_64 rng(seed);
  OssReport report;
  report.worst_violation = -std::numeric_limits<double>::infinity();
  for (std::size_t s = 0; s < trials; ++s) {
    Vector x = sample_nonzero_point(n, rng);
    Vector u = uniform_vector(n, rng);
    const double lhs = objective.hessian_form(x, u);
    const Vector g = objective.gradient(x);
    const double rhs = sigma * (2.0 * l1_norm(u) / l1_norm(x)) * dot(u, g);
    const double violation = lhs - rhs;
    if (violation > report.worst_violation) {
      report.worst_violation = violation;
      report.witness_x = x;
      report.witness_u = u;
    }
    if (lhs > rhs + value_tol * (1.0 + std::abs(rhs))) report.pass = false;
    ++report.samples;
  }
  return report;
}

EtaLocalReport verify_eta_local(const Objective& objective, double eta,
                                std::size_t trials, std::uint64_t seed,
                                double value_tol) {
  if (trials < 1) throw ValidationError("verify_eta_local: trials must be >= 1");
  if (!(eta >= 0.0)) throw ValidationError("verify_eta_local: eta must be >= 0");
  const std::size_t n = objective.dimension();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  EtaLocalReport report;
  report.worst_violation = -std::numeric_limits<double>::infinity();
  for (std::size_t s = 0; s < trials; ++s) {
    Vector x = uniform_vector(n, rng);
    Vector u = uniform_vector(n, rng);
    double step_max = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (u[i] > 0.0) step_max = std::min(step_max, (1.0 - x[i]) / u[i]);
    }
    const double step = unit(rng) * step_max;
    const double lhs = dot(u, objective.gradient(axpy(x, step, u)));
    const double rhs = (1.0 - eta * step) * dot(u, objective.gradient(x));
    const double violation = rhs - lhs;
    if (violation > report.worst_violation) {
      report.worst_violation = violation;
      report.witness_x = x;
      report.witness_u = u;
      report.witness_step = step;
    }
    if (lhs < rhs - value_tol * (1.0 + std::abs(rhs))) report.pass = false;
    ++report.samples;
  }
  return report;
}

SemimetricReport verify_semimetric(const std::vector<double>& matrix,
                                   std::size_t n, double sigma,
                                   double value_tol) {
  if (matrix.size() != n * n) {
    throw ValidationError("verify_semimetric: matrix must be n x n");
  }
  SemimetricReport report;
  report.worst_violation = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double mij = matrix[i * n + j];
      for (std::size_t k = 0; k < n; ++k) {
        const double bound = sigma * (matrix[i * n + k] + matrix[k * n + j]);
        const double violation = mij - bound;
        if (violation > report.worst_violation) {
          report.worst_violation = violation;
          report.witness = {i, j, k};
        }
        if (violation > value_tol * (1.0 + std::abs(mij))) report.pass = false;
      }
    }
  }
  return report;
}

GradientCheckReport verify_gradient(const Objective& objective,
                                    std::size_t trials, std::uint64_t seed,
                                    double abs_tol, double rel_tol) {
  const std::size_t n = objective.dimension();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> interior(0.05, 0.95);
  constexpr double h = 1e-6;
  GradientCheckReport report;
  for (std::size_t s = 0; s < trials; ++s) {
    Vector x(n);
    for (auto& e : x) e = interior(rng);
    const Vector g = objective.gradient(x);
    for (std::size_t i = 0; i < n; ++i) {
      Vector plus = x, minus = x;
      plus[i] += h;
      minus[i] -= h;
      const double fd =
          (objective.value(plus) - objective.value(minus)) / (2.0 * h);
      const double err = std::abs(fd - g[i]);
      if (err > report.worst_error) {
        report.worst_error = err;
        report.witness_x = x;
      }
      if (err > std::max(abs_tol, rel_tol * std::abs(g[i]))) report.pass = false;
    }
  }
  return report;
}

}  // namespace ossmax
