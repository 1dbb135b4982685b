#ifndef OSSMAX_OBJECTIVE_HPP_
#define OSSMAX_OBJECTIVE_HPP_

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>

#include "ossmax/types.hpp"

namespace ossmax {

// Deterministic oracle for a monotone normalized function on [0,1]^n.
//
// value() and gradient() are the counted queries; every call increments an
// atomic tally, so solvers can be audited against the oracle's own count.
// hessian_form() is a verification aid and is never counted. Implementations
// are read-only after construction and safe to call concurrently.
class Objective {
 public:
  virtual ~Objective() = default;
  // Copies share the function but start with fresh query counters.
  Objective(const Objective& other)
      : dimension_(other.dimension_), sigma_claimed_(other.sigma_claimed_) {}
  Objective& operator=(const Objective&) = delete;

  std::size_t dimension() const { return dimension_; }
  double sigma_claimed() const { return sigma_claimed_; }

  double value(ConstVectorView x) const;
  Vector gradient(ConstVectorView x) const;

  // u^T Hess F(x) u. Exact when the family provides it, otherwise a central
  // difference of the gradient with step kHessianStep.
  double hessian_form(ConstVectorView x, ConstVectorView u) const;
  bool has_exact_hessian() const;

  std::uint64_t value_queries() const { return value_queries_.load(); }
  std::uint64_t gradient_queries() const { return gradient_queries_.load(); }
  void reset_counters() const;

  static constexpr double kHessianStep = 1e-4;

 protected:
  Objective(std::size_t dimension, double sigma_claimed);

  virtual double evaluate(ConstVectorView x) const = 0;
  virtual void evaluate_gradient(ConstVectorView x,
                                 std::span<double> out) const = 0;
  virtual std::optional<double> exact_hessian_form(ConstVectorView x,
                                                   ConstVectorView u) const;

 private:
  std::size_t dimension_;
  double sigma_claimed_;
  mutable std::atomic<std::uint64_t> value_queries_{0};
  mutable std::atomic<std::uint64_t> gradient_queries_{0};
};

// Objective assembled from callables. Used for user-supplied functions and for
// test fixtures; without a hessian callable the finite-difference fallback is
// used.
class CallableObjective final : public Objective {
 public:
  using ValueFn = std::function<double(ConstVectorView)>;
  using GradientFn = std::function<void(ConstVectorView, std::span<double>)>;
  using HessianFn = std::function<double(ConstVectorView, ConstVectorView)>;

  CallableObjective(std::size_t dimension, double sigma_claimed, ValueFn value,
                    GradientFn gradient, HessianFn hessian = {});

 protected:
  double evaluate(ConstVectorView x) const override;
  void evaluate_gradient(ConstVectorView x,
                         std::span<double> out) const override;
  std::optional<double> exact_hessian_form(ConstVectorView x,
                                           ConstVectorView u) const override;

 private:
  ValueFn value_;
  GradientFn gradient_;
  HessianFn hessian_;
};

}  // namespace ossmax

#endif  // OSSMAX_OBJECTIVE_HPP_
