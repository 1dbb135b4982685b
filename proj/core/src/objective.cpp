#include "ossmax/objective.hpp"

#include <utility>

namespace ossmax {

Objective::Objective(std::size_t dimension, double sigma_claimed)
    : dimension_(dimension), sigma_claimed_(sigma_claimed) {
  if (dimension == 0) throw ValidationError("objective dimension must be >= 1");
  if (!(sigma_claimed >= 0.0)) {
    throw ValidationError("objective sigma must be >= 0");
  }
}

double Objective::value(ConstVectorView x) const {
  require_dimension(x, dimension_, "Objective::value");
  value_queries_.fetch_add(1, std::memory_order_relaxed);
  return evaluate(x);
}

Vector Objective::gradient(ConstVectorView x) const {
  require_dimension(x, dimension_, "Objective::gradient");
  gradient_queries_.fetch_add(1, std::memory_order_relaxed);
  Vector g(dimension_, 0.0);
  evaluate_gradient(x, g);
  return g;
}

double Objective::hessian_form(ConstVectorView x, ConstVectorView u) const {
  require_dimension(x, dimension_, "Objective::hessian_form x");
  require_dimension(u, dimension_, "Objective::hessian_form u");
  if (auto exact = exact_hessian_form(x, u)) return *exact;
  const double h = kHessianStep;
  Vector plus = axpy(x, h, u);
  Vector minus = axpy(x, -h, u);
  Vector g_plus(dimension_), g_minus(dimension_);
  evaluate_gradient(plus, g_plus);
  evaluate_gradient(minus, g_minus);
  return (dot(u, g_plus) - dot(u, g_minus)) / (2.0 * h);
}

bool Objective::has_exact_hessian() const {
  Vector probe(dimension_, 0.5);
  return exact_hessian_form(probe, probe).has_value();
}

void Objective::reset_counters() const {
  value_queries_.store(0);
  gradient_queries_.store(0);
}

std::optional<double> Objective::exact_hessian_form(ConstVectorView,
                                                    ConstVectorView) const {
  return std::nullopt;
}

CallableObjective::CallableObjective(std::size_t dimension,
                                     double sigma_claimed, ValueFn value,
                                     GradientFn gradient, HessianFn hessian)
    : Objective(dimension, sigma_claimed),
      value_(std::move(value)),
      gradient_(std::move(gradient)),
      hessian_(std::move(hessian)) {
  if (!value_ || !gradient_) {
    throw ValidationError("CallableObjective needs value and gradient");
  }
}

double CallableObjective::evaluate(ConstVectorView x) const {
  return value_(x);
}

void CallableObjective::evaluate_gradient(ConstVectorView x,
                                          std::span<double> out) const {
  gradient_(x, out);
}

std::optional<double> CallableObjective::exact_hessian_form(
    ConstVectorView x, ConstVectorView u) const {
  if (!hessian_) return std::nullopt;
  return hessian_(x, u);
}

}  // namespace ossmax
