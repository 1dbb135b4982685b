#include "ossmax/coverage.hpp"

#include <cmath>
#include <random>
#include <utility>

namespace ossmax {
namespace {

std::size_t checked_dimension(const std::vector<double>& weights,
                              const std::vector<std::vector<std::size_t>>& sets) {
  if (weights.empty()) throw ValidationError("coverage: need >= 1 element");
  if (sets.empty()) throw ValidationError("coverage: need >= 1 coordinate");
  for (double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw ValidationError("coverage: weights must be finite and >= 0");
    }
  }
  for (const auto& s : sets) {
    for (std::size_t e : s) {
      if (e >= weights.size()) {
        throw ValidationError("coverage: element index out of range");
      }
    }
  }
  return sets.size();
}

}  // namespace

CoverageMultilinearObjective::CoverageMultilinearObjective(
    std::vector<double> weights, std::vector<std::vector<std::size_t>> sets)
    : Objective(checked_dimension(weights, sets), 0.0),
      weights_(std::move(weights)),
      sets_(std::move(sets)),
      covered_by_(weights_.size()) {
  for (std::size_t i = 0; i < sets_.size(); ++i) {
    for (std::size_t e : sets_[i]) {
      auto& cover = covered_by_[e];
      // A coordinate listing the same element twice still covers it once.
      if (cover.empty() || cover.back() != i) cover.push_back(i);
    }
  }
}

double CoverageMultilinearObjective::set_value(
    const std::vector<bool>& chosen) const {
  double total = 0.0;
  for (std::size_t e = 0; e < weights_.size(); ++e) {
    for (std::size_t i : covered_by_[e]) {
      if (chosen[i]) {
        total += weights_[e];
        break;
      }
    }
  }
  return total;
}

double CoverageMultilinearObjective::evaluate(ConstVectorView x) const {
  double total = 0.0;
  for (std::size_t e = 0; e < weights_.size(); ++e) {
    double miss = 1.0;
    for (std::size_t i : covered_by_[e]) miss *= 1.0 - x[i];
    total += weights_[e] * (1.0 - miss);
  }
  return total;
}

void CoverageMultilinearObjective::evaluate_gradient(
    ConstVectorView x, std::span<double> out) const {
  std::fill(out.begin(), out.end(), 0.0);
  std::vector<double> prefix;
  for (std::size_t e = 0; e < weights_.size(); ++e) {
    const auto& cover = covered_by_[e];
    const std::size_t k = cover.size();
    // prefix[j] = prod_{c < j} (1 - x_c); products excluding one factor are
    // prefix * suffix so x_i = 1 needs no division.
    prefix.assign(k + 1, 1.0);
    for (std::size_t j = 0; j < k; ++j) {
      prefix[j + 1] = prefix[j] * (1.0 - x[cover[j]]);
    }
    double suffix = 1.0;
    for (std::size_t j = k; j-- > 0;) {
      out[cover[j]] += weights_[e] * prefix[j] * suffix;
      suffix *= 1.0 - x[cover[j]];
    }
  }
}

double CoverageMultilinearObjective::mixed_partial(ConstVectorView x,
                                                   std::size_t i,
                                                   std::size_t j) const {
  require_dimension(x, dimension(), "mixed_partial");
  if (i == j) return 0.0;
  double total = 0.0;
  for (std::size_t e = 0; e < weights_.size(); ++e) {
    const auto& cover = covered_by_[e];
    bool has_i = false, has_j = false;
    double rest = 1.0;
    for (std::size_t c : cover) {
      if (c == i) {
        has_i = true;
      } else if (c == j) {
        has_j = true;
      } else {
        rest *= 1.0 - x[c];
      }
    }
    if (has_i && has_j) total -= weights_[e] * rest;
  }
  return total;
}

std::optional<double> CoverageMultilinearObjective::exact_hessian_form(
    ConstVectorView x, ConstVectorView u) const {
  // Along x + s u each element contributes -w_e * d^2/ds^2 prod (q_c - s u_c)
  // = -w_e sum_{a != b} u_a u_b prod_{c != a, b} q_c.
  double total = 0.0;
  for (std::size_t e = 0; e < weights_.size(); ++e) {
    const auto& cover = covered_by_[e];
    const std::size_t k = cover.size();
    double elem = 0.0;
    for (std::size_t a = 0; a < k; ++a) {
      if (u[cover[a]] == 0.0) continue;
      for (std::size_t b = a + 1; b < k; ++b) {
        if (u[cover[b]] == 0.0) continue;
        double rest = 1.0;
        for (std::size_t c = 0; c < k; ++c) {
          if (c != a && c != b) rest *= 1.0 - x[cover[c]];
        }
        elem += 2.0 * u[cover[a]] * u[cover[b]] * rest;
      }
    }
    total -= weights_[e] * elem;
  }
  return total;
}

CoverageMultilinearObjective make_coverage_instance(const CoverageParams& p) {
  if (p.n < 1 || p.m < 1) throw ValidationError("coverage: need n, m >= 1");
  if (!(p.density > 0.0 && p.density <= 1.0)) {
    throw ValidationError("coverage: density must lie in (0, 1]");
  }
  if (!(p.weight_min >= 0.0 && p.weight_min <= p.weight_max) ||
      !std::isfinite(p.weight_max)) {
    throw ValidationError("coverage: need 0 <= weight_min <= weight_max");
  }
  std::mt19937_64 rng(p.seed);
  std::bernoulli_distribution covers(p.density);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  // incidence[e][i]: coordinate i covers element e.
  std::vector<std::vector<bool>> incidence(p.m, std::vector<bool>(p.n));
  for (std::size_t e = 0; e < p.m; ++e) {
    bool any = false;
    while (!any) {
      for (std::size_t i = 0; i < p.n; ++i) {
        incidence[e][i] = covers(rng);
        any = any || incidence[e][i];
      }
    }
  }
  std::vector<double> weights(p.m);
  for (auto& w : weights) {
    w = p.weight_min + (p.weight_max - p.weight_min) * unit(rng);
  }
  std::vector<std::vector<std::size_t>> sets(p.n);
  for (std::size_t i = 0; i < p.n; ++i) {
    for (std::size_t e = 0; e < p.m; ++e) {
      if (incidence[e][i]) sets[i].push_back(e);
    }
  }
  return CoverageMultilinearObjective(std::move(weights), std::move(sets));
}

}  // namespace ossmax
