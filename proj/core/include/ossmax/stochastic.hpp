#ifndef OSSMAX_STOCHASTIC_HPP_
#define OSSMAX_STOCHASTIC_HPP_

#include <atomic>
#include <cstdint>
#include <memory>
#include <random>
#include <utility>

#include "ossmax/objective.hpp"

namespace ossmax {

enum class NoiseModel { kUniform, kGaussian };

// Independent random stream. Streams are derived from (seed, index) so
// concurrent callers never share generator state.
class SampleStream {
 public:
  SampleStream(std::uint64_t seed, std::uint64_t index);
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

// f(x, y) = F(x) + xi_y^T x, so grad f(x, y) = grad F(x) + xi_y and
// E[f(x, y)] = F(x). xi_y has independent zero-mean coordinates with variance
// theta^2 / n, giving total variance theta^2. The uniform model has bounded
// support; the Gaussian model is optional.
class StochasticObjective {
 public:
  StochasticObjective(std::shared_ptr<const Objective> truth, double theta,
                      std::uint64_t seed,
                      NoiseModel model = NoiseModel::kUniform);
  StochasticObjective(const StochasticObjective&) = delete;
  StochasticObjective& operator=(const StochasticObjective&) = delete;

  const Objective& truth() const { return *truth_; }
  std::size_t dimension() const { return truth_->dimension(); }
  double theta() const { return theta_; }
  std::uint64_t seed() const { return seed_; }
  NoiseModel model() const { return model_; }

  SampleStream stream(std::uint64_t index) const {
    return SampleStream(seed_, index);
  }

  // One draw of grad f(x, y).
  Vector sample_gradient(ConstVectorView x, SampleStream& stream) const;
  // Uses the object's own default stream (stream index 0, advanced per call).
  Vector sample_gradient(ConstVectorView x);

  // Mean of `batch` draws of grad f(x, y). Counts `batch` gradient samples.
  Vector mean_gradient(ConstVectorView x, std::int64_t batch,
                       SampleStream& stream) const;

  // Mean over `batch` shared draws y of f(to, y) - f(from, y). Counts
  // 2 * batch value samples.
  double mean_value_difference(ConstVectorView from, ConstVectorView to,
                               std::int64_t batch, SampleStream& stream) const;

  // Mean of `batch` draws of f(x, y). Counts `batch` value samples.
  double mean_value(ConstVectorView x, std::int64_t batch,
                    SampleStream& stream) const;

  std::uint64_t value_queries() const { return value_samples_.load(); }
  std::uint64_t gradient_queries() const { return gradient_samples_.load(); }

 private:
  Vector draw_noise(SampleStream& stream) const;

  std::shared_ptr<const Objective> truth_;
  double theta_;
  std::uint64_t seed_;
  NoiseModel model_;
  SampleStream default_stream_;
  mutable std::atomic<std::uint64_t> value_samples_{0};
  mutable std::atomic<std::uint64_t> gradient_samples_{0};
};

}  // namespace ossmax

#endif  // OSSMAX_STOCHASTIC_HPP_
