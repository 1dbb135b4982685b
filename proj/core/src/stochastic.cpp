#include "ossmax/stochastic.hpp"

#include <cmath>
#include <utility>

namespace ossmax {
namespace {

std::mt19937_64 seeded_engine(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index),
                    static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

}  // namespace

SampleStream::SampleStream(std::uint64_t seed, std::uint64_t index)
    : engine_(seeded_engine(seed, index)) {}

StochasticObjective::StochasticObjective(
    std::shared_ptr<const Objective> truth, double theta, std::uint64_t seed,
    NoiseModel model)
    : truth_(std::move(truth)),
      theta_(theta),
      seed_(seed),
      model_(model),
      default_stream_(seed, 0) {
  if (!truth_) throw ValidationError("StochasticObjective: null objective");
  if (!(theta >= 0.0) || !std::isfinite(theta)) {
    throw ValidationError("StochasticObjective: theta must be >= 0");
  }
}

Vector StochasticObjective::draw_noise(SampleStream& stream) const {
  const std::size_t n = dimension();
  Vector xi(n, 0.0);
  if (theta_ == 0.0) return xi;
  const double coord_sd = theta_ / std::sqrt(static_cast<double>(n));
  if (model_ == NoiseModel::kUniform) {
    // Uniform on [-a, a] has variance a^2 / 3.
    const double a = coord_sd * std::sqrt(3.0);
    std::uniform_real_distribution<double> dist(-a, a);
    for (auto& v : xi) v = dist(stream.engine());
  } else {
    std::normal_distribution<double> dist(0.0, coord_sd);
    for (auto& v : xi) v = dist(stream.engine());
  }
  return xi;
}

Vector StochasticObjective::sample_gradient(ConstVectorView x,
                                            SampleStream& stream) const {
  Vector g = truth_->gradient(x);
  Vector xi = draw_noise(stream);
  for (std::size_t i = 0; i < g.size(); ++i) g[i] += xi[i];
  gradient_samples_.fetch_add(1, std::memory_order_relaxed);
  return g;
}

Vector StochasticObjective::sample_gradient(ConstVectorView x) {
  return sample_gradient(x, default_stream_);
}

Vector StochasticObjective::mean_gradient(ConstVectorView x,
                                          std::int64_t batch,
                                          SampleStream& stream) const {
  if (batch < 1) throw ValidationError("mean_gradient: batch must be >= 1");
  Vector mean = truth_->gradient(x);
  Vector noise(mean.size(), 0.0);
  for (std::int64_t b = 0; b < batch; ++b) {
    Vector xi = draw_noise(stream);
    for (std::size_t i = 0; i < xi.size(); ++i) noise[i] += xi[i];
  }
  for (std::size_t i = 0; i < mean.size(); ++i) {
    mean[i] += noise[i] / static_cast<double>(batch);
  }
  gradient_samples_.fetch_add(static_cast<std::uint64_t>(batch),
                              std::memory_order_relaxed);
  return mean;
}

double StochasticObjective::mean_value_difference(ConstVectorView from,
                                                  ConstVectorView to,
                                                  std::int64_t batch,
                                                  SampleStream& stream) const {
  if (batch < 1) throw ValidationError("mean_value_difference: batch >= 1");
  require_dimension(to, dimension(), "mean_value_difference");
  const double base = truth_->value(to) - truth_->value(from);
  Vector step(to.begin(), to.end());
  for (std::size_t i = 0; i < step.size(); ++i) step[i] -= from[i];
  double noise = 0.0;
  for (std::int64_t b = 0; b < batch; ++b) noise += dot(draw_noise(stream), step);
  value_samples_.fetch_add(2 * static_cast<std::uint64_t>(batch),
                           std::memory_order_relaxed);
  return base + noise / static_cast<double>(batch);
}

double StochasticObjective::mean_value(ConstVectorView x, std::int64_t batch,
                                       SampleStream& stream) const {
  if (batch < 1) throw ValidationError("mean_value: batch must be >= 1");
  const double base = truth_->value(x);
  double noise = 0.0;
  for (std::int64_t b = 0; b < batch; ++b) noise += dot(draw_noise(stream), x);
  value_samples_.fetch_add(static_cast<std::uint64_t>(batch),
                           std::memory_order_relaxed);
  return base + noise / static_cast<double>(batch);
}

}  // namespace ossmax
