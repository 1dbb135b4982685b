#include <cstddef>
#include <memory>

#include <benchmark/benchmark.h>

#include "ossmax/coverage.hpp"
#include "ossmax/polytope.hpp"
#include "ossmax/quadratic.hpp"
#include "ossmax/solvers.hpp"
#include "ossmax/stochastic.hpp"
#include "suite.hpp"

namespace {

using ossmax::testing::sweep_instance;

ossmax::SolverConfig bench_config() {
  ossmax::SolverConfig cfg;
  cfg.epsilon = 0.2;
  cfg.alpha = 1e-3;
  cfg.sigma = 0.0;
  return cfg;
}

void BM_JspgCoverage(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto inst = sweep_instance(n, 11);
  const auto cfg = bench_config();
  std::uint64_t rounds = 0;
  for (auto _ : state) {
    const auto sol = ossmax::jspg_solve(*inst.objective, *inst.polytope, cfg);
    rounds = sol.trace.adaptive_rounds;
    benchmark::DoNotOptimize(sol.value);
  }
  state.counters["adaptive_rounds"] = static_cast<double>(rounds);
}
BENCHMARK(BM_JspgCoverage)->RangeMultiplier(2)->Range(4, 64)->Unit(benchmark::kMicrosecond);

void BM_SerialCoverage(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto inst = sweep_instance(n, 11);
  const auto cfg = bench_config();
  std::uint64_t rounds = 0;
  for (auto _ : state) {
    const auto sol = ossmax::serial_baseline_solve(*inst.objective, *inst.polytope, cfg);
    rounds = sol.trace.adaptive_rounds;
    benchmark::DoNotOptimize(sol.value);
  }
  state.counters["adaptive_rounds"] = static_cast<double>(rounds);
}
BENCHMARK(BM_SerialCoverage)->RangeMultiplier(2)->Range(4, 64)->Unit(benchmark::kMicrosecond);

void BM_SpgCoverage(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto inst = sweep_instance(n, 11);
  const ossmax::StochasticObjective noisy(inst.objective, 0.25, 4242);
  auto cfg = bench_config();
  cfg.spg_batch = 32;
  for (auto _ : state) {
    const auto sol = ossmax::spg_solve(noisy, *inst.polytope, cfg);
    benchmark::DoNotOptimize(sol.value);
  }
}
BENCHMARK(BM_SpgCoverage)->RangeMultiplier(2)->Range(4, 32)->Unit(benchmark::kMillisecond);

void BM_CoverageValue(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto inst = sweep_instance(n, 3);
  const ossmax::Vector x(n, 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(inst.objective->value(x));
}
BENCHMARK(BM_CoverageValue)->RangeMultiplier(4)->Range(4, 256);

void BM_CoverageGradient(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto inst = sweep_instance(n, 3);
  const ossmax::Vector x(n, 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(inst.objective->gradient(x));
}
BENCHMARK(BM_CoverageGradient)->RangeMultiplier(4)->Range(4, 256);

void BM_QuadraticGradient(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto q = ossmax::random_semimetric_instance(n, 2, 0.1, 1.0, 5);
  const ossmax::Vector x(n, 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(q.gradient(x));
}
BENCHMARK(BM_QuadraticGradient)->RangeMultiplier(4)->Range(4, 256);

void BM_GridOracle(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto inst = sweep_instance(n, 3);
  const auto threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) {
    const auto grid = ossmax::brute_force_opt(*inst.objective, *inst.polytope, 10, threads);
    benchmark::DoNotOptimize(grid.value);
  }
}
BENCHMARK(BM_GridOracle)->Args({4, 1})->Args({5, 1})->Args({5, 4})->UseRealTime()->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
