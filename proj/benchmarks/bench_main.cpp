#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "hullselect/experiment.hpp"
#include "hullselect/oracle.hpp"
#include "hullselect/selector.hpp"

namespace hs = hullselect;

namespace {

std::vector<double> sparse_gaussian(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> z;
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = z(rng) + (i % 100 == 0 ? 6.0 : 0.0);
  return x;
}

void BM_Select(benchmark::State& state) {
  const hs::ObservationVector obs(sparse_gaussian(static_cast<std::size_t>(state.range(0)), 1), 1.0);
  const hs::SelectorConfig cfg;
  for (auto _ : state) benchmark::DoNotOptimize(hs::select(obs, cfg));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Select)->RangeMultiplier(10)->Range(100, 1000000)->Complexity(benchmark::oNLogN);

void BM_ActiveSetPath(benchmark::State& state) {
  const hs::SignalVector theta(sparse_gaussian(static_cast<std::size_t>(state.range(0)), 2));
  for (auto _ : state) benchmark::DoNotOptimize(hs::active_set_path(theta, 1.0));
  state.SetComplexityN(state.range(0));
}
// Every path entry carries its own mask, so output size grows like n times
// the number of breakpoints; the range stops where that dominates.
BENCHMARK(BM_ActiveSetPath)->RangeMultiplier(10)->Range(100, 10000)->Unit(benchmark::kMillisecond);

void BM_Experiment(benchmark::State& state) {
  hs::ExperimentConfig cfg;
  cfg.n = 1000;
  cfg.signal = hs::SignalGenerator{10, 16.0, hs::SignPattern::kRandom};
  cfg.oracle_A = 16.0;
  cfg.replications = 500;
  cfg.master_seed = 3;
  const hs::RunOptions opts{static_cast<std::size_t>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(hs::run_experiment(cfg, opts));
}
BENCHMARK(BM_Experiment)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace
