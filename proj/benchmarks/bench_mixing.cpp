#include "mixent/mixing.hpp"

#include <benchmark/benchmark.h>

using namespace mixent::mixing;

static void BM_MixingTwoTerm(benchmark::State& state) {
  MixingScenario s;
  s.initial = {{"A", 500, 1.0, 1.0}, {"B", 500, 1.0, 1.0}};
  s.final_volume = 2.0;
  s.overlaps = {{"A", "B", 0.5}};
  for (auto _ : state) benchmark::DoNotOptimize(mixing_entropy(s).delta_S);
}
BENCHMARK(BM_MixingTwoTerm);

static void BM_MixingExact(benchmark::State& state) {
  const auto N = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(
        partition_change_entropy(N, 2.0, 1.0, 2, CountingModel::GibbsCorrected, StirlingForm::Exact).delta_S);
}
BENCHMARK(BM_MixingExact)->Arg(1000)->Arg(100000);
