#include "mixent/combinatorics.hpp"
#include "mixent/oracle.hpp"

#include <benchmark/benchmark.h>

using namespace mixent;

static void BM_BinomialExact(benchmark::State& state) {
  const auto N = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(combinatorics::binomial(N, N / 2));
}
BENCHMARK(BM_BinomialExact)->RangeMultiplier(4)->Range(64, 4096);

static void BM_BinomialLogOnly(benchmark::State& state) {
  const auto N = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(combinatorics::binomial(N, N / 2));
}
BENCHMARK(BM_BinomialLogOnly)->Arg(50000)->Arg(1000000);

static void BM_LogFactorial(benchmark::State& state) {
  const auto N = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(combinatorics::log_factorial_exact(N));
}
BENCHMARK(BM_LogFactorial)->Arg(1000)->Arg(1 << 20)->Arg(1 << 24);

static void BM_EnumerateAssignments(benchmark::State& state) {
  const oracle::CellSpec cells{3, 2};
  const auto N = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(oracle::enumerate_assignments(N, cells));
}
BENCHMARK(BM_EnumerateAssignments)->DenseRange(4, 8, 2);

static void BM_VerifySuite(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(oracle::verify_suite(6).passed());
}
BENCHMARK(BM_VerifySuite)->Unit(benchmark::kMillisecond);
