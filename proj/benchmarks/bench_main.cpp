#include <benchmark/benchmark.h>

#include "divcodes/bounds.hpp"
#include "divcodes/canonical.hpp"
#include "divcodes/catalog.hpp"
#include "divcodes/classify.hpp"
#include "divcodes/codes.hpp"

using namespace divcodes;

static void BM_CanonicalGolay(benchmark::State& state) {
  const auto code = golay24();
  for (auto _ : state) benchmark::DoNotOptimize(canonical_key(code));
}
BENCHMARK(BM_CanonicalGolay)->Unit(benchmark::kMillisecond);

static void BM_CanonicalTwoWeight45(benchmark::State& state) {
  const auto points = two_weight_45();
  for (auto _ : state) benchmark::DoNotOptimize(canonical_key(points));
}
BENCHMARK(BM_CanonicalTwoWeight45)->Unit(benchmark::kMillisecond);

static void BM_WeightDistribution(benchmark::State& state) {
  const auto code = golay24();
  for (auto _ : state) benchmark::DoNotOptimize(weight_distribution(code));
}
BENCHMARK(BM_WeightDistribution)->Unit(benchmark::kMicrosecond);

static void BM_Classify2Divisible(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(classify_2divisible(n));
}
BENCHMARK(BM_Classify2Divisible)->DenseRange(8, 11)->Unit(benchmark::kMillisecond);

static void BM_ClassifyDoublyEven(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(classify_divisible_upto(4, n));
}
BENCHMARK(BM_ClassifyDoublyEven)->Arg(16)->Arg(18)->Unit(benchmark::kMillisecond);

static void BM_MomentLp(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(moment_lp(n, 8, 8));
}
BENCHMARK(BM_MomentLp)->Arg(33)->Arg(59)->Unit(benchmark::kMicrosecond);

static void BM_ExcludeLength(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(exclude_length(58, 8));
}
BENCHMARK(BM_ExcludeLength)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
