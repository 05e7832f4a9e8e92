#include <benchmark/benchmark.h>

#include "backbone/enumeration.hpp"

using namespace backbone;

static void BM_EnumerateTotals(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_totals(n));
}
BENCHMARK(BM_EnumerateTotals)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);

static void BM_SampleTree(benchmark::State& state) {
  RandomEngine engine(7);
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sample_random_tree(n, engine));
}
BENCHMARK(BM_SampleTree)->Range(64, 1 << 16);
