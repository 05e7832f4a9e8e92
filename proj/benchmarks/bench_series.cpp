#include <benchmark/benchmark.h>

#include "backbone/series.hpp"

using namespace backbone;

static void BM_Exp(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  const Series t = series_T(order);
  for (auto _ : state) benchmark::DoNotOptimize(exp(t));
}
BENCHMARK(BM_Exp)->DenseRange(10, 40, 10);

static void BM_ColorSystem(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(solve_color_system(order));
}
BENCHMARK(BM_ColorSystem)->DenseRange(10, 30, 10)->Unit(benchmark::kMillisecond);

static void BM_CoverSeries(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(series_F_vc(order));
}
BENCHMARK(BM_CoverSeries)->DenseRange(10, 30, 10)->Unit(benchmark::kMillisecond);

static void BM_MatchingSeries(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(series_F_m(order));
}
BENCHMARK(BM_MatchingSeries)->DenseRange(10, 30, 10)->Unit(benchmark::kMillisecond);
