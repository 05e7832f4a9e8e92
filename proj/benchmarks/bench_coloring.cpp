#include <benchmark/benchmark.h>

#include "backbone/bcoloring.hpp"
#include "backbone/enumeration.hpp"
#include "backbone/kernel.hpp"

using namespace backbone;

static void BM_BColorLinear(benchmark::State& state) {
  const auto tree = sample_random_tree(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(bcolor(tree));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BColorLinear)->RangeMultiplier(4)->Range(64, 1 << 18)->Complexity(benchmark::oN);

static void BM_BColorQuadratic(benchmark::State& state) {
  const auto tree = sample_random_tree(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(bcolor_quadratic(tree));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BColorQuadratic)->RangeMultiplier(4)->Range(64, 4096)->Complexity(benchmark::oNSquared);

static void BM_VerifyClauses(benchmark::State& state) {
  const auto tree = sample_random_tree(static_cast<std::size_t>(state.range(0)), 2);
  const auto coloring = bcolor(tree);
  for (auto _ : state) benchmark::DoNotOptimize(verify_condition_iii(tree, coloring));
}
BENCHMARK(BM_VerifyClauses)->Range(64, 1 << 16);

static void BM_AdjacencyKernel(benchmark::State& state) {
  const auto tree = sample_random_tree(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(adjacency_kernel(tree));
}
BENCHMARK(BM_AdjacencyKernel)->RangeMultiplier(2)->Range(8, 128);
