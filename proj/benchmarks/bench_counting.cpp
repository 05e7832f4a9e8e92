#include <benchmark/benchmark.h>

#include "backbone/counting.hpp"
#include "backbone/enumeration.hpp"
#include "backbone/oracle.hpp"

using namespace backbone;

static void BM_VertexCoverCount(benchmark::State& state) {
  const auto tree = sample_random_tree(static_cast<std::size_t>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(min_vertex_cover_stats(tree));
}
BENCHMARK(BM_VertexCoverCount)->Range(64, 1 << 16);

static void BM_MatchingCount(benchmark::State& state) {
  const auto tree = sample_random_tree(static_cast<std::size_t>(state.range(0)), 5);
  for (auto _ : state) benchmark::DoNotOptimize(max_matching_stats(tree));
}
BENCHMARK(BM_MatchingCount)->Range(64, 1 << 16);

static void BM_OracleCovers(benchmark::State& state) {
  const auto tree = sample_random_tree(static_cast<std::size_t>(state.range(0)), 6);
  for (auto _ : state) benchmark::DoNotOptimize(all_minimal_vertex_covers(tree));
}
BENCHMARK(BM_OracleCovers)->DenseRange(8, 16, 4);
