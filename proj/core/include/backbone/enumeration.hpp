#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <string_view>
#include <vector>

#include "backbone/numeric.hpp"
#include "backbone/tree.hpp"

namespace backbone {

// Exact totals over all n^(n-2) labeled trees on n vertices.
struct EnumerationTotals {
  std::size_t n = 0;
  BigInt trees;
  BigInt total_brown;
  BigInt total_red;
  BigInt total_green;
  BigInt total_vc_count;
  BigInt total_mm_count;

  // Associative and commutative; n must match unless one side is empty.
  EnumerationTotals& merge(const EnumerationTotals& other);

  friend bool operator==(const EnumerationTotals&, const EnumerationTotals&) = default;
};

struct EnumerationConfig {
  std::size_t max_n = 10;
  unsigned threads = 1;
  // Called after each finished shard with (finished, total). Serialized.
  std::function<void(std::size_t, std::size_t)> progress;
};

// Number of shards the Prüfer space of size n is split into: n shards (one per
// first digit) for n >= 3, a single shard otherwise.
std::size_t shard_count(std::size_t n);

// Totals over one shard: all Prüfer sequences whose first digit is shard + 1.
EnumerationTotals enumerate_shard(std::size_t n, std::size_t shard);

// Walks every Prüfer sequence, merging per-shard totals. Throws CapExceeded if
// n > config.max_n, InvalidInput if n == 0, InternalInconsistency if any tree
// violates the optimum-size identity.
EnumerationTotals enumerate_totals(std::size_t n, const EnumerationConfig& config = {});

// Calls visit on every labeled tree on n vertices, in odometer order of the
// Prüfer sequence (n = 1 yields the single vertex).
void for_each_labeled_tree(std::size_t n, const std::function<void(const LabeledTree&)>& visit);

// Pseudo-random source used by every sampler: std::mt19937_64, whose output
// sequence is fixed by the standard, with bounded draws by rejection so results
// do not depend on the standard library's distribution implementations.
inline constexpr std::string_view kRandomEngineName = "mt19937_64";
using RandomEngine = std::mt19937_64;

// Uniform integer in [0, bound).
std::uint64_t uniform_below(RandomEngine& engine, std::uint64_t bound);

// Uniform labeled tree via a uniform Prüfer sequence. n >= 2.
LabeledTree sample_random_tree(std::size_t n, std::uint64_t seed);
LabeledTree sample_random_tree(std::size_t n, RandomEngine& engine);

struct ColorFractions {
  std::size_t n = 0;
  std::size_t samples = 0;
  double brown = 0, red = 0, green = 0;           // mean per-tree fractions
  double brown_se = 0, red_se = 0, green_se = 0;  // standard errors of those means
  // Exact color counts summed over all samples; they add up to n * samples.
  std::uint64_t brown_total = 0, red_total = 0, green_total = 0;
};

ColorFractions monte_carlo_fractions(std::size_t n, std::size_t samples, std::uint64_t seed);

}  // namespace backbone
