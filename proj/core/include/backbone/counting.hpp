#pragma once

#include <cstddef>

#include "backbone/numeric.hpp"
#include "backbone/tree.hpp"

namespace backbone {

// Optimum cardinality and the exact number of optimal solutions.
struct OptimumStats {
  std::size_t size = 0;
  BigInt count;

  friend bool operator==(const OptimumStats&, const OptimumStats&) = default;
};

// "Minimal" and "maximal" are global optima by cardinality throughout.
OptimumStats min_vertex_cover_stats(const LabeledTree& tree);
OptimumStats max_matching_stats(const LabeledTree& tree);

struct CountSummary {
  std::size_t vc_size = 0;
  BigInt vc_count;
  std::size_t mm_size = 0;
  BigInt mm_count;
  std::size_t n_brown = 0;
  std::size_t n_red = 0;
  std::size_t n_green = 0;

  friend bool operator==(const CountSummary&, const CountSummary&) = default;
};

// Runs the b-coloring and both counting DPs. Throws InternalInconsistency when
// vc_size, mm_size and n_brown + n_red / 2 are not all equal.
CountSummary summarize(const LabeledTree& tree);

}  // namespace backbone
