#pragma once

#include <cstddef>
#include <vector>

#include "backbone/bcoloring.hpp"
#include "backbone/tree.hpp"

namespace backbone {

// Brute-force ground truth. Exponential in n; guarded by a cap.
struct OracleConfig {
  std::size_t max_vertices = 16;
};

// All minimum-cardinality vertex covers, each sorted, listed in increasing
// bitmask order within the optimal cardinality. Throws CapExceeded.
std::vector<std::vector<Vertex>> all_minimal_vertex_covers(const LabeledTree& tree,
                                                           const OracleConfig& config = {});

// All maximum-cardinality matchings, each sorted. Throws CapExceeded.
std::vector<std::vector<Edge>> all_maximal_matchings(const LabeledTree& tree,
                                                     const OracleConfig& config = {});

// Brown = positive cover backbone, green = negative cover backbone, red edges =
// exclusive edges (degenerate pairs no minimum cover contains together).
Tricoloring oracle_coloring_from_covers(const LabeledTree& tree, const OracleConfig& config = {});

// Red edges = positive matching backbone, green = optional vertices (exposed
// by some maximum matching), brown = everything else.
Tricoloring oracle_coloring_from_matchings(const LabeledTree& tree, const OracleConfig& config = {});

}  // namespace backbone
