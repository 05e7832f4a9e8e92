#pragma once

#include <cstddef>
#include <vector>

#include "backbone/tree.hpp"

namespace backbone {

struct KernelConfig {
  std::size_t max_vertices = 200;
};

struct KernelReport {
  std::size_t dimension = 0;
  std::vector<Vertex> support;  // vertices where some kernel vector is nonzero, sorted

  friend bool operator==(const KernelReport&, const KernelReport&) = default;
};

// Kernel of the 0/1 adjacency matrix over the rationals, by exact reduced row
// echelon form. O(n^3); throws CapExceeded above config.max_vertices.
KernelReport adjacency_kernel(const LabeledTree& tree, const KernelConfig& config = {});

// True iff dim ker = N_G - N_B and the kernel support is exactly the green
// vertex set of the b-coloring.
bool check_kernel_coloring(const LabeledTree& tree, const KernelConfig& config = {});

}  // namespace backbone
