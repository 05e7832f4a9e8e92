#include "backbone/kernel.hpp"

#include <string>

#include "backbone/bcoloring.hpp"
#include "backbone/errors.hpp"
#include "backbone/numeric.hpp"

namespace backbone {

KernelReport adjacency_kernel(const LabeledTree& tree, const KernelConfig& config) {
  const std::size_t n = tree.size();
  if (n > config.max_vertices) {
    throw CapExceeded("kernel cap is " + std::to_string(config.max_vertices) +
                      " vertices, tree has " + std::to_string(n));
  }

  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (const Edge& e : tree.edges()) {
    a[e.u - 1][e.v - 1] = 1;
    a[e.v - 1][e.u - 1] = 1;
  }

  std::vector<std::size_t> pivot_col;  // pivot column of each pivot row
  std::vector<char> is_pivot(n, 0);
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < n; ++col) {
    std::size_t r = row;
    while (r < n && a[r][col] == 0) ++r;
    if (r == n) continue;
    std::swap(a[r], a[row]);
    const Rational inv = 1 / a[row][col];
    for (std::size_t j = col; j < n; ++j) a[row][j] *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == row || a[i][col] == 0) continue;
      const Rational factor = a[i][col];
      for (std::size_t j = col; j < n; ++j) {
        if (a[row][j] != 0) a[i][j] -= factor * a[row][j];
      }
    }
    pivot_col.push_back(col);
    is_pivot[col] = 1;
    ++row;
  }

  // Basis vector for free column f: x_f = 1, x_{pivot_col[i]} = -a[i][f].
  std::vector<char> in_support(n, 0);
  KernelReport report;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    ++report.dimension;
    in_support[f] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) {
      if (a[i][f] != 0) in_support[pivot_col[i]] = 1;
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (in_support[v]) report.support.push_back(static_cast<Vertex>(v + 1));
  }
  return report;
}

bool check_kernel_coloring(const LabeledTree& tree, const KernelConfig& config) {
  const KernelReport kernel = adjacency_kernel(tree, config);
  const Tricoloring coloring = bcolor(tree);
  const auto green = static_cast<long>(coloring.count(Color::Green));
  const auto brown = static_cast<long>(coloring.count(Color::Brown));
  return static_cast<long>(kernel.dimension) == green - brown &&
         kernel.support == coloring.vertices(Color::Green);
}

}  // namespace backbone
