#include "backbone/oracle.hpp"

#include <bit>
#include <cstdint>
#include <string>

#include "backbone/errors.hpp"

namespace backbone {

namespace {

using Mask = std::uint32_t;

void check_cap(const LabeledTree& tree, const OracleConfig& config) {
  // Masks are 32 bits wide; the cap may be relaxed up to that.
  if (tree.size() > config.max_vertices || tree.size() > 31) {
    throw CapExceeded("oracle cap is " + std::to_string(config.max_vertices) +
                      " vertices, tree has " + std::to_string(tree.size()));
  }
}

Mask bit(Vertex v) { return Mask{1} << (v - 1); }

// Subsets of size k in increasing order (Gosper's hack), stopping at the
// first k that admits a cover.
std::vector<Mask> cover_masks(const LabeledTree& tree) {
  const std::size_t n = tree.size();
  std::vector<Mask> edge_masks;
  for (const Edge& e : tree.edges()) edge_masks.push_back(bit(e.u) | bit(e.v));
  const auto covers = [&](Mask m) {
    for (const Mask e : edge_masks) {
      if ((m & e) == 0) return false;
    }
    return true;
  };

  std::vector<Mask> out;
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::size_t k = 0; k <= n && out.empty(); ++k) {
    if (k == 0) {
      if (covers(0)) out.push_back(0);
      continue;
    }
    std::uint64_t m = (std::uint64_t{1} << k) - 1;
    while (m < limit) {
      if (covers(static_cast<Mask>(m))) out.push_back(static_cast<Mask>(m));
      const std::uint64_t low = m & (~m + 1);
      const std::uint64_t ripple = m + low;
      m = (((ripple ^ m) >> 2) / low) | ripple;
    }
  }
  return out;
}

// Each matching is a mask over edge indices into tree.edges().
std::vector<Mask> matching_masks(const LabeledTree& tree) {
  const auto edges = tree.edges();
  const std::size_t m = edges.size();
  std::vector<Mask> out;
  int best = -1;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << m); ++s) {
    Mask used = 0;
    bool ok = true;
    for (std::size_t i = 0; i < m && ok; ++i) {
      if ((s >> i) & 1U) {
        const Mask ends = bit(edges[i].u) | bit(edges[i].v);
        ok = (used & ends) == 0;
        used |= ends;
      }
    }
    if (!ok) continue;
    const int size = std::popcount(s);
    if (size > best) {
      best = size;
      out.clear();
    }
    if (size == best) out.push_back(static_cast<Mask>(s));
  }
  return out;
}

}  // namespace

std::vector<std::vector<Vertex>> all_minimal_vertex_covers(const LabeledTree& tree,
                                                           const OracleConfig& config) {
  check_cap(tree, config);
  std::vector<std::vector<Vertex>> out;
  for (const Mask m : cover_masks(tree)) {
    std::vector<Vertex> cover;
    for (Vertex v = 1; v <= tree.size(); ++v) {
      if (m & bit(v)) cover.push_back(v);
    }
    out.push_back(std::move(cover));
  }
  return out;
}

std::vector<std::vector<Edge>> all_maximal_matchings(const LabeledTree& tree,
                                                     const OracleConfig& config) {
  check_cap(tree, config);
  const auto edges = tree.edges();
  std::vector<std::vector<Edge>> out;
  for (const Mask s : matching_masks(tree)) {
    std::vector<Edge> matching;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if ((s >> i) & 1U) matching.push_back(edges[i]);
    }
    out.push_back(std::move(matching));
  }
  return out;
}

Tricoloring oracle_coloring_from_covers(const LabeledTree& tree, const OracleConfig& config) {
  check_cap(tree, config);
  const std::size_t n = tree.size();
  const auto covers = cover_masks(tree);
  Mask in_all = ~Mask{0};
  Mask in_some = 0;
  for (const Mask m : covers) {
    in_all &= m;
    in_some |= m;
  }

  Tricoloring out;
  out.colors.assign(n, Color::Red);
  for (Vertex v = 1; v <= n; ++v) {
    if (in_all & bit(v)) out.colors[v - 1] = Color::Brown;
    else if (!(in_some & bit(v))) out.colors[v - 1] = Color::Green;
  }
  for (const Edge& e : tree.edges()) {
    if (out.color(e.u) != Color::Red || out.color(e.v) != Color::Red) continue;
    const Mask both = bit(e.u) | bit(e.v);
    bool together = false;
    for (const Mask m : covers) together = together || (m & both) == both;
    if (!together) out.red_edges.push_back(e);
  }
  return out;
}

Tricoloring oracle_coloring_from_matchings(const LabeledTree& tree, const OracleConfig& config) {
  check_cap(tree, config);
  const std::size_t n = tree.size();
  const auto edges = tree.edges();
  const auto matchings = matching_masks(tree);

  Mask in_all = ~Mask{0};
  Mask exposed_somewhere = 0;
  for (const Mask s : matchings) {
    in_all &= s;
    Mask covered = 0;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if ((s >> i) & 1U) covered |= bit(edges[i].u) | bit(edges[i].v);
    }
    exposed_somewhere |= ~covered;
  }

  Tricoloring out;
  out.colors.assign(n, Color::Brown);
  for (Vertex v = 1; v <= n; ++v) {
    if (exposed_somewhere & bit(v)) out.colors[v - 1] = Color::Green;
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if ((in_all >> i) & 1U) {
      out.red_edges.push_back(edges[i]);
      out.colors[edges[i].u - 1] = Color::Red;
      out.colors[edges[i].v - 1] = Color::Red;
    }
  }
  return out;
}

}  // namespace backbone
