#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "backbone/errors.hpp"

namespace backbone {

// Vertices are labeled 1..n on every public interface.
using Vertex = std::uint32_t;
inline constexpr Vertex kNoVertex = 0;

// Unordered edge stored with u < v.
struct Edge {
  Vertex u = kNoVertex;
  Vertex v = kNoVertex;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

enum class TreeErrorKind {
  EmptyTree,
  WrongEdgeCount,
  LabelOutOfRange,
  DuplicateEdge,
  SelfLoop,
  Disconnected,
  MalformedPrufer,
};

std::string to_string(TreeErrorKind kind);

class TreeError : public InvalidInput {
 public:
  TreeError(TreeErrorKind kind, const std::string& detail);
  TreeErrorKind kind() const noexcept { return kind_; }

 private:
  TreeErrorKind kind_;
};

// A validated labeled tree. Immutable after construction; the only way to get
// one is through tree_from_edges / tree_from_prufer, which enforce that the
// edge list is exactly a spanning tree of {1..n}.
class LabeledTree {
 public:
  std::size_t size() const noexcept { return n_; }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }
  bool has_edge(Vertex a, Vertex b) const;

  friend bool operator==(const LabeledTree& a, const LabeledTree& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  friend LabeledTree tree_from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t n_ = 0;
  std::vector<Edge> edges_;          // sorted
  std::vector<std::size_t> offset_;  // CSR offsets, indexed by vertex, size n + 2
  std::vector<Vertex> adjacency_;
};

// Edges may be given in either orientation. Checks run in this order: label
// range, self-loops, duplicates, connectivity, edge count. Fewer than n - 1
// edges therefore reports Disconnected.
LabeledTree tree_from_edges(std::size_t n, std::span<const Edge> edges);

struct PruferSequence {
  std::size_t n = 0;
  std::vector<Vertex> seq;  // length n - 2, entries in 1..n

  friend bool operator==(const PruferSequence&, const PruferSequence&) = default;
};

LabeledTree tree_from_prufer(const PruferSequence& code);
PruferSequence prufer_from_tree(const LabeledTree& tree);

// A tree rooted at `root`. parent and order are indexed by vertex id (slot 0
// unused); parent[root] == kNoVertex. Every vertex appears in `order` after all
// of its children, so a single forward sweep is a valid bottom-up DP schedule.
struct RootedView {
  Vertex root = kNoVertex;
  std::vector<Vertex> parent;
  std::vector<Vertex> order;

  std::size_t size() const noexcept { return order.size(); }
};

// Depth-first post-order.
RootedView root_and_order(const LabeledTree& tree, Vertex root);

// Decodes a Prüfer sequence straight into a view rooted at n, reusing the
// storage already held by `out`. The order is leaf-removal order, which is a
// children-first order but not a DFS post-order. No validation beyond entry
// range; used by the enumeration hot loop.
void rooted_from_prufer(std::size_t n, std::span<const Vertex> seq, RootedView& out);

}  // namespace backbone
