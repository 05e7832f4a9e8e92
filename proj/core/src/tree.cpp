#include "backbone/tree.hpp"

#include <algorithm>
#include <string>

namespace backbone {

std::string to_string(TreeErrorKind kind) {
  switch (kind) {
    case TreeErrorKind::EmptyTree: return "empty tree";
    case TreeErrorKind::WrongEdgeCount: return "wrong edge count";
    case TreeErrorKind::LabelOutOfRange: return "label out of range";
    case TreeErrorKind::DuplicateEdge: return "duplicate edge";
    case TreeErrorKind::SelfLoop: return "self-loop";
    case TreeErrorKind::Disconnected: return "disconnected";
    case TreeErrorKind::MalformedPrufer: return "malformed Prufer sequence";
  }
  return "unknown tree error";
}

TreeError::TreeError(TreeErrorKind kind, const std::string& detail)
    : InvalidInput(to_string(kind) + ": " + detail), kind_(kind) {}

std::span<const Vertex> LabeledTree::neighbors(Vertex v) const {
  if (v == kNoVertex || v > n_) {
    throw TreeError(TreeErrorKind::LabelOutOfRange, "vertex " + std::to_string(v));
  }
  return std::span<const Vertex>(adjacency_).subspan(offset_[v], offset_[v + 1] - offset_[v]);
}

bool LabeledTree::has_edge(Vertex a, Vertex b) const {
  return std::binary_search(edges_.begin(), edges_.end(), make_edge(a, b));
}

LabeledTree tree_from_edges(std::size_t n, std::span<const Edge> edges) {
  if (n == 0) throw TreeError(TreeErrorKind::EmptyTree, "n must be at least 1");

  std::vector<Edge> sorted;
  sorted.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u == kNoVertex || e.v == kNoVertex || e.u > n || e.v > n) {
      throw TreeError(TreeErrorKind::LabelOutOfRange,
                      "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} with n = " +
                          std::to_string(n));
    }
    if (e.u == e.v) {
      throw TreeError(TreeErrorKind::SelfLoop, "vertex " + std::to_string(e.u));
    }
    sorted.push_back(make_edge(e.u, e.v));
  }
  std::sort(sorted.begin(), sorted.end());
  if (auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end()) {
    throw TreeError(TreeErrorKind::DuplicateEdge,
                    "edge {" + std::to_string(dup->u) + "," + std::to_string(dup->v) + "}");
  }

  LabeledTree tree;
  tree.n_ = n;
  tree.offset_.assign(n + 2, 0);
  for (const Edge& e : sorted) {
    ++tree.offset_[e.u + 1];
    ++tree.offset_[e.v + 1];
  }
  for (std::size_t v = 1; v <= n + 1; ++v) tree.offset_[v] += tree.offset_[v - 1];
  tree.adjacency_.resize(2 * sorted.size());
  std::vector<std::size_t> fill(tree.offset_.begin(), tree.offset_.end() - 1);
  for (const Edge& e : sorted) {
    tree.adjacency_[fill[e.u]++] = e.v;
    tree.adjacency_[fill[e.v]++] = e.u;
  }

  // Connectivity by BFS from vertex 1.
  std::vector<char> seen(n + 1, 0);
  std::vector<Vertex> queue{1};
  seen[1] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    for (std::size_t i = tree.offset_[v]; i < tree.offset_[v + 1]; ++i) {
      const Vertex w = tree.adjacency_[i];
      if (!seen[w]) {
        seen[w] = 1;
        queue.push_back(w);
      }
    }
  }
  if (queue.size() != n) {
    throw TreeError(TreeErrorKind::Disconnected,
                    std::to_string(queue.size()) + " of " + std::to_string(n) +
                        " vertices reachable from vertex 1");
  }
  if (sorted.size() != n - 1) {
    throw TreeError(TreeErrorKind::WrongEdgeCount,
                    std::to_string(sorted.size()) + " edges, expected " + std::to_string(n - 1));
  }

  tree.edges_ = std::move(sorted);
  return tree;
}

namespace {

void check_prufer(const PruferSequence& code) {
  if (code.n < 2) {
    throw TreeError(TreeErrorKind::MalformedPrufer, "Prufer codes need n >= 2");
  }
  if (code.seq.size() != code.n - 2) {
    throw TreeError(TreeErrorKind::MalformedPrufer,
                    "length " + std::to_string(code.seq.size()) + ", expected " +
                        std::to_string(code.n - 2));
  }
  for (Vertex x : code.seq) {
    if (x == kNoVertex || x > code.n) {
      throw TreeError(TreeErrorKind::LabelOutOfRange,
                      "Prufer entry " + std::to_string(x) + " with n = " + std::to_string(code.n));
    }
  }
}

}  // namespace

void rooted_from_prufer(std::size_t n, std::span<const Vertex> seq, RootedView& out) {
  thread_local std::vector<std::uint32_t> degree;
  out.parent.assign(n + 1, kNoVertex);
  out.order.clear();
  out.order.reserve(n);
  out.root = static_cast<Vertex>(n);
  if (n == 1) {
    out.order.push_back(1);
    return;
  }

  degree.assign(n + 1, 1);
  for (Vertex x : seq) ++degree[x];

  Vertex ptr = 1;
  while (degree[ptr] != 1) ++ptr;
  Vertex leaf = ptr;
  for (Vertex x : seq) {
    out.parent[leaf] = x;
    out.order.push_back(leaf);
    if (--degree[x] == 1 && x < ptr) {
      leaf = x;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  out.parent[leaf] = static_cast<Vertex>(n);
  out.order.push_back(leaf);
  out.order.push_back(static_cast<Vertex>(n));
}

LabeledTree tree_from_prufer(const PruferSequence& code) {
  check_prufer(code);
  RootedView view;
  rooted_from_prufer(code.n, code.seq, view);
  std::vector<Edge> edges;
  edges.reserve(code.n - 1);
  for (Vertex v = 1; v <= code.n; ++v) {
    if (view.parent[v] != kNoVertex) edges.push_back(make_edge(v, view.parent[v]));
  }
  return tree_from_edges(code.n, edges);
}

PruferSequence prufer_from_tree(const LabeledTree& tree) {
  const std::size_t n = tree.size();
  if (n < 2) {
    throw TreeError(TreeErrorKind::MalformedPrufer, "Prufer codes need n >= 2");
  }
  const RootedView view = root_and_order(tree, static_cast<Vertex>(n));
  std::vector<std::size_t> degree(n + 1);
  for (Vertex v = 1; v <= n; ++v) degree[v] = tree.degree(v);

  PruferSequence code{n, {}};
  code.seq.reserve(n - 2);
  Vertex ptr = 1;
  while (degree[ptr] != 1) ++ptr;
  Vertex leaf = ptr;
  for (std::size_t i = 0; i + 2 < n; ++i) {
    const Vertex next = view.parent[leaf];
    code.seq.push_back(next);
    if (--degree[next] == 1 && next < ptr) {
      leaf = next;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  return code;
}

RootedView root_and_order(const LabeledTree& tree, Vertex root) {
  const std::size_t n = tree.size();
  if (root == kNoVertex || root > n) {
    throw TreeError(TreeErrorKind::LabelOutOfRange,
                    "root " + std::to_string(root) + " with n = " + std::to_string(n));
  }
  RootedView view;
  view.root = root;
  view.parent.assign(n + 1, kNoVertex);
  view.order.reserve(n);

  // Iterative DFS; a vertex is emitted once its neighbor cursor is exhausted.
  std::vector<std::size_t> cursor(n + 1, 0);
  std::vector<Vertex> stack{root};
  while (!stack.empty()) {
    const Vertex v = stack.back();
    const auto nbrs = tree.neighbors(v);
    if (cursor[v] < nbrs.size()) {
      const Vertex w = nbrs[cursor[v]++];
      if (w != view.parent[v]) {
        view.parent[w] = v;
        stack.push_back(w);
      }
    } else {
      view.order.push_back(v);
      stack.pop_back();
    }
  }
  return view;
}

}  // namespace backbone
