#include <doctest.h>

#include <algorithm>
#include <queue>
#include <set>
#include <vector>

#include "backbone/enumeration.hpp"
#include "backbone/tree.hpp"
#include "test_trees.hpp"

using namespace backbone;

namespace {

TreeErrorKind error_kind(std::size_t n, std::vector<Edge> edges) {
  try {
    tree_from_edges(n, edges);
  } catch (const TreeError& e) {
    return e.kind();
  }
  FAIL("expected a TreeError");
  return TreeErrorKind::EmptyTree;
}

// All sequences of length len over 1..n, in odometer order.
std::vector<std::vector<Vertex>> all_sequences(std::size_t n, std::size_t len) {
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> seq(len, 1);
  while (true) {
    out.push_back(seq);
    std::size_t i = 0;
    while (i < len && seq[i] == n) seq[i++] = 1;
    if (i == len) break;
    ++seq[i];
  }
  return out;
}

// BFS from `start`; false if some vertex is reached twice.
bool unique_paths_from(const LabeledTree& tree, Vertex start) {
  std::vector<Vertex> parent(tree.size() + 1, kNoVertex);
  std::vector<bool> seen(tree.size() + 1, false);
  std::queue<Vertex> queue;
  queue.push(start);
  seen[start] = true;
  std::size_t reached = 1;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop();
    for (Vertex w : tree.neighbors(v)) {
      if (w == parent[v]) continue;
      if (seen[w]) return false;
      seen[w] = true;
      parent[w] = v;
      ++reached;
      queue.push(w);
    }
  }
  return reached == tree.size();
}

}  // namespace

TEST_CASE("tree_from_edges accepts the small examples") {
  auto one = tree_from_edges(1, {});
  CHECK(one.size() == 1);
  CHECK(one.edges().empty());
  CHECK(one.degree(1) == 0);

  auto p3 = testing::path(3);
  CHECK(p3.size() == 3);
  CHECK(p3.has_edge(1, 2));
  CHECK(p3.has_edge(3, 2));
  CHECK_FALSE(p3.has_edge(1, 3));
  CHECK(p3.degree(2) == 2);
}

TEST_CASE("edge order and orientation do not matter") {
  std::vector<Edge> a{{1, 2}, {2, 3}, {2, 4}};
  std::vector<Edge> b{{4, 2}, {3, 2}, {2, 1}};
  CHECK(tree_from_edges(4, a) == tree_from_edges(4, b));
}

TEST_CASE("tree_from_edges names the violated property") {
  CHECK(error_kind(4, {{1, 2}, {3, 4}}) == TreeErrorKind::Disconnected);
  CHECK(error_kind(0, {}) == TreeErrorKind::EmptyTree);
  CHECK(error_kind(3, {{1, 2}, {2, 5}}) == TreeErrorKind::LabelOutOfRange);
  CHECK(error_kind(3, {{0, 1}, {1, 2}}) == TreeErrorKind::LabelOutOfRange);
  CHECK(error_kind(3, {{1, 1}, {1, 2}}) == TreeErrorKind::SelfLoop);
  CHECK(error_kind(3, {{1, 2}, {2, 1}}) == TreeErrorKind::DuplicateEdge);
  CHECK(error_kind(3, {{1, 2}, {2, 3}, {1, 3}}) == TreeErrorKind::WrongEdgeCount);
  CHECK(error_kind(1, {{1, 1}}) == TreeErrorKind::SelfLoop);
}

TEST_CASE("Prufer decoding examples") {
  CHECK(tree_from_prufer({2, {}}) == testing::path(2));
  CHECK(tree_from_prufer({4, {1, 1}}) == testing::star(3));
  CHECK(tree_from_prufer({3, {2}}) == testing::path(3));
}

TEST_CASE("Prufer encoding examples") {
  CHECK(prufer_from_tree(testing::path(2)).seq.empty());
  CHECK(prufer_from_tree(testing::star(3)) == PruferSequence{4, {1, 1}});
  CHECK(prufer_from_tree(testing::path(5)) == PruferSequence{5, {2, 3, 4}});
}

TEST_CASE("malformed Prufer input is rejected") {
  auto kind_of = [](PruferSequence code) {
    try {
      tree_from_prufer(code);
    } catch (const TreeError& e) {
      return e.kind();
    }
    return TreeErrorKind::EmptyTree;
  };
  CHECK(kind_of({4, {1, 5}}) == TreeErrorKind::LabelOutOfRange);
  CHECK(kind_of({4, {0, 1}}) == TreeErrorKind::LabelOutOfRange);
  CHECK(kind_of({4, {1}}) == TreeErrorKind::MalformedPrufer);
  CHECK(kind_of({1, {}}) == TreeErrorKind::MalformedPrufer);
}

TEST_CASE("Prufer decoding is a bijection for n <= 7") {
  for (std::size_t n = 2; n <= 7; ++n) {
    CAPTURE(n);
    std::set<std::vector<Edge>> seen;
    auto sequences = all_sequences(n, n - 2);
    for (const auto& seq : sequences) {
      PruferSequence code{n, seq};
      auto tree = tree_from_prufer(code);
      REQUIRE(prufer_from_tree(tree) == code);
      seen.insert({tree.edges().begin(), tree.edges().end()});
    }
    CHECK(seen.size() == sequences.size());
  }
}

TEST_CASE("root_and_order on P3 rooted at its center") {
  auto view = root_and_order(testing::path(3), 2);
  CHECK(view.root == 2);
  CHECK(view.parent[1] == 2);
  CHECK(view.parent[3] == 2);
  CHECK(view.parent[2] == kNoVertex);
  REQUIRE(view.order.size() == 3);
  CHECK(view.order.back() == 2);
}

TEST_CASE("root_and_order on a single vertex") {
  auto view = root_and_order(testing::single_vertex(), 1);
  CHECK(view.order == std::vector<Vertex>{1});
  CHECK(view.parent[1] == kNoVertex);
}

TEST_CASE("root_and_order lists children before parents") {
  auto tree = sample_random_tree(50, 7);
  for (Vertex root : {Vertex{1}, Vertex{25}, Vertex{50}}) {
    auto view = root_and_order(tree, root);
    REQUIRE(view.order.size() == 50);
    CHECK(view.order.back() == root);
    std::vector<std::size_t> position(51);
    for (std::size_t i = 0; i < view.order.size(); ++i) position[view.order[i]] = i;
    for (Vertex v = 1; v <= 50; ++v) {
      if (v == root) continue;
      CHECK(tree.has_edge(v, view.parent[v]));
      CHECK(position[v] < position[view.parent[v]]);
    }
  }
}

TEST_CASE("rooted_from_prufer agrees with the decoded tree") {
  RootedView view;
  for (std::size_t n = 2; n <= 6; ++n) {
    for (const auto& seq : all_sequences(n, n - 2)) {
      auto tree = tree_from_prufer({n, seq});
      rooted_from_prufer(n, seq, view);
      REQUIRE(view.order.size() == n);
      CHECK(view.root == n);
      CHECK(view.order.back() == n);
      std::vector<bool> done(n + 1, false);
      for (Vertex v : view.order) {
        if (v != view.root) {
          CHECK(tree.has_edge(v, view.parent[v]));
          CHECK_FALSE(done[view.parent[v]]);
        }
        done[v] = true;
      }
    }
  }
}

TEST_CASE("validated trees have unique paths") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto tree = sample_random_tree(2 + seed * 7, seed);
    for (Vertex v = 1; v <= tree.size(); v += 3) CHECK(unique_paths_from(tree, v));
  }
}
