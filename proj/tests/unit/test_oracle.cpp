#include <doctest.h>

#include <algorithm>
#include <vector>

#include "backbone/bcoloring.hpp"
#include "backbone/enumeration.hpp"
#include "backbone/errors.hpp"
#include "backbone/oracle.hpp"
#include "test_trees.hpp"

using namespace backbone;
using enum Color;

namespace {

template <class T>
std::vector<std::vector<T>> sorted(std::vector<std::vector<T>> sets) {
  for (auto& s : sets) std::sort(s.begin(), s.end());
  std::sort(sets.begin(), sets.end());
  return sets;
}

bool is_cover(const LabeledTree& tree, const std::vector<Vertex>& cover) {
  std::vector<bool> in(tree.size() + 1, false);
  for (Vertex v : cover) in[v] = true;
  return std::all_of(tree.edges().begin(), tree.edges().end(), [&](Edge e) { return in[e.u] || in[e.v]; });
}

}  // namespace

TEST_CASE("minimum cover lists") {
  using Sets = std::vector<std::vector<Vertex>>;
  CHECK(sorted(all_minimal_vertex_covers(testing::path(3))) == Sets{{2}});
  CHECK(sorted(all_minimal_vertex_covers(testing::path(4))) == Sets{{1, 3}, {2, 3}, {2, 4}});
  CHECK(sorted(all_minimal_vertex_covers(testing::path(2))) == Sets{{1}, {2}});
  CHECK(sorted(all_minimal_vertex_covers(testing::single_vertex())) == Sets{{}});
}

TEST_CASE("maximum matching lists") {
  using Sets = std::vector<std::vector<Edge>>;
  CHECK(sorted(all_maximal_matchings(testing::path(3))) == Sets{{{1, 2}}, {{2, 3}}});
  CHECK(sorted(all_maximal_matchings(testing::path(4))) == Sets{{{1, 2}, {3, 4}}});
  CHECK(sorted(all_maximal_matchings(testing::single_vertex())) == Sets{{}});
}

TEST_CASE("coloring read off the covers") {
  CHECK(oracle_coloring_from_covers(testing::path(3)).colors == std::vector{Green, Brown, Green});
  auto edge = oracle_coloring_from_covers(testing::path(2));
  CHECK(edge.colors == std::vector{Red, Red});
  CHECK(edge.red_edges == std::vector<Edge>{{1, 2}});
  CHECK(oracle_coloring_from_covers(testing::star(3)).colors == std::vector{Brown, Green, Green, Green});
}

TEST_CASE("coloring read off the matchings") {
  auto p4 = oracle_coloring_from_matchings(testing::path(4));
  CHECK(p4.colors == std::vector{Red, Red, Red, Red});
  CHECK(p4.red_edges == std::vector<Edge>{{1, 2}, {3, 4}});
  CHECK(oracle_coloring_from_matchings(testing::path(3)).colors == std::vector{Green, Brown, Green});
  CHECK(oracle_coloring_from_matchings(testing::path(5)).colors ==
        std::vector{Green, Brown, Green, Brown, Green});
}

TEST_CASE("the vertex cap is enforced") {
  CHECK_THROWS_AS(all_minimal_vertex_covers(testing::path(17)), CapExceeded);
  CHECK_THROWS_AS(all_maximal_matchings(testing::path(6), OracleConfig{5}), CapExceeded);
  CHECK_NOTHROW(all_maximal_matchings(testing::path(5), OracleConfig{5}));
}

TEST_CASE("listed covers are distinct minimum covers") {
  for (std::size_t n = 1; n <= 6; ++n) {
    for_each_labeled_tree(n, [](const LabeledTree& tree) {
      auto covers = sorted(all_minimal_vertex_covers(tree));
      REQUIRE(std::adjacent_find(covers.begin(), covers.end()) == covers.end());
      std::size_t k = covers.front().size();
      for (const auto& c : covers) {
        REQUIRE(c.size() == k);
        REQUIRE(is_cover(tree, c));
      }
      // No smaller cover exists.
      std::size_t n = tree.size();
      for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcount(mask)) >= k) continue;
        std::vector<Vertex> c;
        for (Vertex v = 1; v <= n; ++v)
          if (mask >> (v - 1) & 1u) c.push_back(v);
        REQUIRE_FALSE(is_cover(tree, c));
      }
    });
  }
}

TEST_CASE("every minimum cover holds exactly one endpoint of each red edge") {
  for (std::size_t n = 2; n <= 7; ++n) {
    for_each_labeled_tree(n, [](const LabeledTree& tree) {
      auto c = bcolor(tree);
      for (const auto& cover : all_minimal_vertex_covers(tree)) {
        for (auto e : c.red_edges) {
          bool u = std::binary_search(cover.begin(), cover.end(), e.u);
          bool v = std::binary_search(cover.begin(), cover.end(), e.v);
          REQUIRE(u != v);
        }
      }
    });
  }
}

TEST_CASE("both oracle colorings match bcolor for n <= 7") {
  for (std::size_t n = 1; n <= 7; ++n) {
    for_each_labeled_tree(n, [](const LabeledTree& tree) {
      auto fast = bcolor(tree);
      REQUIRE(oracle_coloring_from_covers(tree) == fast);
      REQUIRE(oracle_coloring_from_matchings(tree) == fast);
    });
  }
}
