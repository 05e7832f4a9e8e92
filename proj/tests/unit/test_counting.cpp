#include <doctest.h>

#include <vector>

#include "backbone/bcoloring.hpp"
#include "backbone/counting.hpp"
#include "backbone/enumeration.hpp"
#include "backbone/oracle.hpp"
#include "test_trees.hpp"

using namespace backbone;

TEST_CASE("minimum vertex cover examples") {
  CHECK(min_vertex_cover_stats(testing::path(3)) == OptimumStats{1, 1});
  CHECK(min_vertex_cover_stats(testing::path(4)) == OptimumStats{2, 3});
  CHECK(min_vertex_cover_stats(testing::single_vertex()) == OptimumStats{0, 1});
  CHECK(min_vertex_cover_stats(testing::path(2)) == OptimumStats{1, 2});
}

TEST_CASE("maximum matching examples") {
  CHECK(max_matching_stats(testing::path(3)) == OptimumStats{1, 2});
  CHECK(max_matching_stats(testing::path(4)) == OptimumStats{2, 1});
  CHECK(max_matching_stats(testing::single_vertex()) == OptimumStats{0, 1});
  CHECK(max_matching_stats(testing::star(3)) == OptimumStats{1, 3});
}

TEST_CASE("summarize examples") {
  CHECK(summarize(testing::path(3)) == CountSummary{1, 1, 1, 2, 1, 0, 2});
  CHECK(summarize(testing::path(2)) == CountSummary{1, 2, 1, 1, 0, 2, 0});
  auto p5 = summarize(testing::path(5));
  CHECK(p5.vc_size == 2);
  CHECK(p5.mm_count == 3);
  CHECK(p5.n_brown == 2);
  CHECK(p5.n_green == 3);
  CHECK(p5.n_red == 0);
}

TEST_CASE("counts beyond 64 bits stay exact") {
  auto stats = summarize(testing::comb(100));
  BigInt expected = 1;
  expected <<= 100;
  CHECK(stats.mm_count == expected);
  CHECK(stats.vc_count == 1);
  CHECK(stats.vc_size == 100);
  CHECK(stats.n_brown == 100);
}

TEST_CASE("counts match the brute-force lists for n <= 7") {
  for (std::size_t n = 1; n <= 7; ++n) {
    for_each_labeled_tree(n, [](const LabeledTree& tree) {
      auto covers = all_minimal_vertex_covers(tree);
      auto matchings = all_maximal_matchings(tree);
      auto vc = min_vertex_cover_stats(tree);
      auto mm = max_matching_stats(tree);
      REQUIRE(vc.count == covers.size());
      REQUIRE(vc.size == covers.front().size());
      REQUIRE(mm.count == matchings.size());
      REQUIRE(mm.size == matchings.front().size());
    });
  }
}

TEST_CASE("optimum size equals brown count plus half the red count") {
  RandomEngine engine(99);
  for (int i = 0; i < 500; ++i) {
    auto tree = sample_random_tree(2 + uniform_below(engine, 999), engine);
    auto s = summarize(tree);
    REQUIRE(s.vc_size == s.mm_size);
    REQUIRE(s.vc_size == s.n_brown + s.n_red / 2);
    REQUIRE(s.n_brown + s.n_red + s.n_green == tree.size());
  }
}

TEST_CASE("maximum matchings use every red edge plus one brown-green edge per brown vertex") {
  for (std::size_t n = 2; n <= 7; ++n) {
    for_each_labeled_tree(n, [](const LabeledTree& tree) {
      auto c = bcolor(tree);
      for (const auto& m : all_maximal_matchings(tree)) {
        std::size_t red = 0;
        std::vector<int> brown_edges(tree.size() + 1, 0);
        for (auto e : m) {
          Color a = c.color(e.u), b = c.color(e.v);
          if (a == Color::Red && b == Color::Red) {
            ++red;
          } else if (a == Color::Brown && b == Color::Green) {
            ++brown_edges[e.u];
          } else if (a == Color::Green && b == Color::Brown) {
            ++brown_edges[e.v];
          } else {
            FAIL("edge joins unexpected colors");
          }
        }
        REQUIRE(red == c.red_edges.size());
        for (Vertex v : c.vertices(Color::Brown)) REQUIRE(brown_edges[v] == 1);
      }
    });
  }
}
