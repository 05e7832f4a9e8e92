#include <doctest.h>

#include <vector>

#include "backbone/bcoloring.hpp"
#include "backbone/counting.hpp"
#include "backbone/enumeration.hpp"
#include "backbone/errors.hpp"
#include "backbone/kernel.hpp"
#include "test_trees.hpp"

using namespace backbone;

TEST_CASE("kernel examples") {
  CHECK(adjacency_kernel(testing::single_vertex()) == KernelReport{1, {1}});
  CHECK(adjacency_kernel(testing::path(2)) == KernelReport{0, {}});
  CHECK(adjacency_kernel(testing::path(3)) == KernelReport{1, {1, 3}});
  CHECK(adjacency_kernel(testing::path(5)) == KernelReport{1, {1, 3, 5}});
  CHECK(adjacency_kernel(testing::star(3)) == KernelReport{2, {2, 3, 4}});
}

TEST_CASE("kernel matches the coloring for every tree with n <= 7") {
  for (std::size_t n = 1; n <= 7; ++n)
    for_each_labeled_tree(n, [](const LabeledTree& tree) { REQUIRE(check_kernel_coloring(tree)); });
}

TEST_CASE("kernel dimension is n minus twice the matching number") {
  RandomEngine engine(404);
  for (int i = 0; i < 200; ++i) {
    auto tree = sample_random_tree(2 + uniform_below(engine, 99), engine);
    auto report = adjacency_kernel(tree);
    REQUIRE(report.dimension == tree.size() - 2 * max_matching_stats(tree).size);
    REQUIRE(report.support == bcolor(tree).vertices(Color::Green));
  }
}

TEST_CASE("kernel respects its cap") {
  CHECK_THROWS_AS(adjacency_kernel(testing::path(201)), CapExceeded);
  CHECK_THROWS_AS(check_kernel_coloring(testing::path(10), KernelConfig{9}), CapExceeded);
}
