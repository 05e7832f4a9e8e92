#include <doctest.h>

#include <string>
#include <vector>

#include "backbone/enumeration.hpp"
#include "backbone/errors.hpp"
#include "backbone/numeric.hpp"
#include "backbone/series.hpp"
#include "reference_sequences.hpp"

using namespace backbone;
namespace ref = backbone::reference;

namespace {

Series poly(std::size_t order, std::vector<long> coeffs) {
  Series s(order);
  for (std::size_t k = 0; k < coeffs.size() && k <= order; ++k) s[k] = coeffs[k];
  return s;
}

void check_counts(const Series& f, const std::array<std::uint64_t, 10>& expected) {
  CHECK(f[0] == 0);
  for (std::size_t n = 1; n <= 10; ++n) {
    CAPTURE(n);
    CHECK(f.egf_count(n) == expected[n - 1]);
  }
}

// Residual after k iterations vanishes below degree k + 1.
void check_contraction(SeriesSystem s, const SystemStep& step, std::size_t iterations) {
  for (std::size_t k = 1; k <= iterations; ++k) {
    s = step(s);
    auto next = step(s);
    for (const auto& [name, value] : s.unknowns) {
      CAPTURE(name);
      CAPTURE(k);
      auto v = (next.at(name) - value).valuation();
      CHECK((!v || *v >= k + 1));
    }
  }
}

}  // namespace

TEST_CASE("exp examples") {
  CHECK(exp(Series(8)) == Series::constant(1, 8));
  auto e = exp(Series::variable(10));
  for (unsigned long n = 0; n <= 10; ++n) CHECK(e[n] == Rational(1, factorial(n)));
  CHECK_THROWS_AS(exp(Series::constant(1, 4)), InvalidInput);
}

TEST_CASE("compose example") {
  auto outer = poly(6, {0, 0, 1});
  auto inner = poly(6, {0, 1, 1});
  CHECK(compose(outer, inner) == poly(6, {0, 0, 1, 2, 1}));
  CHECK_THROWS_AS(compose(outer, poly(6, {1, 1})), InvalidInput);
}

TEST_CASE("arithmetic truncates to the smaller order") {
  auto a = poly(3, {1, 1});
  auto b = poly(5, {1, 1});
  auto prod = a * b;
  CHECK(prod.order() == 3);
  CHECK(prod == poly(3, {1, 2, 1}));
  CHECK((a - a).is_zero());
  CHECK(poly(4, {0, 0, 3}).valuation() == 2u);
  CHECK_FALSE(Series(4).valuation().has_value());
}

TEST_CASE("egf_count rejects non-integral counts") {
  Series s(3);
  s[2] = Rational(1, 3);
  CHECK_THROWS_AS(s.egf_count(2), InternalInconsistency);
}

TEST_CASE("tree function coefficients") {
  auto t = series_T(30);
  CHECK(t[1] == 1);
  CHECK(t[2] == 1);
  CHECK(t[3] == Rational(3, 2));
  CHECK((t - Series::variable(30) * exp(t)).is_zero());
  std::vector<unsigned long> trees{1, 1, 3, 16, 125};
  for (unsigned long n = 1; n <= 5; ++n) CHECK(t.egf_count(n) / n == trees[n - 1]);
}

TEST_CASE("color system reproduces the unrooted tree series") {
  auto system = solve_color_system(30);
  auto t = series_T(30);
  auto expected = t - t * t * Rational(1, 2);
  CHECK(colored_tree_series(system) == expected);
  CHECK(series_unrooted_trees(30) == expected);
}

TEST_CASE("color series counts") {
  check_counts(series_F_color(Color::Brown), ref::kBrown);
  check_counts(series_F_color(Color::Red), ref::kRed);
  check_counts(series_F_color(Color::Green), ref::kGreen);
  for (Color c : {Color::Brown, Color::Red, Color::Green})
    CHECK(series_F_color(c, 30) == series_F_color_closed(c, 30));
}

TEST_CASE("cover and matching series counts") {
  check_counts(series_F_vc(30), ref::kVertexCovers);
  check_counts(series_F_m(30), ref::kMatchings);
}

TEST_CASE("series agree with enumeration for n <= 8") {
  auto brown = series_F_color(Color::Brown, 12);
  auto red = series_F_color(Color::Red, 12);
  auto green = series_F_color(Color::Green, 12);
  auto vc = series_F_vc(12);
  auto mm = series_F_m(12);
  for (std::size_t n = 1; n <= 8; ++n) {
    CAPTURE(n);
    auto t = enumerate_totals(n);
    CHECK(brown.egf_count(n) == t.total_brown);
    CHECK(red.egf_count(n) == t.total_red);
    CHECK(green.egf_count(n) == t.total_green);
    CHECK(vc.egf_count(n) == t.total_vc_count);
    CHECK(mm.egf_count(n) == t.total_mm_count);
  }
}

TEST_CASE("fixed-point iterations gain one order each") {
  check_contraction(zero_system(12, {"G", "U", "B", "R", "Q"}), color_system_step, 12);
  check_contraction(zero_system(12, {"B", "G", "R+", "R-", "U", "Q+", "Q-"}), cover_system_step, 12);
  check_contraction(zero_system(12, {"G+", "G-", "B", "R", "U+", "U-", "Q"}), matching_system_step, 12);
  auto wrap = [](Series (*f)(const Series&)) {
    return [f](const SeriesSystem& s) {
      SeriesSystem next = s;
      next.unknowns["U"] = f(s.at("U"));
      return next;
    };
  };
  check_contraction(zero_system(12, {"U"}), wrap(u_vc_step), 12);
  check_contraction(zero_system(12, {"U"}), wrap(u_m_step), 12);
}

TEST_CASE("fixed-point solver reports non-convergence") {
  auto grow = [](const SeriesSystem& s) {
    SeriesSystem next = s;
    next.unknowns["A"] = s.at("A") + Rational(1);
    return next;
  };
  CHECK_THROWS_AS(solve_fixed_point(zero_system(4, {"A"}), grow), NonConvergence);
}

TEST_CASE("refined cover system reductions") {
  auto systems = solve_refined_systems(20);
  const auto& c = systems.cover;
  CHECK((c.at("R+") - c.at("R-")).is_zero());
  CHECK(c.at("B") + c.at("R+") == c.at("U"));
  CHECK(c.at("G") == c.at("Q-"));
  CHECK(cover_series_from_system(c) == series_F_vc(20));
}

TEST_CASE("refined matching system reductions") {
  auto systems = solve_refined_systems(20);
  const auto& m = systems.matching;
  auto u = solve_u_m(20);
  auto x2 = Series::variable(20) * Series::variable(20);
  CHECK(m.at("G+") == u - x2 * exp(u * Rational(2)));
  CHECK(m.at("B") + m.at("R") == m.at("U+"));
  CHECK(m.at("Q") == m.at("G-"));
  CHECK(matching_series_from_system(m) == series_F_m(20));
}
