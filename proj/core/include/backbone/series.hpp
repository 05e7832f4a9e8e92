#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "backbone/bcoloring.hpp"
#include "backbone/numeric.hpp"

namespace backbone {

// Truncated power series sum_{k<=order} c_k x^k with exact rational
// coefficients. Binary operations between series of different orders produce
// the smaller order.
class Series {
 public:
  Series() : coeffs_(1) {}
  explicit Series(std::size_t order) : coeffs_(order + 1) {}
  // Coefficients beyond `order` are dropped; missing ones are zero.
  Series(std::size_t order, const std::vector<Rational>& coeffs);

  static Series constant(const Rational& c, std::size_t order);
  static Series variable(std::size_t order);  // the series x

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  const Rational& operator[](std::size_t k) const { return coeffs_.at(k); }
  Rational& operator[](std::size_t k) { return coeffs_.at(k); }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

  bool is_zero() const;
  // Index of the first nonzero coefficient; nullopt for the zero series.
  std::optional<std::size_t> valuation() const;

  // k! * [x^k]. Throws InternalInconsistency if that is not an integer.
  BigInt egf_count(std::size_t k) const;

  Series truncated(std::size_t order) const;
  Series extended(std::size_t order) const;  // zero-padded
  // f / x; requires f[0] == 0 and loses one order.
  Series divided_by_x() const;
  Series derivative() const;

  Series& operator+=(const Series& rhs);
  Series& operator-=(const Series& rhs);
  Series& operator*=(const Series& rhs);
  Series& operator*=(const Rational& scalar);

  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(Series a, const Series& b) { return a *= b; }
  friend Series operator*(Series a, const Rational& s) { return a *= s; }
  friend Series operator*(const Rational& s, Series a) { return a *= s; }
  friend Series operator-(Series a) { return a *= Rational(-1); }
  Series operator+(const Rational& c) const;
  Series operator-(const Rational& c) const;

  friend bool operator==(const Series&, const Series&) = default;

 private:
  std::vector<Rational> coeffs_;
};

// exp(f) for f[0] == 0, from (exp f)' = f' exp f. Throws InvalidInput otherwise.
Series exp(const Series& f);

// outer(inner(x)) for inner[0] == 0, by Horner's rule. Throws InvalidInput otherwise.
Series compose(const Series& outer, const Series& inner);

// Number of leading coefficients on which a and b agree (bounded by the
// smaller order + 1).
std::size_t agreement_order(const Series& a, const Series& b);

// Unknowns of one fixed-point system, by name.
struct SeriesSystem {
  std::size_t order = 0;
  std::map<std::string, Series, std::less<>> unknowns;

  const Series& at(std::string_view name) const;
  friend bool operator==(const SeriesSystem&, const SeriesSystem&) = default;
};

using SystemStep = std::function<SeriesSystem(const SeriesSystem&)>;

SeriesSystem zero_system(std::size_t order, const std::vector<std::string>& names);

// Iterates `step` from `start` until it returns its input. Every system here
// has an explicit factor x on each right-hand side, so one iteration fixes at
// least one more coefficient; max_iterations defaults to order + 2. Throws
// NonConvergence when the budget runs out.
SeriesSystem solve_fixed_point(SeriesSystem start, const SystemStep& step,
                               std::optional<std::size_t> max_iterations = std::nullopt);

inline constexpr std::size_t kDefaultSeriesOrder = 30;

// Rooted labeled trees: [x^n] = n^(n-1)/n!. Built from the closed coefficients
// and cross-checked against the fixed point of T = x exp(T).
Series series_T(std::size_t order = kDefaultSeriesOrder);

// Unrooted labeled trees: [x^n] = n^(n-2)/n!.
Series series_unrooted_trees(std::size_t order = kDefaultSeriesOrder);

// Color system at g = b = r = x, unknowns G, U, B, R, Q:
//   G = x e^U,  U = x e^(B+R) (e^G - 1),  B = x e^(B+R) (e^G - 1 - G),
//   R = x Q e^(B+R),  Q = x e^(B+R).
// Asserts B + R = U, G = Q, B + R + G = T and Q e^Q = T.
SeriesSystem color_system_step(const SeriesSystem& s);
SeriesSystem solve_color_system(std::size_t order = kDefaultSeriesOrder);

// Colored-tree generating function F(x, x, x) assembled from a solved color
// system:  -((B+R)^2 + Q^2)/2 - G U + x e^(B+R) (e^G - 1 - G) + x e^U + x Q e^(B+R).
Series colored_tree_series(const SeriesSystem& color_system);

// Sum_n N_c(n) x^n / n!, read off the solved color system (the rooted
// generating function of root color c).
Series series_F_color(Color color, std::size_t order = kDefaultSeriesOrder);

// Same series from the closed forms in the tree function:
//   F_B = T + T(-T) - T(-T)^2,  F_R = T(-T)^2,  F_G = -T(-T).
Series series_F_color_closed(Color color, std::size_t order = kDefaultSeriesOrder);

// Minimum vertex covers. u solves x u e^u = T(x^2 e^(2u)) (e^(x e^u) - 1);
// F_vc = (1 - u) x e^u - u T(x^2 e^(2u)) + u - u^2 / 2.
Series u_vc_step(const Series& u);
Series solve_u_vc(std::size_t order = kDefaultSeriesOrder);
Series series_F_vc(std::size_t order = kDefaultSeriesOrder);

// Maximum matchings. u solves u = x^2 exp(-x^2 e^(2u) + x e^u + 3u);
// F_m = -(x e^u + u)^2 / 2 + (1 + u x e^u) x e^u + u - u^2.
Series u_m_step(const Series& u);
Series solve_u_m(std::size_t order = kDefaultSeriesOrder);
Series series_F_m(std::size_t order = kDefaultSeriesOrder);

// Seven-unknown refinements that track how a cover or matching treats the
// root. Cover system unknowns: B, G, R+, R-, U, Q+, Q-. Matching system
// unknowns: G+, G-, B, R, U+, U-, Q.
SeriesSystem cover_system_step(const SeriesSystem& s);
SeriesSystem matching_system_step(const SeriesSystem& s);

struct RefinedSystems {
  SeriesSystem cover;
  SeriesSystem matching;
};

// Solves both systems and asserts their reductions: B + R+ = U, G = Q-,
// R+ = R- = T(x^2 e^(2U)) with U = u_vc for covers; B + R = U+ = u_m, Q = G-,
// G+ = u_m - x^2 e^(2 u_m) for matchings.
RefinedSystems solve_refined_systems(std::size_t order = kDefaultSeriesOrder);

// F_vc and F_m assembled from the seven-unknown systems.
Series cover_series_from_system(const SeriesSystem& cover);
Series matching_series_from_system(const SeriesSystem& matching);

}  // namespace backbone
