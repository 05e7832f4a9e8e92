#include "backbone/series.hpp"

#include <string>

#include "backbone/errors.hpp"

namespace backbone {

Series::Series(std::size_t order, const std::vector<Rational>& coeffs) : coeffs_(order + 1) {
  for (std::size_t k = 0; k <= order && k < coeffs.size(); ++k) coeffs_[k] = coeffs[k];
}

Series Series::constant(const Rational& c, std::size_t order) {
  Series s(order);
  s.coeffs_[0] = c;
  return s;
}

Series Series::variable(std::size_t order) {
  Series s(order);
  if (order >= 1) s.coeffs_[1] = 1;
  return s;
}

bool Series::is_zero() const { return !valuation().has_value(); }

std::optional<std::size_t> Series::valuation() const {
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] != 0) return k;
  }
  return std::nullopt;
}

BigInt Series::egf_count(std::size_t k) const {
  const Rational scaled = Rational(factorial(k)) * coeffs_.at(k);
  if (scaled.get_den() != 1) {
    throw InternalInconsistency("k! [x^k] is not an integer at k = " + std::to_string(k) + ": " +
                                scaled.get_str());
  }
  return scaled.get_num();
}

Series Series::truncated(std::size_t order) const {
  if (order >= this->order()) return *this;
  return Series(order, coeffs_);
}

Series Series::extended(std::size_t order) const { return Series(order, coeffs_); }

Series Series::divided_by_x() const {
  if (coeffs_[0] != 0) throw InvalidInput("divided_by_x needs a zero constant term");
  if (order() == 0) return Series(0);
  Series out(order() - 1);
  for (std::size_t k = 1; k <= order(); ++k) out.coeffs_[k - 1] = coeffs_[k];
  return out;
}

Series Series::derivative() const {
  if (order() == 0) return Series(0);
  Series out(order() - 1);
  for (std::size_t k = 1; k <= order(); ++k) out.coeffs_[k - 1] = coeffs_[k] * static_cast<unsigned long>(k);
  return out;
}

Series& Series::operator+=(const Series& rhs) {
  if (rhs.order() < order()) coeffs_.resize(rhs.order() + 1);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  return *this;
}

Series& Series::operator-=(const Series& rhs) {
  if (rhs.order() < order()) coeffs_.resize(rhs.order() + 1);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  return *this;
}

Series& Series::operator*=(const Series& rhs) {
  const std::size_t n = std::min(order(), rhs.order());
  std::vector<Rational> out(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; i + j <= n; ++j) {
      if (rhs.coeffs_[j] != 0) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  coeffs_ = std::move(out);
  return *this;
}

Series& Series::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

Series Series::operator+(const Rational& c) const {
  Series out = *this;
  out.coeffs_[0] += c;
  return out;
}

Series Series::operator-(const Rational& c) const {
  Series out = *this;
  out.coeffs_[0] -= c;
  return out;
}

Series exp(const Series& f) {
  if (f[0] != 0) throw InvalidInput("exp needs a zero constant term");
  const std::size_t n = f.order();
  Series e(n);
  e[0] = 1;
  for (std::size_t m = 1; m <= n; ++m) {
    Rational acc;
    for (std::size_t k = 1; k <= m; ++k) {
      if (f[k] != 0) acc += f[k] * e[m - k] * static_cast<unsigned long>(k);
    }
    e[m] = acc / static_cast<unsigned long>(m);
  }
  return e;
}

Series compose(const Series& outer, const Series& inner) {
  if (inner[0] != 0) throw InvalidInput("compose needs an inner series with zero constant term");
  const std::size_t n = std::min(outer.order(), inner.order());
  Series result = Series::constant(outer[n], n);
  for (std::size_t k = n; k-- > 0;) {
    result *= inner;
    result[0] += outer[k];
  }
  return result;
}

std::size_t agreement_order(const Series& a, const Series& b) {
  const std::size_t n = std::min(a.order(), b.order());
  for (std::size_t k = 0; k <= n; ++k) {
    if (a[k] != b[k]) return k;
  }
  return n + 1;
}

const Series& SeriesSystem::at(std::string_view name) const {
  const auto it = unknowns.find(name);
  if (it == unknowns.end()) throw InvalidInput("no unknown named " + std::string(name));
  return it->second;
}

SeriesSystem zero_system(std::size_t order, const std::vector<std::string>& names) {
  SeriesSystem s;
  s.order = order;
  for (const auto& name : names) s.unknowns.emplace(name, Series(order));
  return s;
}

SeriesSystem solve_fixed_point(SeriesSystem start, const SystemStep& step,
                               std::optional<std::size_t> max_iterations) {
  const std::size_t budget = max_iterations.value_or(start.order + 2);
  for (std::size_t i = 0; i <= budget; ++i) {
    SeriesSystem next = step(start);
    if (next == start) return start;
    start = std::move(next);
  }
  throw NonConvergence("fixed point not reached within " + std::to_string(budget) + " iterations");
}

namespace {

Series tree_function(std::size_t order) {
  Series t(order);
  for (std::size_t k = 1; k <= order; ++k) {
    t[k] = Rational(power(k, k - 1), factorial(k));
    t[k].canonicalize();
  }
  return t;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw InternalInconsistency(what);
}

void require_equal(const Series& a, const Series& b, const std::string& what) {
  const std::size_t n = std::min(a.order(), b.order());
  const std::size_t agree = agreement_order(a, b);
  if (agree <= n) {
    throw InternalInconsistency(what + " fails at x^" + std::to_string(agree));
  }
}

const Rational kHalf(1, 2);

}  // namespace

Series series_T(std::size_t order) {
  const Series direct = tree_function(order);
  const Series x = Series::variable(order);
  const auto fixed = solve_fixed_point(zero_system(order, {"T"}), [&](const SeriesSystem& s) {
    SeriesSystem next = s;
    next.unknowns["T"] = x * exp(s.at("T"));
    return next;
  });
  require_equal(direct, fixed.at("T"), "T = x exp(T)");
  return direct;
}

Series series_unrooted_trees(std::size_t order) {
  Series f(order);
  for (std::size_t k = 1; k <= order; ++k) {
    f[k] = k == 1 ? Rational(1) : Rational(power(k, k - 2), factorial(k));
    f[k].canonicalize();
  }
  return f;
}

SeriesSystem color_system_step(const SeriesSystem& s) {
  const Series x = Series::variable(s.order);
  const Series& G = s.at("G");
  const Series& U = s.at("U");
  const Series& B = s.at("B");
  const Series& R = s.at("R");
  const Series& Q = s.at("Q");
  const Series e_s = exp(B + R);
  const Series e_g = exp(G);
  const Series x_e_s = x * e_s;

  SeriesSystem next;
  next.order = s.order;
  next.unknowns["G"] = x * exp(U);
  next.unknowns["U"] = x_e_s * (e_g - 1);
  next.unknowns["B"] = x_e_s * (e_g - 1 - G);
  next.unknowns["R"] = x_e_s * Q;
  next.unknowns["Q"] = x_e_s;
  return next;
}

SeriesSystem solve_color_system(std::size_t order) {
  if (order < 1) throw InvalidInput("series order must be at least 1");
  SeriesSystem s = solve_fixed_point(zero_system(order, {"G", "U", "B", "R", "Q"}), color_system_step);

  const Series T = tree_function(order);
  const Series S = s.at("B") + s.at("R");
  require_equal(S, s.at("U"), "B + R = U");
  require_equal(s.at("G"), s.at("Q"), "G = Q");
  require_equal(S + s.at("G"), T, "B + R + G = T");
  require_equal(s.at("Q") * exp(s.at("Q")), T, "Q exp(Q) = T");
  return s;
}

Series colored_tree_series(const SeriesSystem& s) {
  const Series x = Series::variable(s.order);
  const Series& G = s.at("G");
  const Series& U = s.at("U");
  const Series& Q = s.at("Q");
  const Series S = s.at("B") + s.at("R");
  const Series e_s = exp(S);
  return -kHalf * (S * S + Q * Q) - G * U + x * e_s * (exp(G) - 1 - G) + x * exp(U) +
         x * Q * e_s;
}

Series series_F_color(Color color, std::size_t order) {
  const SeriesSystem s = solve_color_system(order);
  switch (color) {
    case Color::Brown: return s.at("B");
    case Color::Red: return s.at("R");
    case Color::Green: return s.at("G");
  }
  throw InvalidInput("unknown color");
}

Series series_F_color_closed(Color color, std::size_t order) {
  const Series T = series_T(order);
  const Series t_minus_t = compose(T, -T);
  switch (color) {
    case Color::Brown: return T + t_minus_t - t_minus_t * t_minus_t;
    case Color::Red: return t_minus_t * t_minus_t;
    case Color::Green: return -t_minus_t;
  }
  throw InvalidInput("unknown color");
}

Series u_vc_step(const Series& u) {
  // u = T(x^2 e^(2u)) (e^(x e^u) - 1) e^(-u) / x, evaluated one order higher
  // so that the division by x still yields u.order() coefficients.
  const std::size_t work = u.order() + 1;
  const Series uw = u.extended(work);
  const Series x = Series::variable(work);
  const Series inner = x * x * exp(uw * Rational(2));
  const Series rhs = compose(tree_function(work), inner) * (exp(x * exp(uw)) - 1) * exp(-uw);
  return rhs.divided_by_x();
}

Series solve_u_vc(std::size_t order) {
  if (order < 1) throw InvalidInput("series order must be at least 1");
  const auto s = solve_fixed_point(zero_system(order, {"U"}), [](const SeriesSystem& in) {
    SeriesSystem next = in;
    next.unknowns["U"] = u_vc_step(in.at("U"));
    return next;
  });
  const Series& u = s.at("U");
  const Series x = Series::variable(order);
  require_equal(x * u * exp(u),
                compose(tree_function(order), x * x * exp(u * Rational(2))) * (exp(x * exp(u)) - 1),
                "x U e^U = T(x^2 e^(2U)) (e^(x e^U) - 1)");
  return u;
}

Series series_F_vc(std::size_t order) {
  const Series u = solve_u_vc(order);
  const Series x = Series::variable(order);
  const Series x_e_u = x * exp(u);
  const Series r = compose(tree_function(order), x * x * exp(u * Rational(2)));
  return (Series::constant(1, order) - u) * x_e_u - u * r + u - kHalf * u * u;
}

Series u_m_step(const Series& u) {
  const Series x = Series::variable(u.order());
  const Series x_e_u = x * exp(u);
  return x * x * exp(-(x * x_e_u * exp(u)) + x_e_u + u * Rational(3));
}

Series solve_u_m(std::size_t order) {
  if (order < 1) throw InvalidInput("series order must be at least 1");
  const auto s = solve_fixed_point(zero_system(order, {"U"}), [](const SeriesSystem& in) {
    SeriesSystem next = in;
    next.unknowns["U"] = u_m_step(in.at("U"));
    return next;
  });
  return s.at("U");
}

Series series_F_m(std::size_t order) {
  const Series u = solve_u_m(order);
  const Series x = Series::variable(order);
  const Series x_e_u = x * exp(u);
  const Series sum = x_e_u + u;
  return -kHalf * sum * sum + (u * x_e_u + 1) * x_e_u + u - u * u;
}

SeriesSystem cover_system_step(const SeriesSystem& s) {
  const Series x = Series::variable(s.order);
  const Series& B = s.at("B");
  const Series& G = s.at("G");
  const Series& Rp = s.at("R+");
  const Series& Rm = s.at("R-");
  const Series& U = s.at("U");
  const Series& Qp = s.at("Q+");
  const Series& Qm = s.at("Q-");
  const Series x_e_all = x * exp(B + Rp + Rm);
  const Series x_e_plus = x * exp(B + Rp);
  const Series e_g = exp(G);

  SeriesSystem next;
  next.order = s.order;
  next.unknowns["B"] = x_e_all * (e_g - 1 - G);
  next.unknowns["G"] = x * exp(U);
  next.unknowns["R+"] = x_e_all * Qm;
  next.unknowns["R-"] = x_e_plus * Qp;
  next.unknowns["U"] = x_e_all * (e_g - 1);
  next.unknowns["Q+"] = x_e_all;
  next.unknowns["Q-"] = x_e_plus;
  return next;
}

SeriesSystem matching_system_step(const SeriesSystem& s) {
  const Series x = Series::variable(s.order);
  const Series& Gp = s.at("G+");
  const Series& Gm = s.at("G-");
  const Series& B = s.at("B");
  const Series& R = s.at("R");
  const Series& Up = s.at("U+");
  const Series& Um = s.at("U-");
  const Series& Q = s.at("Q");
  const Series e_gg = exp(Gp + Gm);
  const Series x_e_br = x * exp(B + R);
  const Series x_e_up = x * exp(Up);

  SeriesSystem next;
  next.order = s.order;
  next.unknowns["G+"] = x_e_up * Um;
  next.unknowns["G-"] = x_e_up;
  next.unknowns["B"] = x_e_br * Gm * (e_gg - 1);
  next.unknowns["R"] = x_e_br * Q;
  next.unknowns["U+"] = x_e_br * Gm * e_gg;
  next.unknowns["U-"] = x_e_br * (e_gg - 1);
  next.unknowns["Q"] = x_e_br;
  return next;
}

Series cover_series_from_system(const SeriesSystem& s) {
  const Series x = Series::variable(s.order);
  const Series& B = s.at("B");
  const Series& G = s.at("G");
  const Series& Rp = s.at("R+");
  const Series& Rm = s.at("R-");
  const Series& U = s.at("U");
  const Series& Qp = s.at("Q+");
  const Series& Qm = s.at("Q-");
  const Series x_e_all = x * exp(B + Rp + Rm);
  return x * exp(U) + x_e_all * (exp(G) - 1 - G) + x_e_all * Qm + x * exp(B + Rp) * Qp - G * U -
         kHalf * (B * B + Rp * Rp) - Rp * Rm - B * (Rp + Rm) - Qp * Qm;
}

Series matching_series_from_system(const SeriesSystem& s) {
  const Series x = Series::variable(s.order);
  const Series& Gp = s.at("G+");
  const Series& Gm = s.at("G-");
  const Series& B = s.at("B");
  const Series& R = s.at("R");
  const Series& Up = s.at("U+");
  const Series& Um = s.at("U-");
  const Series& Q = s.at("Q");
  const Series x_e_up = x * exp(Up);
  const Series x_e_br = x * exp(B + R);
  const Series br = B + R;
  return x_e_up * Um + x_e_up + x_e_br * Gm * (exp(Gp + Gm) - 1) + x_e_br * Q - Gp * Up -
         Gm * (Up + Um) - kHalf * br * br - kHalf * Q * Q;
}

RefinedSystems solve_refined_systems(std::size_t order) {
  if (order < 1) throw InvalidInput("series order must be at least 1");
  RefinedSystems out;
  out.cover = solve_fixed_point(zero_system(order, {"B", "G", "R+", "R-", "U", "Q+", "Q-"}),
                                cover_system_step);
  out.matching = solve_fixed_point(zero_system(order, {"G+", "G-", "B", "R", "U+", "U-", "Q"}),
                                   matching_system_step);

  const Series x = Series::variable(order);
  const SeriesSystem& c = out.cover;
  const Series u_vc = solve_u_vc(order);
  require_equal(c.at("B") + c.at("R+"), c.at("U"), "cover system: B + R+ = U");
  require_equal(c.at("U"), u_vc, "cover system: U solves the vertex-cover equation");
  require_equal(c.at("G"), c.at("Q-"), "cover system: G = Q-");
  require_equal(c.at("R+"), c.at("R-"), "cover system: R+ = R-");
  require_equal(c.at("R+"), compose(tree_function(order), x * x * exp(u_vc * Rational(2))),
                "cover system: R = T(x^2 e^(2U))");

  const SeriesSystem& m = out.matching;
  const Series u_m = solve_u_m(order);
  require_equal(m.at("B") + m.at("R"), m.at("U+"), "matching system: B + R = U+");
  require_equal(m.at("U+"), u_m, "matching system: U+ solves the matching equation");
  require_equal(m.at("Q"), m.at("G-"), "matching system: Q = G-");
  require_equal(m.at("G+"), u_m - x * x * exp(u_m * Rational(2)),
                "matching system: G+ = U - x^2 e^(2U)");
  require(out.cover.order == order && out.matching.order == order, "refined system order");
  return out;
}

}  // namespace backbone
