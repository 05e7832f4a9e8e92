#include "backbone/formulas.hpp"

#include <cmath>
#include <string>

#include "backbone/errors.hpp"

namespace backbone {

namespace {

// Every term (-l)^l w_l with w_l in {(2 - l)/l, (1 - l)/l, 1} is an integer,
// so each fraction is an integer sum over n^n.
BigInt closed_form_numerator(Color color, std::size_t n) {
  BigInt sum;
  for (unsigned long l = 1; l <= n; ++l) {
    const BigInt binom = binomial(n, l);
    const BigInt n_pow = power(n, n - l);
    // (-l)^l * w_l, with the 1/l absorbed into l^(l-1).
    BigInt term;
    switch (color) {
      case Color::Brown:
        term = power(l, l - 1) * (2 - static_cast<long>(l));
        break;
      case Color::Red:
        term = power(l, l - 1) * (1 - static_cast<long>(l));
        break;
      case Color::Green:
        term = power(l, l);
        break;
    }
    if (l % 2 == 1) term = -term;
    sum += term * binom * n_pow;
  }
  const BigInt n_n = power(n, n);
  switch (color) {
    case Color::Brown: return n_n + sum;
    case Color::Red: return -2 * sum;
    case Color::Green: return -sum;
  }
  return sum;
}

}  // namespace

Rational closed_form_fraction(Color color, std::size_t n) {
  if (n == 0) throw InvalidInput("closed forms need n >= 1");
  Rational out(closed_form_numerator(color, n), power(n, n));
  out.canonicalize();
  return out;
}

BigInt closed_form_color_total(Color color, std::size_t n) {
  const Rational total = closed_form_fraction(color, n) * Rational(power(n, n - 1));
  if (total.get_den() != 1 || total < 0) {
    throw InternalInconsistency("closed form for " + std::string(to_string(color)) +
                                " at n = " + std::to_string(n) +
                                " is not a non-negative integer: " + total.get_str());
  }
  return total.get_num();
}

double finite_size_fraction(Color color, std::size_t n) {
  return closed_form_fraction(color, n).get_d();
}

AsymptoticConstants asymptotic_constants(double tolerance) {
  if (!(tolerance > 0 && tolerance <= 1e-6)) {
    throw InvalidInput("tolerance must lie in (0, 1e-6]");
  }
  // h(t) = t + e^t is increasing with h(-1) < 0 < h(0).
  const auto h = [](double t) { return t + std::exp(t); };
  double lo = -1.0, hi = 0.0;
  while (hi - lo > tolerance) {
    const double mid = 0.5 * (lo + hi);
    (h(mid) < 0 ? lo : hi) = mid;
  }
  double t = 0.5 * (lo + hi);
  for (int i = 0; i < 8; ++i) {
    const double step = h(t) / (1 + std::exp(t));
    t -= step;
    if (std::abs(step) < 1e-17) break;
  }

  AsymptoticConstants c;
  c.t1 = t;
  c.t1p = t / (-(1 - t));
  c.green_frac = c.t1p;
  c.brown_frac = 1 + c.t1p + 2 * c.t1;
  c.red_frac = -2 * (c.t1p + c.t1);
  c.cover_frac = c.brown_frac + c.red_frac / 2;
  return c;
}

}  // namespace backbone
