#pragma once

#include <cstddef>

#include "backbone/bcoloring.hpp"
#include "backbone/numeric.hpp"

namespace backbone {

// Exact fraction N_c(n) / n^(n-1) from the finite binomial sums
//   brown: 1 + sum_{l=1..n} (-l/n)^l (2/l - 1) C(n,l)
//   red:   -2 sum_{l=1..n} (-l/n)^l (1/l - 1) C(n,l)
//   green: -sum_{l=1..n} (-l/n)^l C(n,l)
Rational closed_form_fraction(Color color, std::size_t n);

// N_c(n), the total number of vertices of color c over all labeled trees on n
// vertices. Throws InternalInconsistency if the sum does not produce a
// non-negative integer.
BigInt closed_form_color_total(Color color, std::size_t n);

double finite_size_fraction(Color color, std::size_t n);

struct AsymptoticConstants {
  double t1 = 0;   // T(-1), the root of t = -e^t
  double t1p = 0;  // T'(-1) = t1 / (-(1 - t1))
  double brown_frac = 0;  // 1 + T'(-1) + 2 T(-1)
  double red_frac = 0;    // -2 (T'(-1) + T(-1))
  double green_frac = 0;  // T'(-1)
  double cover_frac = 0;  // brown + red / 2
};

// tolerance must lie in (0, 1e-6]; it bounds the bracket width of the root
// search before Newton polishing.
AsymptoticConstants asymptotic_constants(double tolerance = 1e-12);

}  // namespace backbone
