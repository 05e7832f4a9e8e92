#pragma once

#include <string>

#include <gmpxx.h>

namespace backbone {

using BigInt = mpz_class;
using Rational = mpq_class;

inline std::string to_decimal(const BigInt& value) { return value.get_str(10); }

// "numerator/denominator" in lowest terms; integers print without a denominator.
inline std::string to_fraction_string(const Rational& value) { return value.get_str(10); }

BigInt factorial(unsigned long k);
BigInt power(unsigned long base, unsigned long exponent);
BigInt binomial(unsigned long n, unsigned long k);

}  // namespace backbone
