#include "backbone/numeric.hpp"

namespace backbone {

BigInt factorial(unsigned long k) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), k);
  return out;
}

BigInt power(unsigned long base, unsigned long exponent) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, exponent);
  return out;
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

}  // namespace backbone
