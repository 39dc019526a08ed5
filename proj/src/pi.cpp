#include "digitblock/pi.hpp"

#include <gmpxx.h>

namespace digitblock {

namespace {

// atan(1/x) * 2^scale_bits, truncated; each term loses under one unit.
mpz_class arctan_inverse(unsigned long x, long scale_bits) {
  mpz_class power = mpz_class(1) << static_cast<mp_bitcnt_t>(scale_bits);
  power /= x;  // 2^s / x^(2k+1)
  const unsigned long x2 = x * x;
  mpz_class sum = power;
  for (unsigned long k = 1; power != 0; ++k) {
    power /= x2;
    mpz_class term = power / (2 * k + 1);
    if (k % 2 == 1) {
      sum -= term;
    } else {
      sum += term;
    }
  }
  return sum;
}

}  // namespace

BigReal machin_pi(long precision_bits) {
  const long scale = precision_bits + kGuardBits;
  const mpz_class fixed = 16 * arctan_inverse(5, scale) - 4 * arctan_inverse(239, scale);
  BigReal out(fixed, scale);
  mpfr_div_2si(out.raw(), out.raw(), scale, MPFR_RNDN);
  return out.rounded(precision_bits);
}

}  // namespace digitblock
