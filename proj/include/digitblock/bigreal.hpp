#pragma once

// Arbitrary-precision binary floating point carrying its own precision.
// Thin value-semantic wrapper over an MPFR variable; every operation rounds to
// nearest, so identical inputs at identical precision give identical bits.

#include <compare>
#include <string>
#include <string_view>

#include <gmpxx.h>
#include <mpfr.h>

#include "digitblock/rational.hpp"

namespace digitblock {

inline constexpr long kMinPrecisionBits = 64;

// Extra bits carried by internal accumulations before rounding to target.
inline constexpr long kGuardBits = 32;

class BigReal {
 public:
  explicit BigReal(long bits = 128);
  BigReal(long value, long bits);
  BigReal(const Rational& value, long bits);
  BigReal(const mpz_class& value, long bits);
  // Decimal or scientific literal ("1.25", "-3e-7", "inf" is rejected).
  static BigReal parse(std::string_view text, long bits);
  static BigReal pi(long bits);

  BigReal(const BigReal& other);
  BigReal(BigReal&& other) noexcept;
  BigReal& operator=(const BigReal& other);
  BigReal& operator=(BigReal&& other) noexcept;
  ~BigReal();

  long precision() const { return static_cast<long>(mpfr_get_prec(value_)); }
  BigReal rounded(long bits) const;

  mpfr_ptr raw() { return value_; }
  mpfr_srcptr raw() const { return value_; }

  int sign() const { return mpfr_sgn(value_); }
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  // Binary exponent e with 0.5 <= |x| / 2^e < 1; undefined for zero.
  long exponent() const { return static_cast<long>(mpfr_get_exp(value_)); }
  // Weight of the last mantissa bit at this value's precision.
  BigReal ulp() const;

  // Scientific notation with the given number of significant digits.
  std::string to_string(int significant_digits) const;
  // ceil(precision * log10(2)) - 2 significant digits.
  std::string to_string() const;
  static int printable_digits(long bits);

  BigReal& operator+=(const BigReal& o);
  BigReal& operator-=(const BigReal& o);
  BigReal& operator*=(const BigReal& o);
  BigReal& operator/=(const BigReal& o);

  friend BigReal operator+(const BigReal& a, const BigReal& b);
  friend BigReal operator-(const BigReal& a, const BigReal& b);
  friend BigReal operator*(const BigReal& a, const BigReal& b);
  friend BigReal operator/(const BigReal& a, const BigReal& b);
  friend BigReal operator-(const BigReal& a);

  friend bool operator==(const BigReal& a, const BigReal& b) {
    return mpfr_equal_p(a.value_, b.value_) != 0;
  }
  friend std::partial_ordering operator<=>(const BigReal& a, const BigReal& b);

 private:
  mpfr_t value_;
};

BigReal abs(const BigReal& x);
BigReal log(const BigReal& x);
BigReal log1p(const BigReal& x);
BigReal exp(const BigReal& x);
BigReal sqrt(const BigReal& x);
BigReal sin(const BigReal& x);
BigReal pow(const BigReal& x, long n);
BigReal mul(const BigReal& x, long n);

// |a/b - 1|, at the larger precision.
BigReal relative_gap(const BigReal& a, const BigReal& b);

}  // namespace digitblock
