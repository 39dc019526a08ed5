#include "digitblock/bigreal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace digitblock {

namespace {

mpfr_prec_t checked(long bits) {
  if (bits < kMinPrecisionBits) {
    throw std::invalid_argument("precision must be >= " + std::to_string(kMinPrecisionBits) +
                                " bits, got " + std::to_string(bits));
  }
  if (bits > MPFR_PREC_MAX) throw std::invalid_argument("precision too large");
  return static_cast<mpfr_prec_t>(bits);
}

long wider(const BigReal& a, const BigReal& b) { return std::max(a.precision(), b.precision()); }

}  // namespace

BigReal::BigReal(long bits) {
  mpfr_init2(value_, checked(bits));
  mpfr_set_zero(value_, 1);
}

BigReal::BigReal(long value, long bits) {
  mpfr_init2(value_, checked(bits));
  mpfr_set_si(value_, value, MPFR_RNDN);
}

BigReal::BigReal(const Rational& value, long bits) {
  mpfr_init2(value_, checked(bits));
  mpfr_set_q(value_, value.get().get_mpq_t(), MPFR_RNDN);
}

BigReal::BigReal(const mpz_class& value, long bits) {
  mpfr_init2(value_, checked(bits));
  mpfr_set_z(value_, value.get_mpz_t(), MPFR_RNDN);
}

BigReal BigReal::parse(std::string_view text, long bits) {
  BigReal out(bits);
  const std::string s(text);
  char* end = nullptr;
  if (!s.empty()) mpfr_strtofr(out.value_, s.c_str(), &end, 10, MPFR_RNDN);
  if (s.empty() || end != s.c_str() + s.size()) {
    throw std::invalid_argument("malformed real '" + s + "'");
  }
  if (!out.is_finite()) throw std::invalid_argument("non-finite real '" + s + "'");
  return out;
}

BigReal BigReal::pi(long bits) {
  BigReal out(bits);
  mpfr_const_pi(out.value_, MPFR_RNDN);
  return out;
}

BigReal::BigReal(const BigReal& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& other) noexcept {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_swap(value_, other.value_);
}

BigReal& BigReal::operator=(const BigReal& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigReal& BigReal::operator=(BigReal&& other) noexcept {
  if (this != &other) mpfr_swap(value_, other.value_);
  return *this;
}

BigReal::~BigReal() { mpfr_clear(value_); }

BigReal BigReal::rounded(long bits) const {
  BigReal out(bits);
  mpfr_set(out.value_, value_, MPFR_RNDN);
  return out;
}

BigReal BigReal::ulp() const {
  BigReal out(precision());
  if (is_zero()) {
    mpfr_set_ui_2exp(out.value_, 1, mpfr_get_emin(), MPFR_RNDN);
  } else {
    mpfr_set_ui_2exp(out.value_, 1, mpfr_get_exp(value_) - mpfr_get_prec(value_), MPFR_RNDN);
  }
  return out;
}

int BigReal::printable_digits(long bits) {
  return std::max(1, static_cast<int>(std::ceil(static_cast<double>(bits) * std::log10(2.0))) - 2);
}

std::string BigReal::to_string(int significant_digits) const {
  if (significant_digits < 1) significant_digits = 1;
  const int size = mpfr_snprintf(nullptr, 0, "%.*Re", significant_digits - 1, value_);
  std::vector<char> buf(static_cast<std::size_t>(size) + 1);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Re", significant_digits - 1, value_);
  return std::string(buf.data(), static_cast<std::size_t>(size));
}

std::string BigReal::to_string() const { return to_string(printable_digits(precision())); }

BigReal& BigReal::operator+=(const BigReal& o) { return *this = *this + o; }
BigReal& BigReal::operator-=(const BigReal& o) { return *this = *this - o; }
BigReal& BigReal::operator*=(const BigReal& o) { return *this = *this * o; }
BigReal& BigReal::operator/=(const BigReal& o) { return *this = *this / o; }

BigReal operator+(const BigReal& a, const BigReal& b) {
  BigReal out(wider(a, b));
  mpfr_add(out.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return out;
}

BigReal operator-(const BigReal& a, const BigReal& b) {
  BigReal out(wider(a, b));
  mpfr_sub(out.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return out;
}

BigReal operator*(const BigReal& a, const BigReal& b) {
  BigReal out(wider(a, b));
  mpfr_mul(out.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return out;
}

BigReal operator/(const BigReal& a, const BigReal& b) {
  if (b.is_zero()) throw std::domain_error("BigReal division by zero");
  BigReal out(wider(a, b));
  mpfr_div(out.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return out;
}

BigReal operator-(const BigReal& a) {
  BigReal out(a.precision());
  mpfr_neg(out.raw(), a.raw(), MPFR_RNDN);
  return out;
}

std::partial_ordering operator<=>(const BigReal& a, const BigReal& b) {
  if (mpfr_unordered_p(a.raw(), b.raw())) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.raw(), b.raw());
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

BigReal abs(const BigReal& x) {
  BigReal out(x.precision());
  mpfr_abs(out.raw(), x.raw(), MPFR_RNDN);
  return out;
}

BigReal log(const BigReal& x) {
  if (x.sign() <= 0) throw std::domain_error("log of a non-positive value");
  BigReal out(x.precision());
  mpfr_log(out.raw(), x.raw(), MPFR_RNDN);
  return out;
}

BigReal log1p(const BigReal& x) {
  BigReal out(x.precision());
  mpfr_log1p(out.raw(), x.raw(), MPFR_RNDN);
  if (!out.is_finite()) throw std::domain_error("log1p argument <= -1");
  return out;
}

BigReal exp(const BigReal& x) {
  BigReal out(x.precision());
  mpfr_exp(out.raw(), x.raw(), MPFR_RNDN);
  return out;
}

BigReal sqrt(const BigReal& x) {
  if (x.sign() < 0) throw std::domain_error("sqrt of a negative value");
  BigReal out(x.precision());
  mpfr_sqrt(out.raw(), x.raw(), MPFR_RNDN);
  return out;
}

BigReal sin(const BigReal& x) {
  BigReal out(x.precision());
  mpfr_sin(out.raw(), x.raw(), MPFR_RNDN);
  return out;
}

BigReal pow(const BigReal& x, long n) {
  BigReal out(x.precision());
  mpfr_pow_si(out.raw(), x.raw(), n, MPFR_RNDN);
  return out;
}

BigReal mul(const BigReal& x, long n) {
  BigReal out(x.precision());
  mpfr_mul_si(out.raw(), x.raw(), n, MPFR_RNDN);
  return out;
}

BigReal relative_gap(const BigReal& a, const BigReal& b) {
  return abs(a / b - BigReal(1, wider(a, b)));
}

}  // namespace digitblock
