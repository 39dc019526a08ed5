#include "digitblock/gamma.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "digitblock/errors.hpp"

namespace digitblock {

namespace {

struct SpougeTable {
  long a = 0;
  long working_bits = 0;  // precision of the coefficients and of the sum
  std::vector<BigReal> coeffs;  // coeffs[0] = sqrt(2 pi), coeffs[k] = c_k
};

// Bits of cancellation in the alternating coefficient sum: log2 of the
// largest |c_k|, estimated in double precision.
long cancellation_bits(long a) {
  double worst = 0.0;
  for (long k = 1; k < a; ++k) {
    const double ak = static_cast<double>(a - k);
    const double log_ck = (static_cast<double>(k) - 0.5) * std::log(ak) + ak -
                          std::lgamma(static_cast<double>(k));
    worst = std::max(worst, log_ck / std::log(2.0));
  }
  return static_cast<long>(std::ceil(worst));
}

std::shared_ptr<const SpougeTable> build_table(long target_bits) {
  auto table = std::make_shared<SpougeTable>();
  table->a = spouge_parameter(target_bits);
  table->working_bits = target_bits + cancellation_bits(table->a) + 16;
  const long wp = table->working_bits;
  const long a = table->a;

  table->coeffs.reserve(static_cast<std::size_t>(a));
  table->coeffs.push_back(sqrt(mul(BigReal::pi(wp), 2)));

  // c_k = (-1)^(k-1) / (k-1)! * (a-k)^(k-1/2) * e^(a-k)
  BigReal factorial(1, wp);
  BigReal half(Rational(1, 2), wp);
  for (long k = 1; k < a; ++k) {
    if (k > 1) factorial = mul(factorial, k - 1);
    const BigReal base(a - k, wp);
    BigReal term = exp((BigReal(k, wp) - half) * log(base) + BigReal(a - k, wp)) / factorial;
    if ((k - 1) % 2 == 1) term = -term;
    table->coeffs.push_back(std::move(term));
  }
  return table;
}

std::shared_ptr<const SpougeTable> table_for(long target_bits) {
  static std::mutex mutex;
  static std::map<long, std::shared_ptr<const SpougeTable>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[target_bits];
  if (!slot) slot = build_table(target_bits);
  return slot;
}

// log Gamma(z + 1) for z >= 0, computed at the table's working precision.
BigReal log_gamma_shifted(const BigReal& z, const SpougeTable& t) {
  const long wp = t.working_bits;
  const BigReal zw = z.rounded(wp);
  BigReal sum = t.coeffs[0];
  for (long k = 1; k < t.a; ++k) {
    sum += t.coeffs[static_cast<std::size_t>(k)] / (zw + BigReal(k, wp));
  }
  const BigReal za = zw + BigReal(t.a, wp);
  return (zw + BigReal(Rational(1, 2), wp)) * log(za) - za + log(sum);
}

void require_precision(long bits) {
  if (bits < kMinPrecisionBits) {
    throw std::invalid_argument("precision must be >= " + std::to_string(kMinPrecisionBits) +
                                " bits");
  }
}

BigReal log_gamma_positive(const BigReal& x, long precision_bits) {
  const long internal = precision_bits + kGuardBits;
  const auto table = table_for(internal);
  const long wp = table->working_bits;
  const BigReal xw = x.rounded(wp);
  const BigReal one(1, wp);
  BigReal result(wp);
  if (xw >= one) {
    result = log_gamma_shifted(xw - one, *table);
  } else {
    result = log_gamma_shifted(xw, *table) - log(xw);
  }
  return result.rounded(internal);
}

}  // namespace

long spouge_parameter(long working_bits) {
  // Relative error of Spouge's formula is below a^(-1/2) (2 pi)^-(a + 1/2).
  const double needed = static_cast<double>(working_bits) * std::log(2.0) / std::log(2.0 * M_PI);
  return static_cast<long>(std::ceil(needed)) + 2;
}

BigReal log_gamma(const Rational& x, long precision_bits) {
  require_precision(precision_bits);
  if (x.is_nonpositive_integer()) {
    throw PoleError("Gamma has a pole at " + x.to_string());
  }
  if (x.sign() < 0) {
    throw std::domain_error("Gamma is only supported for positive arguments, got " +
                            x.to_string());
  }
  const long wp = table_for(precision_bits + kGuardBits)->working_bits;
  return log_gamma_positive(BigReal(x, wp), precision_bits).rounded(precision_bits);
}

BigReal log_gamma(const BigReal& x, long precision_bits) {
  require_precision(precision_bits);
  if (!x.is_finite()) throw std::domain_error("Gamma of a non-finite value");
  if (x.sign() <= 0) {
    BigReal whole(x.precision());
    mpfr_rint(whole.raw(), x.raw(), MPFR_RNDN);
    if (whole == x) throw PoleError("Gamma has a pole at " + x.to_string(20));
    throw std::domain_error("Gamma is only supported for positive arguments");
  }
  return log_gamma_positive(x, precision_bits).rounded(precision_bits);
}

BigReal gamma(const Rational& x, long precision_bits) {
  const BigReal lg = log_gamma(x, precision_bits + kGuardBits);
  return exp(lg).rounded(precision_bits);
}

BigReal gamma(const BigReal& x, long precision_bits) {
  const BigReal lg = log_gamma(x, precision_bits + kGuardBits);
  return exp(lg).rounded(precision_bits);
}

}  // namespace digitblock
