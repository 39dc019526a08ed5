#include <doctest.h>

#include "digitblock/closed_form.hpp"
#include "digitblock/pi.hpp"
#include "digitblock/rivoal.hpp"

using namespace digitblock;

namespace {

BigReal rational_power(long num, long den, long e, long bits) {
  return pow(BigReal(Rational(num, den), bits), e);
}

// Integral of log2(t) / (8 t^2) from N to infinity.
double tail_integral(double n) { return (std::log2(n) + 1.0 / std::log(2.0)) / (8.0 * n); }

}  // namespace

TEST_CASE("rho and exponents") {
  CHECK(rho(0) == 1);
  CHECK(rho(1) == -1);
  CHECK(rho(2) == 0);
  CHECK(rho(3) == 0);
  CHECK(rho(13) == -1);
  // floor(log2(k) - 1) via bit length, exact at powers of two.
  CHECK(rivoal_original_exponent(4) == 2);
  CHECK(rivoal_original_exponent(8) == 4);
  CHECK(rivoal_original_exponent(9) == -4);
  CHECK(rivoal_original_exponent(1024) == 2 * 9);
  CHECK(rivoal_original_exponent(1023) == 0);
  CHECK(grouped_exponent(6, Base2Weight::DigitCount) == 6);
  CHECK(grouped_exponent(6, Base2Weight::ZeroMinusOne) == -2);
  CHECK(grouped_exponent(5, Base2Weight::AlternatingDigitCount) == -6);
  for (std::uint64_t k = 1; k < 5000; ++k) {
    REQUIRE(grouped_exponent(k, Base2Weight::DigitCount) == 2 * static_cast<long>(bit_length(k)));
  }
}

TEST_CASE("small partial products") {
  const long bits = 128;
  CHECK(rivoal_original_partial(3, bits) == BigReal(1, bits));
  CHECK(relative_gap(rivoal_grouped_partial(1, bits), rational_power(36, 35, 2, bits)) <=
        mul(BigReal(1, bits).ulp(), 8));
  CHECK(relative_gap(alternating_product_estimate(1, bits), rational_power(36, 35, -2, bits)) <=
        mul(BigReal(1, bits).ulp(), 8));
  const BigReal two_terms = rational_power(36, 35, -2, bits) * rational_power(100, 99, 4, bits);
  CHECK(relative_gap(alternating_product_estimate(2, bits), two_terms) <=
        mul(BigReal(1, bits).ulp(), 8));
}

TEST_CASE("grouping identity") {
  for (std::uint64_t blocks : {1u, 2u, 17u, 1000u}) {
    CHECK(rivoal_original_form(4 * blocks + 3) == rivoal_grouped_form(blocks));
  }
  CHECK(rivoal_original_form(4 * 10) != rivoal_grouped_form(10));
  const auto check = check_grouping(1000, 128);
  CHECK(check.exact_match);
  CHECK(check.primes > 100);
  CHECK(relative_gap(check.original_value, check.grouped_value).to_double() < 1e-35);
}

TEST_CASE("both forms approach 4/pi") {
  const long bits = 128;
  const BigReal four_over_pi = BigReal(4, bits) / machin_pi(bits);
  const BigReal grouped = rivoal_grouped_partial(100000, bits);
  const double gap = relative_gap(grouped, four_over_pi).to_double();
  CHECK(gap < 1e-3);
  // The grouped factors all exceed 1, so the gap is a one-sided tail.
  CHECK(grouped < four_over_pi);
  CHECK(gap < 1.05 * tail_integral(100000.0));
  CHECK(gap > 0.5 * tail_integral(100000.0));
  const BigReal original = rivoal_original_partial(400003, bits);
  CHECK(relative_gap(original, four_over_pi).to_double() < 1e-4);
}

TEST_CASE("companion closed form") {
  const long bits = 256;
  const GammaExpr companion = companion_closed_form();
  CHECK(companion.to_text() == "8 * G(3/4)^2 / (G(1/4)^2)");
  CHECK(companion == closed_form_base2(Word::parse("0", 2)) / closed_form_base2(Word::parse("1", 2)));
  const BigReal pi = machin_pi(bits + 32);
  BigReal g14(bits + 32);
  mpfr_gamma(g14.raw(), BigReal(Rational(1, 4), bits + 32).raw(), MPFR_RNDN);
  const BigReal expected = BigReal(16, bits + 32) * pi * pi / pow(g14, 4);
  CHECK(relative_gap(eval_gamma_expr(companion, bits), expected).to_double() < 1e-70);
}

TEST_CASE("alternating estimates form a Cauchy sequence") {
  const auto report = alternating_cauchy({1000, 10000, 100000}, 128);
  REQUIRE(report.estimates.size() == 3);
  REQUIRE(report.gaps.size() == 2);
  REQUIRE(report.shrink.size() == 1);
  CHECK(report.shrink[0] >= 5.0);
  CHECK(report.stable_digits >= 7);
  CHECK(relative_gap(report.estimates[2], alternating_product_estimate(100000, 128)).to_double() <
        1e-35);
}
