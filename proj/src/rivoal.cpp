#include "digitblock/rivoal.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "digitblock/word.hpp"

namespace digitblock {

namespace {

const Word& zero_digit() {
  static const Word w = Word::parse("0", 2);
  return w;
}

const Word& one_digit() {
  static const Word w = Word::parse("1", 2);
  return w;
}

void add_factorization(ExponentForm& form, std::uint64_t n, std::int64_t exponent) {
  if (exponent == 0) return;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    while (n % p == 0) {
      form[p] += exponent;
      n /= p;
    }
  }
  if (n > 1) form[n] += exponent;
}

void drop_zeros(ExponentForm& form) {
  std::erase_if(form, [](const auto& entry) { return entry.second == 0; });
}

BigReal exp_of_sum(const BigReal& log_sum, long precision_bits) {
  return exp(log_sum).rounded(precision_bits);
}

}  // namespace

int rho(std::uint64_t k) {
  switch (k % 4) {
    case 0:
      return 1;
    case 1:
      return -1;
    default:
      return 0;
  }
}

unsigned bit_length(std::uint64_t k) { return static_cast<unsigned>(std::bit_width(k)); }

long rivoal_original_exponent(std::uint64_t k) {
  if (k < 2) throw std::invalid_argument("original product starts at k = 2");
  // floor(log2(k) - 1) = bit_length(k) - 2 exactly, including at powers of 2.
  return 2L * rho(k) * (static_cast<long>(bit_length(k)) - 2);
}

long grouped_exponent(std::uint64_t k, Base2Weight weight) {
  const auto zeros = static_cast<long>(count_block(zero_digit(), k));
  const auto ones = static_cast<long>(count_block(one_digit(), k));
  switch (weight) {
    case Base2Weight::DigitCount:
      return 2 * (zeros + ones);
    case Base2Weight::ZeroMinusOne:
      return 2 * (zeros - ones);
    case Base2Weight::AlternatingDigitCount:
      return (k % 2 == 0 ? 2 : -2) * (zeros + ones);
  }
  return 0;
}

TermFn grouped_term(Base2Weight weight) {
  return [weight](std::uint64_t k, TermRatio& out) {
    out.weight = grouped_exponent(k, weight);
    if (out.weight == 0) return;
    const unsigned long four_k = 4UL * k;
    out.num = four_k + 2;
    out.num *= out.num;
    out.den = four_k + 1;
    out.den *= four_k + 3;
  };
}

TermFn original_term() {
  return [](std::uint64_t k, TermRatio& out) {
    out.weight = rivoal_original_exponent(k);
    if (out.weight == 0) return;
    out.num = static_cast<unsigned long>(k + 2);
    out.den = static_cast<unsigned long>(k + 1);
  };
}

BigReal rivoal_original_partial(std::uint64_t last_k, long precision_bits, Execution mode) {
  if (last_k < 2) throw std::invalid_argument("original product needs last_k >= 2");
  return exp_of_sum(log_sum(original_term(), 2, last_k, precision_bits + kGuardBits, mode),
                    precision_bits);
}

BigReal rivoal_grouped_partial(std::uint64_t last_k, long precision_bits, Execution mode) {
  if (last_k < 1) throw std::invalid_argument("grouped product needs last_k >= 1");
  return exp_of_sum(log_sum(grouped_term(Base2Weight::DigitCount), 1, last_k,
                            precision_bits + kGuardBits, mode),
                    precision_bits);
}

ExponentForm rivoal_original_form(std::uint64_t last_k) {
  ExponentForm form;
  for (std::uint64_t k = 2; k <= last_k; ++k) {
    const long e = rivoal_original_exponent(k);
    add_factorization(form, k + 2, e);
    add_factorization(form, k + 1, -e);
  }
  drop_zeros(form);
  return form;
}

ExponentForm rivoal_grouped_form(std::uint64_t last_k) {
  ExponentForm form;
  for (std::uint64_t k = 1; k <= last_k; ++k) {
    const long e = grouped_exponent(k, Base2Weight::DigitCount);
    add_factorization(form, 4 * k + 2, 2 * e);
    add_factorization(form, 4 * k + 1, -e);
    add_factorization(form, 4 * k + 3, -e);
  }
  drop_zeros(form);
  return form;
}

GroupingCheck check_grouping(std::uint64_t blocks, long precision_bits) {
  if (blocks < 1) throw std::invalid_argument("need at least one block");
  const ExponentForm original = rivoal_original_form(4 * blocks + 3);
  const ExponentForm grouped = rivoal_grouped_form(blocks);
  return {blocks, original == grouped, grouped.size(),
          rivoal_original_partial(4 * blocks + 3, precision_bits),
          rivoal_grouped_partial(blocks, precision_bits)};
}

GammaExpr companion_closed_form() {
  const Rational quarter(1, 4);
  const Rational three_quarters(3, 4);
  return GammaExpr(8, {three_quarters, three_quarters}, {quarter, quarter});
}

BigReal alternating_product_estimate(std::uint64_t last_k, long precision_bits, Execution mode) {
  if (last_k < 1) throw std::invalid_argument("alternating product needs last_k >= 1");
  return exp_of_sum(log_sum(grouped_term(Base2Weight::AlternatingDigitCount), 1, last_k,
                            precision_bits + kGuardBits, mode),
                    precision_bits);
}

CauchyReport alternating_cauchy(const std::vector<std::uint64_t>& checkpoints,
                                long precision_bits) {
  if (checkpoints.empty() || checkpoints.front() < 1) {
    throw std::invalid_argument("checkpoints must be nonempty and >= 1");
  }
  CauchyReport report;
  report.checkpoints = checkpoints;
  const auto sums = log_sum_checkpoints(grouped_term(Base2Weight::AlternatingDigitCount), 1,
                                        checkpoints, precision_bits + kGuardBits);
  for (const auto& s : sums) report.estimates.push_back(exp_of_sum(s, precision_bits));
  for (std::size_t i = 1; i < report.estimates.size(); ++i) {
    report.gaps.push_back(abs(report.estimates[i] - report.estimates[i - 1]));
  }
  for (std::size_t i = 1; i < report.gaps.size(); ++i) {
    report.shrink.push_back(report.gaps[i - 1].to_double() / report.gaps[i].to_double());
  }
  if (!report.gaps.empty() && !report.gaps.back().is_zero()) {
    report.stable_digits =
        std::max(0, static_cast<int>(std::floor(-std::log10(report.gaps.back().to_double()))));
  }
  return report;
}

}  // namespace digitblock
