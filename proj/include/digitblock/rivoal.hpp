#pragma once

// Products for 4/pi whose exponents count binary digits.
//
// Original form:  prod_{k>=2} (1 + 1/(k+1))^{2 rho(k) floor(log2(k) - 1)}
// Grouped form:   prod_{k>=1} ((4k+2)^2 / ((4k+1)(4k+3)))^{2 (N_0(k) + N_1(k))}
//
// rho is 4-periodic with rho(0) = 1, rho(1) = -1, rho(2) = rho(3) = 0, and
// N_d(k) counts the binary digit d in k. Both products converge to 4/pi;
// grouping four consecutive original factors gives one grouped factor.

#include <cstdint>
#include <map>
#include <vector>

#include "digitblock/bigreal.hpp"
#include "digitblock/gamma_expr.hpp"
#include "digitblock/log_sum.hpp"

namespace digitblock {

int rho(std::uint64_t k);
// Number of binary digits; 0 for k = 0.
unsigned bit_length(std::uint64_t k);

// 2 rho(k) (bit_length(k) - 2), the exact value of 2 rho(k) floor(log2(k) - 1).
long rivoal_original_exponent(std::uint64_t k);

// Exponent of the grouped factor at k for the three digit-count weightings.
enum class Base2Weight {
  DigitCount,             // 2 (N_0 + N_1)
  ZeroMinusOne,           // 2 (N_0 - N_1)
  AlternatingDigitCount,  // 2 (-1)^k (N_0 + N_1)
};
long grouped_exponent(std::uint64_t k, Base2Weight weight);

// Factor (4k+2)^2 / ((4k+1)(4k+3)) raised to grouped_exponent(k, weight).
TermFn grouped_term(Base2Weight weight);
// Factor (k+2)/(k+1) raised to rivoal_original_exponent(k).
TermFn original_term();

BigReal rivoal_original_partial(std::uint64_t last_k, long precision_bits,
                                Execution mode = Execution::Serial);
BigReal rivoal_grouped_partial(std::uint64_t last_k, long precision_bits,
                               Execution mode = Execution::Serial);

// A finite product of integer powers in canonical form: prime -> exponent,
// zero exponents omitted. Two partial products are equal iff their forms are.
using ExponentForm = std::map<std::uint64_t, std::int64_t>;

ExponentForm rivoal_original_form(std::uint64_t last_k);
ExponentForm rivoal_grouped_form(std::uint64_t last_k);

struct GroupingCheck {
  std::uint64_t blocks = 0;
  bool exact_match = false;
  std::size_t primes = 0;  // size of the canonical form
  BigReal original_value;
  BigReal grouped_value;
};

// Compares the original product up to k = 4 blocks + 3 with the grouped
// product up to k = blocks.
GroupingCheck check_grouping(std::uint64_t blocks, long precision_bits);

// 8 G(3/4)^2 / G(1/4)^2, the value of the 2 (N_0 - N_1) product.
GammaExpr companion_closed_form();

// Partial product of the alternating 2 (-1)^k (N_0 + N_1) variant. No closed
// form is known; this is an estimate only.
BigReal alternating_product_estimate(std::uint64_t last_k, long precision_bits,
                                     Execution mode = Execution::Serial);

struct CauchyReport {
  std::vector<std::uint64_t> checkpoints;
  std::vector<BigReal> estimates;
  std::vector<BigReal> gaps;       // |estimate[i+1] - estimate[i]|
  std::vector<double> shrink;      // gaps[i] / gaps[i+1]
  int stable_digits = 0;           // decimal digits fixed by the last gap
};

// Successive alternating-product estimates from one left-to-right pass.
CauchyReport alternating_cauchy(const std::vector<std::uint64_t>& checkpoints,
                                long precision_bits);

}  // namespace digitblock
