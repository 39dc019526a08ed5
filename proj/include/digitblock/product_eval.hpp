#pragma once

// Truncated evaluation of the digit-block products, rigorous tail bounds, and
// verification against the Gamma closed forms.

#include <cstdint>
#include <vector>

#include "digitblock/bigreal.hpp"
#include "digitblock/log_sum.hpp"
#include "digitblock/product_spec.hpp"
#include "digitblock/report.hpp"

namespace digitblock {

// n -> (factor at n)^{N_{w,B}(n)} for the general product of spec.
TermFn spec_term(const ProductSpec& spec);

// log of the product over 1 <= n <= terms, at precision_bits + guard bits.
BigReal eval_lhs_log(const ProductSpec& spec, std::uint64_t terms, long precision_bits,
                     Execution mode = Execution::Serial);

BigReal eval_lhs_partial(const ProductSpec& spec, std::uint64_t terms, long precision_bits,
                         Execution mode = Execution::Serial);

// prod_{n=1}^{terms} ((4n+2)^2/((4n+1)(4n+3)))^{2 N_{w,2}(n)} evaluated from
// that factor directly rather than through the general base-B factor.
BigReal base2_lhs_partial(const Word& w, std::uint64_t terms, long precision_bits);

// Upper bound on |log(full product) - log(partial product up to terms)|.
//
// With D = |sum b^2 - sum a^2| and T = max(sum a^3, sum b^3), the log of the
// n-th factor is bounded by A2/n^2 + A3/n^3 where
//   A2 = D (1 - 1/B) / (2 B^2),   A3 = (D + T (1 + B^-2) / 3) / B^3,
// from t - t^2/2 <= log(1+t) <= t - t^2/2 + t^3/3 (t >= 0). The exponent is
// at most log_B(n) + 1, and the sum over n > terms is bounded by integrals.
// Requires terms >= 2.
BigReal tail_estimate(const ProductSpec& spec, std::uint64_t terms, long precision_bits = 128);

enum class NamedFormula {
  Rivoal,     // exponent 2 (N_0 + N_1), value 4/pi
  Companion,  // exponent 2 (N_0 - N_1), value 8 G(3/4)^2 / G(1/4)^2
};

const char* formula_tag(NamedFormula f);

struct VerifyOptions {
  std::uint64_t terms = 100000;
  long precision_bits = 128;
  double tolerance = 1e-3;
  // Multiplier c in the pass rule rel_gap <= max(tolerance, c * tail).
  double tail_factor = 0.0;
  Execution mode = Execution::Serial;
};

VerifyReport verify(const ProductSpec& spec, const VerifyOptions& options);
// The right-hand side of Rivoal is 4 / machin_pi(), not a Gamma expression.
VerifyReport verify(NamedFormula formula, const VerifyOptions& options);

inline constexpr unsigned kMaxEnumerateLength = 8;
inline constexpr std::size_t kDefaultMaxWords = 4096;

// One report per nonempty word of length <= max_len over base B, in
// lexicographic word order, each product built from parameters a and b.
// Words are verified concurrently; each evaluation uses options.mode.
std::vector<VerifyReport> enumerate_words(unsigned base, unsigned max_len,
                                          const VerifyOptions& options,
                                          const std::vector<Rational>& a = {1, 1},
                                          const std::vector<Rational>& b = {0, 2},
                                          std::size_t max_words = kDefaultMaxWords);

}  // namespace digitblock
