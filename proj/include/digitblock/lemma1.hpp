#pragma once

// The block-counting summation identity
//
//   sum_{n>=1} N_{w,B}(n) (f(n) - sum_{k=0}^{B-1} f(Bn+k)) = sum f(B^L n + v)
//
// where L = L(w), v = v_B(w), and the right-hand sum runs over n >= 1 when w
// is all zeros and over n >= 0 otherwise. For finitely supported rational f
// both sides are finite sums and are evaluated exactly.

#include <cstdint>
#include <functional>
#include <map>

#include "digitblock/rational.hpp"
#include "digitblock/word.hpp"

namespace digitblock {

// Rational-valued function on the naturals with finitely many nonzero values
// at n >= 1. The value at 0 is stored separately; the identity never reads it.
class FiniteSupportFn {
 public:
  FiniteSupportFn() = default;
  FiniteSupportFn(std::initializer_list<std::pair<const std::uint64_t, Rational>> entries);

  // n must be >= 1. Zero values are not stored.
  void set(std::uint64_t n, const Rational& value);
  void set_value_at_zero(const Rational& value) { at_zero_ = value; }

  Rational operator()(std::uint64_t n) const;
  // Largest n with f(n) != 0 (0 when f vanishes on n >= 1).
  std::uint64_t max_key() const { return entries_.empty() ? 0 : entries_.rbegin()->first; }
  const std::map<std::uint64_t, Rational>& entries() const { return entries_; }

 private:
  std::map<std::uint64_t, Rational> entries_;
  Rational at_zero_;
};

// AsStated follows the identity; Swapped starts the right-hand sum at the
// other index (a negative control: it reads f(0) for all-zero words and drops
// f(v) for the rest).
enum class RhsRange { AsStated, Swapped };

Rational lemma1_lhs(const FiniteSupportFn& f, const Word& w, unsigned base);
Rational lemma1_rhs(const FiniteSupportFn& f, const Word& w, unsigned base,
                    RhsRange range = RhsRange::AsStated);
// lhs - rhs; zero for every finitely supported f when range is AsStated.
Rational lemma1_residual(const FiniteSupportFn& f, const Word& w, unsigned base,
                         RhsRange range = RhsRange::AsStated);

struct Lemma1Numeric {
  double lhs = 0.0;
  double rhs = 0.0;
};

// Truncated floating-point version for decaying f: the left sum runs over
// 1 <= n <= truncation, the right sum over arguments <= truncation.
Lemma1Numeric lemma1_numeric(const std::function<double(std::uint64_t)>& f, const Word& w,
                             unsigned base, std::uint64_t truncation);

}  // namespace digitblock

#include <string>
#include <vector>

namespace digitblock {

struct Lemma1FuzzConfig {
  std::uint64_t trials = 1000;
  std::uint64_t seed = 7;
  std::vector<unsigned> bases = {2, 3, 4, 10};
  unsigned max_word_len = 6;
  unsigned max_support = 30;    // nonzero entries of f at n >= 1
  std::uint64_t max_key = 200;  // support lies in [1, max_key]
  RhsRange range = RhsRange::AsStated;
};

struct Lemma1Case {
  unsigned base = 2;
  Word word = Word::empty(2);
  FiniteSupportFn f;
  Rational residual;

  std::string describe() const;
};

struct Lemma1FuzzSummary {
  std::uint64_t trials = 0;
  std::uint64_t exact = 0;             // residual == 0
  std::uint64_t all_zero_words = 0;    // trials whose word is 0^j
  std::uint64_t all_zero_nonzero = 0;  // of those, residual != 0
  std::vector<Lemma1Case> counterexamples;  // first few failures
};

// Random finite-support f (with a random nonzero f(0)) and random words,
// drawn from a std::mt19937_64 seeded with config.seed; about a quarter of
// the words are forced to be all zeros so that branch is always exercised.
Lemma1FuzzSummary lemma1_fuzz(const Lemma1FuzzConfig& config);

}  // namespace digitblock
