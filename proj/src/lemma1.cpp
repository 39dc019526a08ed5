#include "digitblock/lemma1.hpp"

#include <limits>
#include <stdexcept>

#include "digitblock/errors.hpp"

namespace digitblock {

namespace {

void require_word(const Word& w, unsigned base) {
  if (w.is_empty()) throw std::invalid_argument("identity needs a nonempty word");
  if (w.base() != base) {
    throw BaseMismatch("word base " + std::to_string(w.base()) + " differs from " +
                       std::to_string(base));
  }
}

// B^L, saturating at the largest 64-bit value.
std::uint64_t saturating_power(unsigned base, std::size_t exponent) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t p = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    if (p > kMax / base) return kMax;
    p *= base;
  }
  return p;
}

std::uint64_t rhs_start(const Word& w, RhsRange range) {
  const bool all_zeros = classify(w).kind == WordKind::AllZeros;
  const bool from_one = (range == RhsRange::AsStated) == all_zeros;
  return from_one ? 1 : 0;
}

}  // namespace

FiniteSupportFn::FiniteSupportFn(
    std::initializer_list<std::pair<const std::uint64_t, Rational>> entries) {
  for (const auto& [n, v] : entries) set(n, v);
}

void FiniteSupportFn::set(std::uint64_t n, const Rational& value) {
  if (n == 0) throw std::invalid_argument("use set_value_at_zero for f(0)");
  if (value.sign() == 0) {
    entries_.erase(n);
  } else {
    entries_[n] = value;
  }
}

Rational FiniteSupportFn::operator()(std::uint64_t n) const {
  if (n == 0) return at_zero_;
  const auto it = entries_.find(n);
  return it == entries_.end() ? Rational() : it->second;
}

Rational lemma1_lhs(const FiniteSupportFn& f, const Word& w, unsigned base) {
  require_word(w, base);
  // f(n) and every f(Bn+k) vanish once n exceeds the largest support key.
  Rational total;
  for (std::uint64_t n = 1; n <= f.max_key(); ++n) {
    const std::uint64_t count = count_block(w, n);
    if (count == 0) continue;
    Rational diff = f(n);
    for (unsigned k = 0; k < base; ++k) diff -= f(base * n + k);
    total += Rational(static_cast<long>(count)) * diff;
  }
  return total;
}

Rational lemma1_rhs(const FiniteSupportFn& f, const Word& w, unsigned base, RhsRange range) {
  require_word(w, base);
  const std::uint64_t stride = saturating_power(base, w.length());
  const std::uint64_t offset = word_value(w);
  const std::uint64_t limit = f.max_key();
  Rational total;
  for (std::uint64_t n = rhs_start(w, range);; ++n) {
    // Stop once stride * n + offset passes the support (overflow-safe).
    if (n > 0 && (offset > limit || stride > (limit - offset) / n)) break;
    const std::uint64_t arg = stride * n + offset;
    if (arg > limit) break;
    total += f(arg);
  }
  return total;
}

Rational lemma1_residual(const FiniteSupportFn& f, const Word& w, unsigned base,
                         RhsRange range) {
  return lemma1_lhs(f, w, base) - lemma1_rhs(f, w, base, range);
}

Lemma1Numeric lemma1_numeric(const std::function<double(std::uint64_t)>& f, const Word& w,
                             unsigned base, std::uint64_t truncation) {
  require_word(w, base);
  Lemma1Numeric out;
  for (std::uint64_t n = 1; n <= truncation; ++n) {
    const std::uint64_t count = count_block(w, n);
    if (count == 0) continue;
    double diff = f(n);
    for (unsigned k = 0; k < base; ++k) diff -= f(base * n + k);
    out.lhs += static_cast<double>(count) * diff;
  }
  const std::uint64_t stride = saturating_power(base, w.length());
  const std::uint64_t offset = word_value(w);
  for (std::uint64_t n = rhs_start(w, RhsRange::AsStated);; ++n) {
    if (n > 0 && (offset > truncation || stride > (truncation - offset) / n)) break;
    const std::uint64_t arg = stride * n + offset;
    if (arg > truncation) break;
    out.rhs += f(arg);
  }
  return out;
}

}  // namespace digitblock

#include <random>

namespace digitblock {

namespace {

constexpr std::size_t kMaxCounterexamples = 5;

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

Rational random_nonzero_rational(std::mt19937_64& rng) {
  long num = static_cast<long>(draw(rng, 19)) - 9;
  if (num == 0) num = 1;
  const long den = static_cast<long>(draw(rng, 9)) + 1;
  return Rational(num, den);
}

}  // namespace

std::string Lemma1Case::describe() const {
  std::string entries;
  for (const auto& [n, v] : f.entries()) {
    if (!entries.empty()) entries += ",";
    entries += std::to_string(n) + ":" + v.to_string();
  }
  return "base=" + std::to_string(base) + " word=" + word.to_string() + " f(0)=" +
         f(0).to_string() + " f={" + entries + "} residual=" + residual.to_string();
}

Lemma1FuzzSummary lemma1_fuzz(const Lemma1FuzzConfig& config) {
  if (config.bases.empty()) throw std::invalid_argument("need at least one base");
  if (config.max_word_len < 1 || config.max_support < 1 || config.max_key < 1) {
    throw std::invalid_argument("fuzz bounds must be positive");
  }
  std::mt19937_64 rng(config.seed);
  Lemma1FuzzSummary summary;
  for (std::uint64_t trial = 0; trial < config.trials; ++trial) {
    Lemma1Case c;
    c.base = config.bases[draw(rng, config.bases.size())];
    const auto len = static_cast<std::size_t>(draw(rng, config.max_word_len) + 1);
    const bool force_zeros = draw(rng, 4) == 0;
    std::vector<Digit> digits(len);
    for (auto& d : digits) d = force_zeros ? 0 : static_cast<Digit>(draw(rng, c.base));
    c.word = Word(c.base, std::move(digits));

    const auto support = draw(rng, config.max_support) + 1;
    for (std::uint64_t i = 0; i < support; ++i) {
      c.f.set(draw(rng, config.max_key) + 1, random_nonzero_rational(rng));
    }
    c.f.set_value_at_zero(random_nonzero_rational(rng));

    c.residual = lemma1_residual(c.f, c.word, c.base, config.range);
    const bool all_zero = classify(c.word).kind == WordKind::AllZeros;
    ++summary.trials;
    if (all_zero) ++summary.all_zero_words;
    if (c.residual.sign() == 0) {
      ++summary.exact;
    } else {
      if (all_zero) ++summary.all_zero_nonzero;
      if (summary.counterexamples.size() < kMaxCounterexamples) {
        summary.counterexamples.push_back(std::move(c));
      }
    }
  }
  return summary;
}

}  // namespace digitblock
