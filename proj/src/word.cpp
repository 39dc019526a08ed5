#include "digitblock/word.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <stdexcept>

#include "digitblock/errors.hpp"

namespace digitblock {

namespace {

void require_base(unsigned base) {
  if (base < 2) {
    throw std::invalid_argument("base must be >= 2, got " + std::to_string(base));
  }
}

constexpr std::string_view kDigitChars = "0123456789abcdefghijklmnopqrstuvwxyz";

}  // namespace

Word::Word(unsigned base, std::vector<Digit> digits) : base_(base), digits_(std::move(digits)) {
  require_base(base_);
  for (Digit d : digits_) {
    if (d >= base_) {
      throw std::invalid_argument("digit " + std::to_string(d) + " out of range for base " +
                                  std::to_string(base_));
    }
  }
}

Word Word::parse(std::string_view text, unsigned base) {
  require_base(base);
  if (base > kDigitChars.size()) {
    throw std::invalid_argument("text form supports bases up to 36");
  }
  std::vector<Digit> digits;
  digits.reserve(text.size());
  for (char c : text) {
    Digit d;
    if (c >= '0' && c <= '9') {
      d = static_cast<Digit>(c - '0');
    } else if (c >= 'a' && c <= 'z') {
      d = static_cast<Digit>(c - 'a' + 10);
    } else if (c >= 'A' && c <= 'Z') {
      d = static_cast<Digit>(c - 'A' + 10);
    } else {
      throw std::invalid_argument(std::string("invalid digit character '") + c + "'");
    }
    if (d >= base) {
      throw std::invalid_argument(std::string("digit '") + c + "' is not valid in base " +
                                  std::to_string(base));
    }
    digits.push_back(d);
  }
  return Word(base, std::move(digits));
}

std::string Word::to_string() const {
  if (base_ > kDigitChars.size()) {
    throw std::invalid_argument("text form supports bases up to 36");
  }
  std::string out;
  out.reserve(digits_.size());
  for (Digit d : digits_) out.push_back(kDigitChars[d]);
  return out;
}

Word to_digits(std::uint64_t n, unsigned base) {
  require_base(base);
  std::vector<Digit> digits;
  while (n > 0) {
    digits.push_back(static_cast<Digit>(n % base));
    n /= base;
  }
  std::reverse(digits.begin(), digits.end());
  return Word(base, std::move(digits));
}

std::uint64_t word_value(const Word& w) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t value = 0;
  for (Digit d : w.digits()) {
    if (value > (kMax - d) / w.base()) {
      throw std::overflow_error("word value exceeds 64 bits");
    }
    value = value * w.base() + d;
  }
  return value;
}

WordClass classify(const Word& w) {
  if (w.is_empty()) throw std::invalid_argument("cannot classify the empty word");
  if (w[0] != 0) return {WordKind::StartsNonzero, 0};
  const auto digits = w.digits();
  if (std::all_of(digits.begin(), digits.end(), [](Digit d) { return d == 0; })) {
    return {WordKind::AllZeros, w.length()};
  }
  return {WordKind::StartsZeroMixed, 0};
}

unsigned digit_length(std::uint64_t n, unsigned base) {
  require_base(base);
  unsigned len = 0;
  for (; n > 0; n /= base) ++len;
  return len;
}

std::uint64_t count_block(const Word& w, std::uint64_t n) {
  if (w.is_empty()) throw std::invalid_argument("count_block needs a nonempty word");
  if (n == 0) return 0;

  const unsigned base = w.base();
  // A 64-bit integer has at most 64 digits in any base >= 2.
  std::array<Digit, 64> expansion{};
  std::size_t len = 0;
  for (std::uint64_t m = n; m > 0; m /= base) expansion[len++] = static_cast<Digit>(m % base);
  std::reverse(expansion.begin(), expansion.begin() + len);

  const std::size_t wlen = w.length();
  const std::size_t pad =
      classify(w).kind == WordKind::StartsZeroMixed ? wlen - 1 : 0;
  const std::size_t total = pad + len;
  if (total < wlen) return 0;

  auto at = [&](std::size_t i) -> Digit { return i < pad ? 0 : expansion[i - pad]; };
  const auto pattern = w.digits();
  std::uint64_t count = 0;
  for (std::size_t start = 0; start + wlen <= total; ++start) {
    std::size_t k = 0;
    while (k < wlen && at(start + k) == pattern[k]) ++k;
    if (k == wlen) ++count;
  }
  return count;
}

std::vector<Word> all_words(unsigned base, unsigned max_len) {
  require_base(base);
  std::vector<Word> words;
  std::vector<Digit> current;
  // Depth-first with children in digit order yields lexicographic order.
  auto visit = [&](auto&& self) -> void {
    for (Digit d = 0; d < base; ++d) {
      current.push_back(d);
      words.emplace_back(base, current);
      if (current.size() < max_len) self(self);
      current.pop_back();
    }
  };
  if (max_len > 0) visit(visit);
  return words;
}

}  // namespace digitblock
