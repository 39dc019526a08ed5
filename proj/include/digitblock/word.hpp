#pragma once

// Base-B words and block-occurrence counting.
//
// A Word is a finite digit sequence over {0, ..., B-1}, most significant digit
// first. Leading zeros are significant: "0010" and "10" are different words
// with the same value. The integer 0 expands to the empty word.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace digitblock {

using Digit = std::uint32_t;

class Word {
 public:
  // Throws std::invalid_argument for base < 2 or a digit >= base.
  Word(unsigned base, std::vector<Digit> digits);

  static Word empty(unsigned base) { return Word(base, {}); }

  // Parses a plain digit string ("0010"). Bases 11..36 use 0-9 then a-z
  // (case-insensitive). Rejects any character whose value is >= base.
  static Word parse(std::string_view text, unsigned base);

  unsigned base() const { return base_; }
  std::size_t length() const { return digits_.size(); }
  bool is_empty() const { return digits_.empty(); }
  std::span<const Digit> digits() const { return digits_; }
  Digit operator[](std::size_t i) const { return digits_[i]; }

  // Inverse of parse(); requires base <= 36.
  std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;
  // Lexicographic on digits; only meaningful within one base.
  friend auto operator<=>(const Word& lhs, const Word& rhs) {
    return lhs.digits_ <=> rhs.digits_;
  }

 private:
  unsigned base_;
  std::vector<Digit> digits_;
};

enum class WordKind { AllZeros, StartsNonzero, StartsZeroMixed };

struct WordClass {
  WordKind kind;
  std::size_t zeros = 0;  // j for AllZeros(j), 0 otherwise

  friend bool operator==(const WordClass&, const WordClass&) = default;
};

// Canonical expansion without leading zeros; 0 maps to the empty word.
Word to_digits(std::uint64_t n, unsigned base);

// Value of w read as a base-B numeral. Throws std::overflow_error if the
// value does not fit in 64 bits.
std::uint64_t word_value(const Word& w);

// Throws std::invalid_argument for the empty word.
WordClass classify(const Word& w);

// N_{w,B}(n): overlapping occurrences of w in the base-B expansion of n.
// Words that start with 0 but are not all zeros are matched against the
// expansion left-padded with L(w)-1 zeros, which is enough for every
// occurrence that touches a nonzero digit. N_{w,B}(0) = 0.
std::uint64_t count_block(const Word& w, std::uint64_t n);

// Number of base-B digits of n (0 for n = 0).
unsigned digit_length(std::uint64_t n, unsigned base);

// Every nonempty word of length <= max_len over base B, in lexicographic order.
std::vector<Word> all_words(unsigned base, unsigned max_len);

}  // namespace digitblock
