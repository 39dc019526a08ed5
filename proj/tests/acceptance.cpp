// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "digitblock/closed_form.hpp"
#include "digitblock/gamma.hpp"
#include "digitblock/gamma_expr.hpp"
#include "digitblock/lemma1.hpp"
#include "digitblock/pi.hpp"
#include "digitblock/product_eval.hpp"
#include "digitblock/rivoal.hpp"
#include "digitblock/word.hpp"

using namespace digitblock;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

int failures = 0;

void criterion(const char* id, const char* title, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.pass = false;
    out.detail << " [exception: " << e.what() << "]";
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!out.pass) ++failures;
  std::printf("[%s] %s %s:%s (%.1fs)\n", out.pass ? "PASS" : "FAIL", id, title,
              out.detail.str().c_str(), secs);
  std::fflush(stdout);
}

std::string sci(const BigReal& x) { return x.to_string(3); }

BigReal four_over_pi(long bits) { return BigReal(4, bits) / machin_pi(bits); }

// Base-B digits of n, most significant first, as characters.
std::string naive_expansion(std::uint64_t n, unsigned base) {
  std::string s;
  for (; n > 0; n /= base) s.insert(s.begin(), static_cast<char>('0' + n % base));
  return s;
}

std::uint64_t naive_count(const std::string& word, std::uint64_t n, unsigned base) {
  std::string text = naive_expansion(n, base);
  const bool all_zeros = word.find_first_not_of('0') == std::string::npos;
  if (word[0] == '0' && !all_zeros) text.insert(0, word.size() - 1, '0');
  std::uint64_t count = 0;
  for (auto pos = text.find(word); pos != std::string::npos; pos = text.find(word, pos + 1)) {
    ++count;
  }
  return count;
}

void ac1(Outcome& out) {
  for (const auto& [terms, tol] : {std::pair<std::uint64_t, double>{100000, 1e-3}, {1000000, 1e-5}}) {
    VerifyOptions options;
    options.terms = terms;
    options.tolerance = tol;
    const VerifyReport r = verify(NamedFormula::Rivoal, options);
    out.detail << " N=" << terms << " rel_gap=" << sci(r.rel_gap);
    out.require(r.pass && r.rel_gap.to_double() <= tol, "rel_gap within tolerance");
    out.require(relative_gap(r.rhs, four_over_pi(128)).is_zero(), "rhs is 4/pi");
  }
  const BigReal machin = machin_pi(256);
  out.require(relative_gap(machin, BigReal::pi(256)).to_double() < 1e-75,
              "series pi agrees with MPFR pi");
}

void ac2(Outcome& out) {
  const long bits = 256;
  const BigReal zero = eval_gamma_expr(closed_form_base2(Word::parse("0", 2)), bits);
  const BigReal one = eval_gamma_expr(closed_form_base2(Word::parse("1", 2)), bits);
  const BigReal gap = relative_gap(zero * one, four_over_pi(bits));
  out.detail << " rel_gap=" << sci(gap);
  out.require(gap.to_double() <= 1e-50, "50 digits");
}

void ac3(Outcome& out) {
  const long bits = 256;
  const BigReal closed = eval_gamma_expr(companion_closed_form(), bits);
  const BigReal pi = machin_pi(bits);
  const BigReal target = mul(pi * pi, 16) / pow(gamma(Rational(1, 4), bits), 4);
  const BigReal exact_gap = relative_gap(closed, target);
  out.detail << " closed-form rel_gap=" << sci(exact_gap);
  out.require(exact_gap.to_double() <= 1e-50, "50 digits");

  VerifyOptions options;
  const VerifyReport r = verify(NamedFormula::Companion, options);
  const BigReal partial_gap = relative_gap(r.lhs, target.rounded(128));
  out.detail << " N=1e5 rel_gap=" << sci(partial_gap);
  out.require(partial_gap.to_double() <= 1e-3, "partial product within 1e-3");
}

void ac4(Outcome& out) {
  const long bits = 128;
  for (unsigned j : {1u, 2u}) {
    const Word w = Word::parse(std::string(j, '0'), 2);
    const BigReal partial = eval_lhs_partial(ProductSpec::with_default_params(w), 100000, bits);
    const Rational x(1, 1L << j);
    const Rational half(1, 1L << (j + 1));
    const BigReal g = gamma(half, bits);
    const BigReal target = mul(gamma(x, bits), 1L << (j + 2)) / (g * g);
    const BigReal gap = relative_gap(partial, target);
    out.detail << " j=" << j << " rel_gap=" << sci(gap);
    out.require(gap.to_double() <= 1e-3, "j=" + std::to_string(j));
  }
}

void ac5(Outcome& out) {
  const long bits = 128;
  const BigReal limit = BigReal::parse("7.888609052210118e-31", bits);  // 2^-100
  BigReal worst(bits);
  std::size_t words = 0;
  for (const Word& w : all_words(2, 5)) {
    const BigReal general =
        eval_gamma_expr(closed_form_baseB(ProductSpec(2, w, {1, 1}, {0, 2})), bits);
    const BigReal special = eval_gamma_expr(closed_form_base2(w), bits);
    const BigReal gap = relative_gap(general, special);
    if (gap > worst) worst = gap;
    ++words;
    out.require(gap <= limit, "word " + w.to_string());
  }
  out.detail << " words=" << words << " worst rel_gap=" << sci(worst);
  out.require(words == 62, "62 words");
}

void ac6(Outcome& out) {
  Lemma1FuzzConfig config;
  const Lemma1FuzzSummary exact = lemma1_fuzz(config);
  out.detail << " " << exact.exact << "/" << exact.trials << " exact ("
             << exact.all_zero_words << " all-zero words)";
  out.require(exact.trials == 1000 && exact.exact == exact.trials, "all residuals zero");
  out.require(exact.all_zero_words > 0, "all-zero branch exercised");

  config.range = RhsRange::Swapped;
  const Lemma1FuzzSummary control = lemma1_fuzz(config);
  out.detail << "; swapped range: " << control.all_zero_nonzero << "/" << control.all_zero_words
             << " all-zero words nonzero";
  out.require(control.all_zero_nonzero > 0, "negative control detects the swap");
}

void ac7(Outcome& out) {
  std::uint64_t matched = 0;
  for (std::uint64_t k = 0; k <= 1000; ++k) {
    if (rivoal_original_form(4 * k + 3) == rivoal_grouped_form(k)) ++matched;
  }
  out.detail << " " << matched << "/1001 exact";
  out.require(matched == 1001, "every K <= 1000");
  const GroupingCheck c = check_grouping(1000, 128);
  out.require(c.exact_match, "check_grouping(1000)");
  out.require(relative_gap(c.original_value, c.grouped_value).is_zero(), "values equal");
  // Sanity: a wrong cut-off is detected.
  out.require(rivoal_original_form(4 * 1000) != rivoal_grouped_form(1000), "negative check");
}

void ac8(Outcome& out) {
  std::mt19937_64 rng(20261015);
  for (long bits : {128L, 256L}) {
    const BigReal limit = pow(BigReal(2, bits), 8 - bits);
    // Reference sides are formed with extra bits so only Gamma's error is measured.
    const long wide = bits + 64;
    const BigReal pi = machin_pi(wide);
    BigReal worst_rec(bits);
    BigReal worst_ref(bits);
    for (int i = 0; i < 1000; ++i) {
      const long q = std::uniform_int_distribution<long>(2, 1000)(rng);
      const long p_rec = std::uniform_int_distribution<long>(1, 40 * q)(rng);
      const long p_ref = std::uniform_int_distribution<long>(1, q - 1)(rng);

      const Rational x(p_rec, q);
      if (!x.is_nonpositive_integer()) {
        const BigReal lhs = gamma(x + Rational(1), bits);
        const BigReal rhs = BigReal(x, wide) * gamma(x, bits);
        const BigReal gap = relative_gap(lhs, rhs);
        if (gap > worst_rec) worst_rec = gap;
      }

      const Rational y(p_ref, q);
      const BigReal lhs = gamma(y, bits) * gamma(Rational(1) - y, bits);
      const BigReal rhs = pi / sin(pi * BigReal(y, wide));
      const BigReal gap = relative_gap(lhs, rhs);
      if (gap > worst_ref) worst_ref = gap;
    }
    out.detail << " p=" << bits << " recurrence " << sci(worst_rec) << " reflection "
               << sci(worst_ref) << " limit " << sci(limit) << ";";
    out.require(worst_rec <= limit, "recurrence at " + std::to_string(bits));
    out.require(worst_ref <= limit, "reflection at " + std::to_string(bits));
  }
}

void ac9(Outcome& out) {
  std::vector<Word> corpus = all_words(2, 5);
  for (unsigned base : {3u, 4u}) {
    for (Word& w : all_words(base, 3)) corpus.push_back(std::move(w));
  }
  std::uint64_t mismatches = 0;
  for (const Word& w : corpus) {
    const std::string text = w.to_string();
    for (std::uint64_t n = 0; n <= 100000; ++n) {
      if (count_block(w, n) != naive_count(text, n, w.base())) ++mismatches;
    }
  }
  out.detail << " corpus=" << corpus.size() << " words, n<=1e5, mismatches=" << mismatches;
  out.require(mismatches == 0, "naive scan agreement");

  struct Example {
    unsigned base;
    const char* word;
    std::uint64_t n;
    std::uint64_t expected;
  };
  for (const Example& e : {Example{2, "11", 15, 3}, Example{2, "001", 4, 1}, Example{4, "0", 4, 2}}) {
    const std::uint64_t got = count_block(Word::parse(e.word, e.base), e.n);
    out.detail << "; N(" << e.word << ", base " << e.base << ", " << e.n << ")=" << got
               << " expected " << e.expected;
    out.require(got == e.expected, std::string("example ") + e.word + " base " +
                                       std::to_string(e.base) + " (naive scan gives " +
                                       std::to_string(naive_count(e.word, e.n, e.base)) + ")");
  }
}

void alternating(Outcome& out) {
  const CauchyReport r = alternating_cauchy({10000, 100000, 1000000}, 128);
  out.detail << " estimates " << r.estimates[0].to_string(12) << ", "
             << r.estimates[1].to_string(12) << ", " << r.estimates[2].to_string(12)
             << " gaps " << sci(r.gaps[0]) << ", " << sci(r.gaps[1]) << " shrink "
             << r.shrink[0];
  out.require(r.shrink.size() == 1 && r.shrink[0] >= 5.0, "gaps shrink by 5x");
}

}  // namespace

int main() {
  criterion("AC1", "rivoal product vs 4/pi at N=1e5 and 1e6", ac1);
  criterion("AC2", "w=0 and w=1 closed forms multiply to 4/pi", ac2);
  criterion("AC3", "companion closed form and partial product", ac3);
  criterion("AC4", "all-zero words j=1,2 at N=1e5", ac4);
  criterion("AC5", "general base reduction for binary words", ac5);
  criterion("AC6", "summation identity exactness and negative control", ac6);
  criterion("AC7", "original vs grouped rivoal products", ac7);
  criterion("AC8", "gamma recurrence and reflection", ac8);
  criterion("AC9", "block counts vs naive scan and examples", ac9);
  criterion("ALT", "alternating product Cauchy check", alternating);
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
