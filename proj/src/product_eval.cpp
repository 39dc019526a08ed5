#include "digitblock/product_eval.hpp"

#include <exception>
#include <stdexcept>

#include <omp.h>

#include "digitblock/closed_form.hpp"
#include "digitblock/gamma_expr.hpp"
#include "digitblock/pi.hpp"
#include "digitblock/rivoal.hpp"

namespace digitblock {

namespace {

void require_terms(std::uint64_t terms) {
  if (terms < 1) throw std::invalid_argument("need at least one term");
}

struct Gaps {
  BigReal abs_gap;
  BigReal rel_gap;
};

Gaps gaps(const BigReal& lhs, const BigReal& rhs) {
  return {abs(lhs - rhs), relative_gap(lhs, rhs)};
}

void finish(VerifyReport& r, const VerifyOptions& o) {
  const long bits = o.precision_bits;
  auto [abs_gap, rel_gap] = gaps(r.lhs, r.rhs);
  r.abs_gap = abs_gap.rounded(bits);
  r.rel_gap = rel_gap.rounded(bits);
  r.tolerance = o.tolerance;
  r.tail_factor = o.tail_factor;
  const double allowed = std::max(o.tolerance, o.tail_factor * r.tail_estimate.to_double());
  r.pass = r.rel_gap.is_finite() && r.rel_gap.to_double() <= allowed;
}

}  // namespace

TermFn spec_term(const ProductSpec& spec) {
  const mpz_class q = spec.common_denominator();
  const unsigned long base = spec.base();
  std::vector<mpz_class> scaled_a;
  std::vector<mpz_class> scaled_b;
  for (std::size_t i = 0; i < spec.a().size(); ++i) {
    scaled_a.push_back(spec.a()[i].numerator() * (q / spec.a()[i].denominator()));
    scaled_b.push_back(spec.b()[i].numerator() * (q / spec.b()[i].denominator()));
  }
  // With everything scaled by q, factor n is
  //   prod_i (Bqn + a_i)/(Bqn + b_i) * prod_{k,i} (B^2qn + Bqk + b_i)/(B^2qn + Bqk + a_i).
  return [word = spec.word(), base, q, scaled_a, scaled_b](std::uint64_t n, TermRatio& out) {
    out.weight = static_cast<long>(count_block(word, n));
    if (out.weight == 0) return;
    const mpz_class outer = q * base * static_cast<unsigned long>(n);
    const mpz_class inner = outer * base;
    out.num = 1;
    out.den = 1;
    for (std::size_t i = 0; i < scaled_a.size(); ++i) {
      out.num *= outer + scaled_a[i];
      out.den *= outer + scaled_b[i];
    }
    for (unsigned long k = 0; k < base; ++k) {
      const mpz_class shifted = inner + q * base * k;
      for (std::size_t i = 0; i < scaled_a.size(); ++i) {
        out.num *= shifted + scaled_b[i];
        out.den *= shifted + scaled_a[i];
      }
    }
  };
}

BigReal eval_lhs_log(const ProductSpec& spec, std::uint64_t terms, long precision_bits,
                     Execution mode) {
  require_terms(terms);
  return log_sum(spec_term(spec), 1, terms, precision_bits + kGuardBits, mode);
}

BigReal eval_lhs_partial(const ProductSpec& spec, std::uint64_t terms, long precision_bits,
                         Execution mode) {
  return exp(eval_lhs_log(spec, terms, precision_bits, mode)).rounded(precision_bits);
}

BigReal base2_lhs_partial(const Word& w, std::uint64_t terms, long precision_bits) {
  require_terms(terms);
  if (w.base() != 2 || w.is_empty()) throw std::invalid_argument("need a nonempty binary word");
  TermFn term = [w](std::uint64_t n, TermRatio& out) {
    out.weight = 2 * static_cast<long>(count_block(w, n));
    if (out.weight == 0) return;
    const unsigned long four_n = 4UL * n;
    out.num = four_n + 2;
    out.num *= out.num;
    out.den = four_n + 1;
    out.den *= four_n + 3;
  };
  const BigReal s = log_sum_serial(term, 1, terms, precision_bits + kGuardBits);
  return exp(s).rounded(precision_bits);
}

BigReal tail_estimate(const ProductSpec& spec, std::uint64_t terms, long precision_bits) {
  if (terms < 2) throw std::invalid_argument("tail estimate needs terms >= 2");
  Rational sum_a2;
  Rational sum_b2;
  Rational sum_a3;
  Rational sum_b3;
  for (std::size_t i = 0; i < spec.a().size(); ++i) {
    const Rational& a = spec.a()[i];
    const Rational& b = spec.b()[i];
    sum_a2 += a * a;
    sum_b2 += b * b;
    sum_a3 += a * a * a;
    sum_b3 += b * b * b;
  }
  const Rational base(static_cast<long>(spec.base()));
  const Rational d = sum_b2 >= sum_a2 ? sum_b2 - sum_a2 : sum_a2 - sum_b2;
  const Rational t = std::max(sum_a3, sum_b3);
  const Rational a2 = d * (Rational(1) - Rational(1) / base) / (Rational(2) * base * base);
  const Rational a3 =
      (d + t * (Rational(1) + Rational(1) / (base * base)) / Rational(3)) / (base * base * base);

  const long bits = precision_bits + kGuardBits;
  const BigReal n(mpz_class(static_cast<unsigned long>(terms)), bits);
  const BigReal one(1, bits);
  const BigReal ln_base = log(BigReal(static_cast<long>(spec.base()), bits));
  const BigReal digits = log(n) / ln_base + one;  // log_B(N) + 1
  const BigReal quadratic = (digits + one / ln_base) / n;
  const BigReal cubic = (digits / BigReal(2, bits) + one / (BigReal(4, bits) * ln_base)) / (n * n);
  return (BigReal(a2, bits) * quadratic + BigReal(a3, bits) * cubic).rounded(precision_bits);
}

const char* formula_tag(NamedFormula f) {
  return f == NamedFormula::Rivoal ? "rivoal" : "companion";
}

VerifyReport verify(const ProductSpec& spec, const VerifyOptions& options) {
  require_terms(options.terms);
  const long bits = options.precision_bits;
  VerifyReport r;
  r.target = "word";
  r.spec = spec;
  r.terms_used = options.terms;
  r.precision_bits = bits;
  r.lhs = eval_lhs_partial(spec, options.terms, bits, options.mode);
  r.rhs = eval_gamma_expr(closed_form_baseB(spec), bits);
  r.tail_estimate = tail_estimate(spec, std::max<std::uint64_t>(options.terms, 2), bits);
  finish(r, options);
  return r;
}

VerifyReport verify(NamedFormula formula, const VerifyOptions& options) {
  require_terms(options.terms);
  const long bits = options.precision_bits;
  VerifyReport r;
  r.target = formula_tag(formula);
  r.terms_used = options.terms;
  r.precision_bits = bits;
  const Base2Weight weight = formula == NamedFormula::Rivoal ? Base2Weight::DigitCount
                                                                : Base2Weight::ZeroMinusOne;
  const BigReal log_lhs =
      log_sum(grouped_term(weight), 1, options.terms, bits + kGuardBits, options.mode);
  r.lhs = exp(log_lhs).rounded(bits);
  if (formula == NamedFormula::Rivoal) {
    r.rhs = (BigReal(4, bits + kGuardBits) / machin_pi(bits + kGuardBits)).rounded(bits);
  } else {
    r.rhs = eval_gamma_expr(companion_closed_form(), bits);
  }
  // Both weights are bounded by the binary digit count, as in the default
  // base-2 family.
  r.tail_estimate = tail_estimate(ProductSpec::with_default_params(Word::parse("1", 2)),
                                  std::max<std::uint64_t>(options.terms, 2), bits);
  finish(r, options);
  return r;
}

std::vector<VerifyReport> enumerate_words(unsigned base, unsigned max_len,
                                          const VerifyOptions& options,
                                          const std::vector<Rational>& a,
                                          const std::vector<Rational>& b,
                                          std::size_t max_words) {
  if (max_len < 1 || max_len > kMaxEnumerateLength) {
    throw std::invalid_argument("max word length must be in [1, " +
                                std::to_string(kMaxEnumerateLength) + "]");
  }
  // Total word count sum_{l=1}^{max_len} B^l, checked before materializing.
  std::size_t total = 0;
  std::size_t layer = 1;
  for (unsigned l = 1; l <= max_len; ++l) {
    layer *= base;
    total += layer;
    if (total > max_words) {
      throw std::length_error("word corpus exceeds the limit of " + std::to_string(max_words));
    }
  }
  const std::vector<Word> words = all_words(base, max_len);
  std::vector<ProductSpec> specs;
  specs.reserve(words.size());
  for (const auto& w : words) specs.emplace_back(base, w, a, b);

  std::vector<std::optional<VerifyReport>> slots(specs.size());
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < static_cast<long>(specs.size()); ++i) {
    try {
      slots[static_cast<std::size_t>(i)] = verify(specs[static_cast<std::size_t>(i)], options);
    } catch (...) {
#pragma omp critical(digitblock_enumerate_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<VerifyReport> reports;
  reports.reserve(slots.size());
  for (auto& s : slots) reports.push_back(std::move(*s));
  return reports;
}

}  // namespace digitblock
