#include "digitblock/closed_form.hpp"

#include <stdexcept>

#include "digitblock/errors.hpp"

namespace digitblock {

namespace {

mpz_class power(unsigned base, std::size_t exponent) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, exponent);
  return out;
}

Rational ratio(const mpz_class& num, const mpz_class& den) {
  return Rational(mpq_class(num, den));
}

}  // namespace

GammaExpr closed_form_base2(const Word& w) {
  if (w.base() != 2) throw BaseMismatch("closed_form_base2 needs a binary word");
  const WordClass cls = classify(w);
  if (cls.kind == WordKind::AllZeros) {
    const std::size_t j = cls.zeros;
    const Rational half_step = ratio(1, power(2, j + 1));
    return GammaExpr(ratio(power(2, j + 2), 1), {ratio(1, power(2, j))}, {half_step, half_step});
  }
  const mpz_class v = mpz_class(word_value(w));
  const mpz_class scale = power(2, w.length());
  const Rational mid = ratio(2 * v + 1, 2 * scale);
  return GammaExpr(1, {ratio(v, scale), ratio(v + 1, scale)}, {mid, mid});
}

GammaExpr closed_form_baseB(const ProductSpec& spec) {
  const Word& w = spec.word();
  const WordClass cls = classify(w);
  Rational shift;
  mpz_class scale;
  if (cls.kind == WordKind::AllZeros) {
    shift = 1;
    scale = power(spec.base(), cls.zeros + 1);
  } else {
    shift = ratio(mpz_class(word_value(w)), power(spec.base(), w.length()));
    scale = power(spec.base(), w.length() + 1);
  }
  std::vector<Rational> num;
  std::vector<Rational> den;
  const Rational inv_scale = ratio(1, scale);
  for (std::size_t i = 0; i < spec.a().size(); ++i) {
    num.push_back(shift + spec.b()[i] * inv_scale);
    den.push_back(shift + spec.a()[i] * inv_scale);
  }
  return GammaExpr(1, std::move(num), std::move(den));
}

}  // namespace digitblock
