#include "digitblock/gamma_expr.hpp"

#include <algorithm>
#include <stdexcept>

#include "digitblock/errors.hpp"
#include "digitblock/gamma.hpp"
#include "digitblock/log_sum.hpp"

namespace digitblock {

namespace {

void require_positive_argument(const Rational& x) {
  if (x.is_nonpositive_integer()) throw PoleError("Gamma argument " + x.to_string() + " is a pole");
  if (x.sign() < 0) throw std::domain_error("Gamma argument " + x.to_string() + " is negative");
}

// Removes the multiset intersection of two sorted vectors from both.
void cancel_common(std::vector<Rational>& num, std::vector<Rational>& den) {
  std::vector<Rational> keep_num;
  std::vector<Rational> keep_den;
  auto i = num.begin();
  auto j = den.begin();
  while (i != num.end() && j != den.end()) {
    if (*i < *j) {
      keep_num.push_back(*i++);
    } else if (*j < *i) {
      keep_den.push_back(*j++);
    } else {
      ++i;
      ++j;
    }
  }
  keep_num.insert(keep_num.end(), i, num.end());
  keep_den.insert(keep_den.end(), j, den.end());
  num = std::move(keep_num);
  den = std::move(keep_den);
}

std::string render_factors(const std::vector<Rational>& args) {
  std::string out;
  for (std::size_t i = 0; i < args.size();) {
    std::size_t run = 1;
    while (i + run < args.size() && args[i + run] == args[i]) ++run;
    if (!out.empty()) out += " * ";
    out += "G(" + args[i].to_string() + ")";
    if (run > 1) out += "^" + std::to_string(run);
    i += run;
  }
  return out;
}

nlohmann::json rationals_to_json(const std::vector<Rational>& xs) {
  auto arr = nlohmann::json::array();
  for (const auto& x : xs) arr.push_back(x.to_fraction_string());
  return arr;
}

std::vector<Rational> rationals_from_json(const nlohmann::json& j) {
  std::vector<Rational> out;
  for (const auto& x : j) out.push_back(Rational::parse(x.get<std::string>()));
  return out;
}

BigReal sum_log_gamma(const std::vector<Rational>& args, long bits) {
  BigReal total(bits);
  for (const auto& x : args) total += log_gamma(x, bits);
  return total;
}

}  // namespace

GammaExpr::GammaExpr(Rational prefactor, std::vector<Rational> num, std::vector<Rational> den)
    : prefactor_(std::move(prefactor)), num_(std::move(num)), den_(std::move(den)) {
  for (const auto& x : num_) require_positive_argument(x);
  for (const auto& x : den_) require_positive_argument(x);
  // Gamma(1) = Gamma(2) = 1.
  auto is_unit = [](const Rational& x) { return x == Rational(1) || x == Rational(2); };
  std::erase_if(num_, is_unit);
  std::erase_if(den_, is_unit);
  std::sort(num_.begin(), num_.end());
  std::sort(den_.begin(), den_.end());
  cancel_common(num_, den_);
}

std::string GammaExpr::to_text() const {
  std::string out;
  if (prefactor_ != Rational(1) || num_.empty()) out = prefactor_.to_string();
  if (!num_.empty()) {
    if (!out.empty()) out += " * ";
    out += render_factors(num_);
  }
  if (!den_.empty()) out += " / (" + render_factors(den_) + ")";
  return out;
}

nlohmann::json GammaExpr::to_json() const {
  return {{"prefactor", prefactor_.to_fraction_string()},
          {"num", rationals_to_json(num_)},
          {"den", rationals_to_json(den_)}};
}

GammaExpr GammaExpr::from_json(const nlohmann::json& j) {
  return GammaExpr(Rational::parse(j.at("prefactor").get<std::string>()),
                   rationals_from_json(j.at("num")), rationals_from_json(j.at("den")));
}

GammaExpr operator*(const GammaExpr& lhs, const GammaExpr& rhs) {
  auto num = lhs.num_;
  num.insert(num.end(), rhs.num_.begin(), rhs.num_.end());
  auto den = lhs.den_;
  den.insert(den.end(), rhs.den_.begin(), rhs.den_.end());
  return GammaExpr(lhs.prefactor_ * rhs.prefactor_, std::move(num), std::move(den));
}

GammaExpr operator/(const GammaExpr& lhs, const GammaExpr& rhs) {
  auto num = lhs.num_;
  num.insert(num.end(), rhs.den_.begin(), rhs.den_.end());
  auto den = lhs.den_;
  den.insert(den.end(), rhs.num_.begin(), rhs.num_.end());
  return GammaExpr(lhs.prefactor_ / rhs.prefactor_, std::move(num), std::move(den));
}

BigReal eval_gamma_expr(const GammaExpr& e, long precision_bits) {
  const long internal = precision_bits + kGuardBits;
  const BigReal log_ratio = sum_log_gamma(e.numerator_args(), internal) -
                            sum_log_gamma(e.denominator_args(), internal);
  return (BigReal(e.prefactor(), internal) * exp(log_ratio)).rounded(precision_bits);
}

GammaRatioProduct gamma_ratio_product(const std::vector<Rational>& a,
                                      const std::vector<Rational>& b, std::uint64_t terms,
                                      long precision_bits) {
  if (a.empty() || a.size() != b.size()) {
    throw std::invalid_argument("parameter lists must be nonempty and of equal length");
  }
  Rational sum_a;
  Rational sum_b;
  mpz_class common = 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    require_positive_argument(a[i]);
    require_positive_argument(b[i]);
    sum_a += a[i];
    sum_b += b[i];
    common = lcm(common, a[i].denominator());
    common = lcm(common, b[i].denominator());
  }
  if (sum_a != sum_b) {
    throw BalanceError("sum of a (" + sum_a.to_string() + ") differs from sum of b (" +
                       sum_b.to_string() + ")");
  }

  // Scaling every n + x by the common denominator keeps each factor integral.
  std::vector<mpz_class> scaled_a;
  std::vector<mpz_class> scaled_b;
  for (std::size_t i = 0; i < a.size(); ++i) {
    scaled_a.push_back(a[i].numerator() * (common / a[i].denominator()));
    scaled_b.push_back(b[i].numerator() * (common / b[i].denominator()));
  }
  TermFn term = [&](std::uint64_t n, TermRatio& out) {
    mpz_class qn = common;
    qn *= static_cast<unsigned long>(n);
    out.weight = 1;
    out.num = 1;
    out.den = 1;
    for (std::size_t i = 0; i < scaled_a.size(); ++i) {
      out.num *= qn + scaled_a[i];
      out.den *= qn + scaled_b[i];
    }
  };

  const long internal = precision_bits + kGuardBits;
  const BigReal log_partial = log_sum_serial(term, 0, terms, internal);
  return {exp(log_partial).rounded(precision_bits),
          eval_gamma_expr(GammaExpr(1, b, a), precision_bits)};
}

}  // namespace digitblock
