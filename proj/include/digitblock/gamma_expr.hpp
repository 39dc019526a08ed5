#pragma once

// Symbolic closed forms: prefactor * prod Gamma(num_i) / prod Gamma(den_j)
// with positive rational arguments.

#include <string>
#include <vector>

#include "digitblock/bigreal.hpp"
#include "digitblock/rational.hpp"
#include <json.hpp>

namespace digitblock {

class GammaExpr {
 public:
  GammaExpr() : prefactor_(1) {}
  // Throws PoleError for arguments in {0, -1, ...} and std::domain_error for
  // other non-positive arguments. Arguments present on both sides cancel, and
  // factors G(1) and G(2) are dropped.
  GammaExpr(Rational prefactor, std::vector<Rational> num, std::vector<Rational> den);

  const Rational& prefactor() const { return prefactor_; }
  // Sorted ascending.
  const std::vector<Rational>& numerator_args() const { return num_; }
  const std::vector<Rational>& denominator_args() const { return den_; }

  // Canonical text, e.g. "8 * G(1/2) / (G(1/4)^2)".
  std::string to_text() const;
  nlohmann::json to_json() const;
  static GammaExpr from_json(const nlohmann::json& j);

  friend GammaExpr operator*(const GammaExpr& lhs, const GammaExpr& rhs);
  friend GammaExpr operator/(const GammaExpr& lhs, const GammaExpr& rhs);
  friend bool operator==(const GammaExpr&, const GammaExpr&) = default;

 private:
  Rational prefactor_;
  std::vector<Rational> num_;
  std::vector<Rational> den_;
};

// prefactor * exp(sum log Gamma(num) - sum log Gamma(den)).
BigReal eval_gamma_expr(const GammaExpr& e, long precision_bits);

struct GammaRatioProduct {
  BigReal partial;  // prod_{n=0}^{N} prod_i (n + a_i) / (n + b_i)
  BigReal closed;   // prod Gamma(b_i) / prod Gamma(a_i)
};

// Truncated and closed forms of the classical balanced Gamma product. Requires
// |a| = |b| >= 1, sum a = sum b exactly (BalanceError otherwise), and positive
// parameters (PoleError / std::domain_error otherwise).
GammaRatioProduct gamma_ratio_product(const std::vector<Rational>& a,
                                      const std::vector<Rational>& b, std::uint64_t terms,
                                      long precision_bits);

}  // namespace digitblock
