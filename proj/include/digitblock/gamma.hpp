#pragma once

// Real Gamma function for positive arguments at arbitrary precision.
//
// Uses Spouge's approximation
//   Gamma(z+1) = (z+a)^(z+1/2) e^-(z+a) [c_0 + sum_{k=1}^{a-1} c_k / (z+k) + eps]
// with the parameter a picked from the working precision so that |eps| stays
// below the target, and arguments below 1 shifted up by Gamma(x) = Gamma(x+1)/x.
// Results have relative error <= 2^(8 - precision_bits).

#include "digitblock/bigreal.hpp"
#include "digitblock/rational.hpp"

namespace digitblock {

BigReal log_gamma(const Rational& x, long precision_bits);
BigReal log_gamma(const BigReal& x, long precision_bits);

BigReal gamma(const Rational& x, long precision_bits);
BigReal gamma(const BigReal& x, long precision_bits);

// Spouge parameter a used for a given working precision (exposed for tests).
long spouge_parameter(long working_bits);

}  // namespace digitblock
