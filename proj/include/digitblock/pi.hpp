#pragma once

#include "digitblock/bigreal.hpp"

namespace digitblock {

// pi from Machin's formula pi = 16 atan(1/5) - 4 atan(1/239), summed in
// fixed-point integer arithmetic. Does not touch the Gamma code or MPFR's
// built-in constant, so it can serve as an independent reference.
BigReal machin_pi(long precision_bits);

}  // namespace digitblock
