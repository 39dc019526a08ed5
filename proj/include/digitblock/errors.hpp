#pragma once

#include <stdexcept>
#include <string>

namespace digitblock {

// Argument lands on a Gamma pole (0, -1, -2, ...).
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Sum of the a-parameters differs from the sum of the b-parameters.
class BalanceError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class BaseMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace digitblock
