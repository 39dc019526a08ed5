#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "digitblock/bigreal.hpp"
#include "digitblock/product_spec.hpp"

namespace digitblock {

// Outcome of comparing a truncated product with its closed form.
//
// pass <=> rel_gap <= max(tolerance, tail_factor * tail_estimate).
// All numeric fields are held at precision_bits.
struct VerifyReport {
  std::string target;  // "rivoal", "companion" or "word"
  std::optional<ProductSpec> spec;
  std::uint64_t terms_used = 0;
  long precision_bits = 128;
  BigReal lhs;
  BigReal rhs;
  BigReal abs_gap;
  BigReal rel_gap;
  BigReal tail_estimate;
  double tolerance = 1e-3;
  double tail_factor = 0.0;
  bool pass = false;

  std::string label() const;

  nlohmann::json to_json() const;
  static VerifyReport from_json(const nlohmann::json& j);

  static std::string csv_header();
  std::string csv_row() const;
};

}  // namespace digitblock
