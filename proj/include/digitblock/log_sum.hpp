#pragma once

// Log-space accumulation of long weighted products
//
//   log prod_{n=first}^{last} (num(n) / den(n))^weight(n)
//
// where each factor is an exact ratio of integers. Every factor is reduced to
// log1p((num - den) / den), so factors close to 1 keep full relative accuracy.
//
// log_sum_serial is the reference: strict left-to-right accumulation.
// log_sum_parallel splits [first, last] into a fixed number of contiguous
// chunks, sums them under OpenMP and adds the chunk sums in order; the chunk
// count does not depend on the thread count, so its result is reproducible.

#include <cstdint>
#include <functional>
#include <vector>

#include <gmpxx.h>

#include "digitblock/bigreal.hpp"

namespace digitblock {

struct TermRatio {
  long weight = 0;  // factors with weight 0 are skipped
  mpz_class num;
  mpz_class den;
};

// Must be safe to call concurrently with distinct TermRatio objects.
using TermFn = std::function<void(std::uint64_t n, TermRatio& out)>;

enum class Execution { Serial, Parallel };

inline constexpr unsigned kDefaultChunks = 64;

BigReal log_sum_serial(const TermFn& term, std::uint64_t first, std::uint64_t last,
                       long accumulate_bits);

BigReal log_sum_parallel(const TermFn& term, std::uint64_t first, std::uint64_t last,
                         long accumulate_bits, unsigned chunks = kDefaultChunks);

BigReal log_sum(const TermFn& term, std::uint64_t first, std::uint64_t last,
                long accumulate_bits, Execution mode);

// Running serial sums reported at each checkpoint (ascending, each >= first).
std::vector<BigReal> log_sum_checkpoints(const TermFn& term, std::uint64_t first,
                                         const std::vector<std::uint64_t>& checkpoints,
                                         long accumulate_bits);

}  // namespace digitblock
