#include "digitblock/log_sum.hpp"

#include <stdexcept>

#include <omp.h>

namespace digitblock {

namespace {

// Scratch state for one accumulation; keeps the inner loop allocation-free.
class Accumulator {
 public:
  explicit Accumulator(long bits) : sum_(bits), ratio_(bits), log_(bits) {}

  void add(const TermFn& term, std::uint64_t n) {
    term(n, factor_);
    if (factor_.weight == 0) return;
    diff_ = factor_.num - factor_.den;
    if (diff_ == 0) return;
    if (factor_.den == 0) throw std::domain_error("zero denominator in product term");
    mpfr_set_z(ratio_.raw(), diff_.get_mpz_t(), MPFR_RNDN);
    mpfr_div_z(ratio_.raw(), ratio_.raw(), factor_.den.get_mpz_t(), MPFR_RNDN);
    mpfr_log1p(log_.raw(), ratio_.raw(), MPFR_RNDN);
    mpfr_mul_si(log_.raw(), log_.raw(), factor_.weight, MPFR_RNDN);
    mpfr_add(sum_.raw(), sum_.raw(), log_.raw(), MPFR_RNDN);
  }

  const BigReal& sum() const { return sum_; }

 private:
  BigReal sum_;
  BigReal ratio_;
  BigReal log_;
  TermRatio factor_;
  mpz_class diff_;
};

}  // namespace

BigReal log_sum_serial(const TermFn& term, std::uint64_t first, std::uint64_t last,
                       long accumulate_bits) {
  Accumulator acc(accumulate_bits);
  for (std::uint64_t n = first; n <= last && n >= first; ++n) acc.add(term, n);
  return acc.sum();
}

BigReal log_sum_parallel(const TermFn& term, std::uint64_t first, std::uint64_t last,
                         long accumulate_bits, unsigned chunks) {
  if (last < first) return BigReal(accumulate_bits);
  if (chunks == 0) chunks = 1;
  const std::uint64_t count = last - first + 1;
  if (count < chunks) chunks = static_cast<unsigned>(count);
  const std::uint64_t per = count / chunks;
  const std::uint64_t extra = count % chunks;

  std::vector<BigReal> partial(chunks, BigReal(accumulate_bits));
  std::exception_ptr failure;

#pragma omp parallel for schedule(dynamic, 1)
  for (long c = 0; c < static_cast<long>(chunks); ++c) {
    const auto idx = static_cast<std::uint64_t>(c);
    const std::uint64_t lo = first + idx * per + std::min(idx, extra);
    const std::uint64_t hi = lo + per + (idx < extra ? 1 : 0) - 1;
    try {
      Accumulator acc(accumulate_bits);
      for (std::uint64_t n = lo; n <= hi; ++n) acc.add(term, n);
      partial[idx] = acc.sum();
    } catch (...) {
#pragma omp critical(digitblock_log_sum_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  BigReal total(accumulate_bits);
  for (const auto& p : partial) mpfr_add(total.raw(), total.raw(), p.raw(), MPFR_RNDN);
  return total;
}

BigReal log_sum(const TermFn& term, std::uint64_t first, std::uint64_t last,
                long accumulate_bits, Execution mode) {
  return mode == Execution::Serial ? log_sum_serial(term, first, last, accumulate_bits)
                                   : log_sum_parallel(term, first, last, accumulate_bits);
}

std::vector<BigReal> log_sum_checkpoints(const TermFn& term, std::uint64_t first,
                                         const std::vector<std::uint64_t>& checkpoints,
                                         long accumulate_bits) {
  std::vector<BigReal> out;
  out.reserve(checkpoints.size());
  Accumulator acc(accumulate_bits);
  std::uint64_t next = first;
  for (std::uint64_t stop : checkpoints) {
    if (stop + 1 < next) throw std::invalid_argument("checkpoints must be ascending");
    for (; next <= stop; ++next) acc.add(term, next);
    out.push_back(acc.sum());
  }
  return out;
}

}  // namespace digitblock
