// Serial reference vs. OpenMP chunked accumulation of the digit-block products.

#include <benchmark/benchmark.h>

#include "digitblock/product_eval.hpp"
#include "digitblock/rivoal.hpp"

namespace {

using namespace digitblock;

void BM_RivoalSerial(benchmark::State& state) {
  const auto terms = static_cast<std::uint64_t>(state.range(0));
  const TermFn term = grouped_term(Base2Weight::DigitCount);
  for (auto _ : state) {
    benchmark::DoNotOptimize(log_sum_serial(term, 1, terms, 160));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_RivoalParallel(benchmark::State& state) {
  const auto terms = static_cast<std::uint64_t>(state.range(0));
  const TermFn term = grouped_term(Base2Weight::DigitCount);
  for (auto _ : state) {
    benchmark::DoNotOptimize(log_sum_parallel(term, 1, terms, 160));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_Base3SpecSerial(benchmark::State& state) {
  const auto spec = ProductSpec::with_default_params(Word::parse("2", 3));
  const auto terms = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval_lhs_log(spec, terms, 128, Execution::Serial));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_Base3SpecParallel(benchmark::State& state) {
  const auto spec = ProductSpec::with_default_params(Word::parse("2", 3));
  const auto terms = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval_lhs_log(spec, terms, 128, Execution::Parallel));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_RivoalSerial)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RivoalParallel)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Base3SpecSerial)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Base3SpecParallel)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
