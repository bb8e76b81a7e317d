#include <benchmark/benchmark.h>

#include "svet/coeffs.hpp"
#include "svet/nosignal.hpp"
#include "svet/strategy.hpp"

namespace {

void BM_SvetlichnyClosed(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(svet::svetlichny_coeffs(m, svet::CoeffMethod::Closed));
  }
}
BENCHMARK(BM_SvetlichnyClosed)->Arg(6)->Arg(10)->Arg(12);

void BM_SvetlichnyRecursive(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(svet::svetlichny_coeffs(m, svet::CoeffMethod::Recursive));
  }
}
BENCHMARK(BM_SvetlichnyRecursive)->Arg(6)->Arg(10)->Arg(12);

void BM_EvaluateExactMixture(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const svet::CoefficientTable mu = svet::svetlichny_coeffs(m);
  const svet::CorrelationTable table =
      svet::parity_mixture(svet::tp_strategy(svet::complete_graph(m)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(svet::evaluate_exact(table, mu));
  }
}
BENCHMARK(BM_EvaluateExactMixture)->Arg(4)->Arg(6)->Arg(8);

void BM_CheckNosignalling(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const svet::CorrelationTable table =
      svet::parity_mixture(svet::tp_strategy(svet::complete_graph(m)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(svet::check_nosignalling(table, 0.0));
  }
}
BENCHMARK(BM_CheckNosignalling)->Arg(4)->Arg(5)->Arg(6);

}  // namespace
