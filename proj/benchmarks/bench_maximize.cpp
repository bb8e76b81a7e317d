#include <benchmark/benchmark.h>

#include "svet/coeffs.hpp"
#include "svet/graph.hpp"
#include "svet/strategy.hpp"

namespace {

void BM_MaxOverGraphFig1iii(benchmark::State& state) {
  const svet::CommGraph g = svet::catalog("fig1_iii");
  const svet::CoefficientTable mu = svet::svetlichny_coeffs(4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(svet::max_over_graph(g, mu));
  }
}
BENCHMARK(BM_MaxOverGraphFig1iii);

void BM_MaxOverGraphComplete(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const svet::CommGraph g = svet::complete_graph(m);
  const svet::CoefficientTable mu = svet::svetlichny_coeffs(m);
  for (auto _ : state) {
    benchmark::DoNotOptimize(svet::max_over_graph(g, mu));
  }
}
BENCHMARK(BM_MaxOverGraphComplete)->Arg(3)->Arg(4);

void BM_BruteForceFig1iia(benchmark::State& state) {
  // four parties with two-input tables each: 65536 strategies
  const svet::CommGraph g = svet::catalog("fig1_iia");
  const svet::CoefficientTable mu = svet::svetlichny_coeffs(4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(svet::brute_force_max(g, mu));
  }
}
BENCHMARK(BM_BruteForceFig1iia);

void BM_ParityBasis(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const svet::CommGraph g = svet::complete_graph(m);
  for (auto _ : state) {
    benchmark::DoNotOptimize(svet::parity_basis(g));
  }
}
BENCHMARK(BM_ParityBasis)->Arg(6)->Arg(10)->Arg(12);

void BM_TpStrategy(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const svet::CommGraph g = svet::complete_graph(m);
  for (auto _ : state) {
    benchmark::DoNotOptimize(svet::tp_strategy(g));
  }
}
BENCHMARK(BM_TpStrategy)->Arg(6)->Arg(10)->Arg(12);

}  // namespace
