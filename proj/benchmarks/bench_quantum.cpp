#include <benchmark/benchmark.h>

#include <numbers>

#include "svet/quantum.hpp"

namespace {

svet::AngleSet spread_angles(int m) {
  svet::AngleSet a = svet::AngleSet::zeros(m);
  for (int i = 0; i < m; ++i)
    a.phi[i] = {0.3 * i, 0.3 * i + std::numbers::pi / 2};
  return a;
}

void BM_CorrelatorContraction(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const svet::AngleSet a = spread_angles(m);
  const svet::InputVector x(m, (1u << m) - 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(svet::correlator_contraction(a, x));
  }
}
BENCHMARK(BM_CorrelatorContraction)->Arg(4)->Arg(6)->Arg(8)->Arg(10);

void BM_QuantumValue(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const svet::AngleSet a = spread_angles(m);
  const svet::CoefficientTable mu = svet::svetlichny_coeffs(m);
  for (auto _ : state) {
    benchmark::DoNotOptimize(svet::quantum_value(a, mu));
  }
}
BENCHMARK(BM_QuantumValue)->Arg(4)->Arg(6)->Arg(8);

void BM_MeasurementTable(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const svet::AngleSet a = spread_angles(m);
  for (auto _ : state) {
    benchmark::DoNotOptimize(svet::measurement_table(a));
  }
}
BENCHMARK(BM_MeasurementTable)->Arg(4)->Arg(6)->Arg(8);

void BM_OptimizeAngles(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(svet::optimize_angles(m, 2, 1e-6, 11));
  }
}
BENCHMARK(BM_OptimizeAngles)->Arg(3)->Arg(4);

}  // namespace
