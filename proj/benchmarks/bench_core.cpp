#include <benchmark/benchmark.h>

#include "ticap/entropy.hpp"
#include "ticap/jaynes_cummings.hpp"
#include "ticap/tic.hpp"

using namespace ticap;

static void BM_Tic(benchmark::State& state) {
  const ThermalContext ctx = ThermalContext::from_lambda(0.4);
  const QubitState source(0.3, Complex(0.25, 0.1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(tic(source, ctx).capacity);
  }
}
BENCHMARK(BM_Tic);

static void BM_OracleTic(benchmark::State& state) {
  const ThermalContext ctx = ThermalContext::from_lambda(0.4);
  const QubitState source(0.3, Complex(0.25, 0.1));
  const int grid_n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle_tic(source, ctx, grid_n));
  }
}
BENCHMARK(BM_OracleTic)->Arg(51)->Arg(201);

static void BM_VonNeumannEntropyDense(benchmark::State& state) {
  const DensityMatrix rho = QubitState(0.3, Complex(0.25, 0.1)).to_density_matrix();
  for (auto _ : state) {
    benchmark::DoNotOptimize(von_neumann_entropy(rho));
  }
}
BENCHMARK(BM_VonNeumannEntropyDense);

static void BM_EvolveReduced(benchmark::State& state) {
  const JCConfig cfg = JCConfig::defaults(0.5);
  const QubitState source(0.1, Complex(0.2, 0.1));
  double tau = 0.0;
  for (auto _ : state) {
    tau += 1e-4;
    benchmark::DoNotOptimize(evolve_reduced(source, tau, cfg));
  }
}
BENCHMARK(BM_EvolveReduced);

static void BM_AchievedCapacity(benchmark::State& state) {
  const ThermalContext ctx = ThermalContext::from_lambda(0.5);
  const JCConfig cfg = JCConfig::defaults(0.5);
  const QubitState source(0.1, Complex(0.2, 0.1));
  double tau = 0.0;
  for (auto _ : state) {
    tau += 1e-4;
    benchmark::DoNotOptimize(achieved_capacity(source, tau, ctx, cfg));
  }
}
BENCHMARK(BM_AchievedCapacity);

BENCHMARK_MAIN();
