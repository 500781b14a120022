// Dense reference vs sector kernels (serial, parallel), and the phase sweep
// serial vs parallel.

#include <benchmark/benchmark.h>

#include "su11/core.hpp"
#include "su11/fock.hpp"
#include "su11/numerics.hpp"
#include "su11/sweep.hpp"

using namespace su11;

namespace {

const InterferometerAngles kAngles(0.8, 0.9);

void BM_dense_unitary(benchmark::State& state) {
  const auto g = fock::reference::dense_generators(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(fock::reference::dense_unitary_product(kAngles, g));
}

void BM_sector_unitary(benchmark::State& state, Execution exec) {
  const fock::FockWorkspace ws(static_cast<int>(state.range(0)), exec);
  for (auto _ : state) benchmark::DoNotOptimize(fock::unitary_product(kAngles, ws));
}

void BM_sector_moments(benchmark::State& state, Execution exec) {
  const fock::FockWorkspace ws(static_cast<int>(state.range(0)), exec);
  const fock::ThermalState rho = fock::thermal_state(ws, 1.0, 1.0);
  const fock::Generators g = fock::build_generators(ws);
  const fock::OperatorMatrix u = fock::unitary_product(kAngles, ws);
  for (auto _ : state) benchmark::DoNotOptimize(fock::evolved_moments(u, g.n, rho));
}

void BM_sensitivity_sweep(benchmark::State& state, Execution exec) {
  const EngineConfig engine(0.1, 1.0, 2.0, 0.01);
  const auto phis = linear_grid(1e-6, numerics::kPi - 1e-6, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sensitivity_sweep(engine, 3.4, phis, DerivativeMode::chain, exec));
}

}  // namespace

BENCHMARK(BM_dense_unitary)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_sector_unitary, serial, Execution::serial)->Arg(20)->Arg(60)->Arg(120)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_sector_unitary, parallel, Execution::parallel)->Arg(20)->Arg(60)->Arg(120)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_sector_moments, serial, Execution::serial)->Arg(120)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_sector_moments, parallel, Execution::parallel)->Arg(120)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_sensitivity_sweep, serial, Execution::serial)->Arg(2000)->Arg(200000);
BENCHMARK_CAPTURE(BM_sensitivity_sweep, parallel, Execution::parallel)->Arg(2000)->Arg(200000);

BENCHMARK_MAIN();
