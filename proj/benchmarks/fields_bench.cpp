#include <benchmark/benchmark.h>

#include "leray/fields.hpp"

using namespace leray;

static void BM_LoopPotential(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(fields::loop_potential(1.0, 1.0, {0.8, 0.3, 0.2}, {}));
}
BENCHMARK(BM_LoopPotential);

static void BM_LoopField(benchmark::State& state) {
  fields::VectorPotential A = [](const Point3& y, double) { return fields::loop_potential(1.0, 1.0, y, {}).A; };
  for (auto _ : state) benchmark::DoNotOptimize(fields::derive_B(A, {0.8, 0.3, 0.2}, 0.0, 1e-4));
}
BENCHMARK(BM_LoopField);

static void BM_HelixPotential(benchmark::State& state) {
  const double turns = static_cast<double>(state.range(0));
  const double a = 0.1, p = 0.1, L = turns * 2.0 * 3.141592653589793 / sources::helix_wavenumber(a, p);
  for (auto _ : state) benchmark::DoNotOptimize(fields::helix_potential(a, p, L, 1.0, {0.15, 0.05, 0.3}, {}));
}
BENCHMARK(BM_HelixPotential)->Arg(1)->Arg(10)->Arg(50);

static void BM_Solenoid(benchmark::State& state) {
  const auto method = state.range(0) ? fields::SolenoidMethod::numeric_2d : fields::SolenoidMethod::closed_inner;
  for (auto _ : state)
    benchmark::DoNotOptimize(fields::solenoid_potential(0.1, 0.05, 1.0, 1.0, {0.05, 0.02, 0.5}, {}, {}, method));
}
BENCHMARK(BM_Solenoid)->Arg(0)->Arg(1);

static void BM_PlateWire(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(fields::plate_wire_potential(0.3, 1e-9, 1.0, {0.01, 0, 0.6}, {}));
}
BENCHMARK(BM_PlateWire);

static void BM_LienardWiechert(benchmark::State& state) {
  const auto src = sources::make_circular_charge(1e-9, {0, 0, 0}, 0.2, 1e8);
  double t = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(fields::lienard_wiechert(src, {1, 0.5, 0.2}, t));
    t += 1e-12;
  }
}
BENCHMARK(BM_LienardWiechert);
BENCHMARK_MAIN();
