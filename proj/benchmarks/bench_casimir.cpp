#include <benchmark/benchmark.h>

#include "casimir/engine.hpp"
#include "casimir/material_io.hpp"
#include "casimir/modes.hpp"

namespace {

const casimir::QuadratureSpec spec{};

void BM_MatsubaraTerm(benchmark::State& state) {
  const casimir::PlateSystem sys(1e-6, 300.0);
  const auto fam = casimir::dielectric_family(casimir::material_preset("gold"));
  for (auto _ : state)
    benchmark::DoNotOptimize(casimir::matsubara_term(1, sys, fam, spec));
}
BENCHMARK(BM_MatsubaraTerm);

void BM_FreeEnergyIdeal(benchmark::State& state) {
  const casimir::PlateSystem sys(1e-6, 300.0);
  const auto fam = casimir::impedance_family(casimir::MaterialModel::ideal_metal());
  for (auto _ : state)
    benchmark::DoNotOptimize(casimir::free_energy(sys, fam, spec).value);
}
BENCHMARK(BM_FreeEnergyIdeal);

void BM_FreeEnergyGoldDrude(benchmark::State& state) {
  const casimir::PlateSystem sys(1e-6, static_cast<double>(state.range(0)));
  const auto fam = casimir::dielectric_family(casimir::material_preset("gold"));
  for (auto _ : state)
    benchmark::DoNotOptimize(casimir::free_energy(sys, fam, spec).value);
}
BENCHMARK(BM_FreeEnergyGoldDrude)->Arg(300)->Arg(30);

void BM_ZeroTEnergy(benchmark::State& state) {
  const auto fam = casimir::dielectric_family(casimir::material_preset("gold"));
  for (auto _ : state)
    benchmark::DoNotOptimize(casimir::zero_T_energy(1e-6, fam, spec));
}
BENCHMARK(BM_ZeroTEnergy);

void BM_Eigenfrequencies(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(
        casimir::eigenfrequencies(1e-6, 5e6, 0.1, casimir::Polarization::Perpendicular, 10));
}
BENCHMARK(BM_Eigenfrequencies);

}  // namespace

BENCHMARK_MAIN();
