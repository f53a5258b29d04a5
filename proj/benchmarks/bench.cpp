#include <benchmark/benchmark.h>

#include "repgrowth/census.hpp"
#include "repgrowth/enumerate.hpp"
#include "repgrowth/multiplicity.hpp"
#include "repgrowth/root_system.hpp"
#include "repgrowth/weyl_dim.hpp"
#include "repgrowth/zeta_bounds.hpp"

using namespace repgrowth;

static void BM_BuildE8(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(build(RootSystemId{Family::E, 8}));
}
BENCHMARK(BM_BuildE8);

static void BM_BuildA50(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(build(RootSystemId{Family::A, 50}));
}
BENCHMARK(BM_BuildA50);

static void BM_DimensionE8(benchmark::State& state) {
  RootSystemId id{Family::E, 8};
  CVector c{2, 1, 1, 1, 1, 1, 1, 3};
  dimension(id, c);  // warm the coefficient cache outside the loop
  for (auto _ : state) benchmark::DoNotOptimize(dimension(id, c));
}
BENCHMARK(BM_DimensionE8);

static void BM_IrrepsA2To100k(benchmark::State& state) {
  RootSystemId id{Family::A, 2};
  for (auto _ : state)
    benchmark::DoNotOptimize(irreps_up_to(id, 100000));
}
BENCHMARK(BM_IrrepsA2To100k);

static void BM_Zeta(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(riemann_zeta(1.125));
}
BENCHMARK(BM_Zeta);

static void BM_ZBoundA20(benchmark::State& state) {
  RootSystemId id{Family::A, 20};
  z_bound(id, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(z_bound(id, 1.0));
}
BENCHMARK(BM_ZBoundA20);

static void BM_WeightDiagramA2(benchmark::State& state) {
  RootSystemId id{Family::A, 2};
  CVector c{20, 20};  // degree 8000
  for (auto _ : state) benchmark::DoNotOptimize(weight_diagram(id, c));
}
BENCHMARK(BM_WeightDiagramA2);

static void BM_WeightDiagramF4(benchmark::State& state) {
  RootSystemId id{Family::F, 4};
  CVector c{2, 1, 1, 1};  // degree 52
  for (auto _ : state) benchmark::DoNotOptimize(weight_diagram(id, c));
}
BENCHMARK(BM_WeightDiagramF4);

static void BM_CensusCount60(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(census_count(60));
}
BENCHMARK(BM_CensusCount60);

BENCHMARK_MAIN();
