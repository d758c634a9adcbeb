#include <benchmark/benchmark.h>

#include "lop/facets.hpp"
#include "lop/polytope.hpp"
#include "lop/repdecomp.hpp"

namespace {

void BM_Dot(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto a = lop::tk_func(n, 1, 2).values();
  const auto b = lop::v_func(n, 1).values();
  for (auto _ : state) benchmark::DoNotOptimize(lop::dot(a, b));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(a.size()));
}
BENCHMARK(BM_Dot)->DenseRange(4, 6);

void BM_BuildBundle(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lop::build_bundle(n));
}
BENCHMARK(BM_BuildBundle)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_ProjectToPermutahedron(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lop::project_to_permutahedron(n));
}
BENCHMARK(BM_ProjectToPermutahedron)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_ProjectToPrevious(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lop::project_to_previous(n));
}
BENCHMARK(BM_ProjectToPrevious)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_EnumerateFacets(benchmark::State& state) {
  const auto vs = lop::lop_vertices(static_cast<int>(state.range(0)), lop::Basis::K);
  for (auto _ : state) benchmark::DoNotOptimize(lop::enumerate_facets(vs));
}
BENCHMARK(BM_EnumerateFacets)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
