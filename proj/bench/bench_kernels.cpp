#include <benchmark/benchmark.h>

#include "forestdyn/forest_graph.hpp"
#include "forestdyn/matrix_tree.hpp"
#include "forestdyn/roots.hpp"
#include "forestdyn/structure.hpp"

using namespace forestdyn;

namespace {

Graph host(std::int64_t which) {
  switch (which) {
    case 0: return complete_graph(5);
    case 1: return cartesian_product(complete_graph(3), complete_graph(3));
    default: return complete_graph(6);
  }
}

void BM_AdjacencyBucketed(benchmark::State& state) {
  const auto fam = maximal_forests(host(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(forest_adjacency(fam));
  state.counters["forests"] = static_cast<double>(fam.size());
}

void BM_AdjacencyPairwise(benchmark::State& state) {
  const auto fam = maximal_forests(host(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(forest_adjacency_pairwise(fam));
  state.counters["forests"] = static_cast<double>(fam.size());
}

IntMatrix laplacian_of_fk4() {
  const Graph f = build_forest_graph(complete_graph(4)).graph;
  const auto all = components(f);
  return reduced_laplacian(f, all.front());
}

void BM_DeterminantMultimodular(benchmark::State& state) {
  const auto m = state.range(0) == 0 ? laplacian_of_fk4() : reduced_laplacian(complete_graph(40), components(complete_graph(40)).front());
  for (auto _ : state) benchmark::DoNotOptimize(determinant_multimodular(m));
}

void BM_DeterminantBareiss(benchmark::State& state) {
  const auto m = state.range(0) == 0 ? laplacian_of_fk4() : reduced_laplacian(complete_graph(40), components(complete_graph(40)).front());
  for (auto _ : state) benchmark::DoNotOptimize(determinant_bareiss(m));
}

void BM_RootScreen(benchmark::State& state) {
  RootSearchOptions opt;
  opt.parallel = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(find_roots(complete_graph(4), opt));
}

}  // namespace

BENCHMARK(BM_AdjacencyBucketed)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AdjacencyPairwise)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DeterminantMultimodular)->DenseRange(0, 1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DeterminantBareiss)->DenseRange(0, 1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RootScreen)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
