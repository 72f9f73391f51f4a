#include <benchmark/benchmark.h>

#include "bootperc/degeneracy.hpp"
#include "bootperc/generators.hpp"
#include "bootperc/minperc.hpp"
#include "bootperc/percolation.hpp"
#include "bootperc/potential.hpp"
#include "bootperc/sampling.hpp"

namespace {

using namespace bootperc;

// Average degree ~8 regardless of n.
Graph sparse_graph(std::size_t n) {
  return generate(GraphKind::gnp, {n, 8.0 / static_cast<double>(n)}, 42);
}

void BM_ComputeOrdering(benchmark::State& state) {
  const Graph g = sparse_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(compute_ordering(g));
  }
  state.SetComplexityN(static_cast<int64_t>(g.num_vertices() + g.num_edges()));
}
BENCHMARK(BM_ComputeOrdering)->RangeMultiplier(4)->Range(256, 65536)->Complexity();

void BM_Run(benchmark::State& state) {
  const Graph g = sparse_graph(static_cast<std::size_t>(state.range(0)));
  const std::size_t r = compute_ordering(g).d + 1;
  const VertexSet a0 = sample_a0(g, Bernoulli{0.3}, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(run(g, a0, r));
  }
  state.SetComplexityN(static_cast<int64_t>(g.num_vertices() + g.num_edges()));
}
BENCHMARK(BM_Run)->RangeMultiplier(4)->Range(256, 65536)->Complexity();

void BM_PotentialTrace(benchmark::State& state) {
  const Graph g = sparse_graph(static_cast<std::size_t>(state.range(0)));
  const DegeneracyOrdering ord = compute_ordering(g);
  const PercolationTrace trace = run(g, sample_a0(g, Bernoulli{0.3}, 1), ord.d + 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(compute_potential_trace(g, ord, trace));
  }
}
BENCHMARK(BM_PotentialTrace)->RangeMultiplier(4)->Range(256, 65536);

void BM_SmallestPercolatingSet(benchmark::State& state) {
  const Graph g = generate(GraphKind::random_tree,
                           {static_cast<std::size_t>(state.range(0))}, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(smallest_percolating_set(g, 2));
  }
}
BENCHMARK(BM_SmallestPercolatingSet)->DenseRange(10, 30, 10);

}  // namespace

BENCHMARK_MAIN();
