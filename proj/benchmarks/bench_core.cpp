#include <benchmark/benchmark.h>

#include "sepforest/boolring.hpp"
#include "sepforest/connectivity.hpp"
#include "sepforest/lazy.hpp"
#include "sepforest/planar.hpp"
#include "sepforest/tutte.hpp"

using namespace sepforest;

namespace {

Graph grid(int rows, int cols) {
  std::vector<Edge> es;
  auto id = [cols](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) es.push_back({id(r, c), id(r, c + 1)});
      if (r + 1 < rows) es.push_back({id(r, c), id(r + 1, c)});
    }
  return Graph::from_edges(es);
}

Graph dodecahedron() {
  std::vector<int> code{10, 7, 4, -4, -7, 10, -4, 7, -7, 4};
  std::vector<Edge> es;
  for (int i = 0; i < 20; ++i) es.push_back(make_edge(i, (i + 1) % 20));
  for (int i = 0; i < 20; ++i)
    es.push_back(make_edge(i, ((i + code[i % 10]) % 20 + 20) % 20));
  return Graph::from_edges(es);
}

}  // namespace

static void BM_LazyBall(benchmark::State& state) {
  auto lazy = LazyGraph::grid2d();
  for (auto _ : state) {
    auto b = ball(lazy, lazy.basepoint(), static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(b.graph.vertex_count());
  }
}
BENCHMARK(BM_LazyBall)->Arg(4)->Arg(8);

static void BM_EnumerateSeparations(benchmark::State& state) {
  Graph g = grid(3, 3);
  for (auto _ : state) {
    auto seps = enumerate_separations(g, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(seps.size());
  }
}
BENCHMARK(BM_EnumerateSeparations)->Arg(2)->Arg(3);

static void BM_TutteDecomposition(benchmark::State& state) {
  Graph g = grid(3, 4);
  for (auto _ : state) {
    auto td = tutte_decomposition(g);
    benchmark::DoNotOptimize(td.bags.size());
  }
}
BENCHMARK(BM_TutteDecomposition);

static void BM_Planarity(benchmark::State& state) {
  Graph g = dodecahedron();
  for (auto _ : state) {
    auto pr = is_planar(g);
    benchmark::DoNotOptimize(pr.planar);
  }
}
BENCHMARK(BM_Planarity);

static void BM_TwoBasis(benchmark::State& state) {
  Graph g = dodecahedron();
  for (auto _ : state) {
    auto basis = two_basis(g);
    benchmark::DoNotOptimize(basis.cycles.size());
  }
}
BENCHMARK(BM_TwoBasis);

static void BM_MaxDisjointPaths(benchmark::State& state) {
  Graph g = grid(5, 5);
  for (auto _ : state) {
    int k = max_internally_disjoint_paths(g, 0, 24);
    benchmark::DoNotOptimize(k);
  }
}
BENCHMARK(BM_MaxDisjointPaths);

static void BM_SubringClosure(benchmark::State& state) {
  Graph g = grid(3, 3);
  auto gens = bounded_coboundary_elements(g, 2);
  for (auto _ : state) {
    auto closure = subring_closure(g, gens);
    benchmark::DoNotOptimize(closure.elements.size());
  }
}
BENCHMARK(BM_SubringClosure);

BENCHMARK_MAIN();
