#include <benchmark/benchmark.h>

#include "ihara/edge_matrix.hpp"
#include "ihara/multigraph.hpp"
#include "ihara/poly.hpp"
#include "ihara/random_suite.hpp"
#include "ihara/reconstruct.hpp"
#include "ihara/walks.hpp"

using namespace ihara;

namespace {

Multigraph suite_graph(int which) {
  switch (which) {
    case 0: return banana(5);
    case 1: return complete_graph(5);
    case 2: return complete_graph(6);
    case 3: return octahedron();
    default: return complete_bipartite(4, 4);
  }
}

void BM_CharPoly(benchmark::State& state) {
  Multigraph g = suite_graph(static_cast<int>(state.range(0)));
  EdgeMatrix T = build_T(g);
  for (auto _ : state) benchmark::DoNotOptimize(char_poly(T));
}

void BM_CanonicalForm(benchmark::State& state) {
  Multigraph g = suite_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}

void BM_EdgeDeck(benchmark::State& state) {
  Multigraph g = suite_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(edge_deck(g));
}

void BM_ReconstructZeta(benchmark::State& state) {
  Multigraph g = suite_graph(static_cast<int>(state.range(0)));
  EdgeDeck deck = edge_deck(g);
  for (auto _ : state) benchmark::DoNotOptimize(reconstruct_zeta(deck));
}

void BM_WalkCountsDirect(benchmark::State& state) {
  Multigraph g = suite_graph(static_cast<int>(state.range(0)));
  int R = 2 * g.edge_count();
  for (auto _ : state) benchmark::DoNotOptimize(walk_counts_direct(g, R));
}

void BM_WalkCountsBrute(benchmark::State& state) {
  Multigraph g = banana(4);
  for (auto _ : state) benchmark::DoNotOptimize(walk_counts_brute(g, 8));
}

}  // namespace

BENCHMARK(BM_CharPoly)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CanonicalForm)->DenseRange(0, 4);
BENCHMARK(BM_EdgeDeck)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ReconstructZeta)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WalkCountsDirect)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WalkCountsBrute)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
