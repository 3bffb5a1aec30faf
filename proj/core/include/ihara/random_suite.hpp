#pragma once
// Named fixture graphs and deterministic test suites.

#include <cstdint>
#include <vector>

#include "ihara/multigraph.hpp"

namespace ihara {

Multigraph banana(int k);                      // two vertices joined by k parallel edges
Multigraph complete_graph(int n);              // K_n
Multigraph complete_bipartite(int a, int b);   // K_{a,b}
Multigraph octahedron();                       // K_{2,2,2}
Multigraph cycle_graph(int n);
Multigraph path_graph(int n);                  // n vertices, n-1 edges
Multigraph bouquet(int loops);                 // one vertex with `loops` loops

// Deterministic random connected multigraph (parallel edges and loops
// allowed) with exactly `n` vertices and `m` edges, m >= n - 1.
Multigraph random_connected(std::uint64_t seed, int n, int m, bool allow_loops = true);

// At least 200 connected multigraphs, |V| <= 8, |E| <= 14, mixing fixtures,
// loops and parallel edges. Deterministic.
std::vector<Multigraph> bass_suite();

// At least 50 connected multigraphs with average degree >= 4 and |E| <= 12,
// plus the larger named fixtures (complete graphs through K_6, K_{4,4},
// the octahedron, parallel-edge bundles). Deterministic.
std::vector<Multigraph> zeta_suite();

// Small graphs (|E| <= 8) for brute-force walk cross-checks. Deterministic.
std::vector<Multigraph> walk_suite();

}  // namespace ihara
