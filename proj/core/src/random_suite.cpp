#include "ihara/random_suite.hpp"

#include <algorithm>
#include <random>

namespace ihara {

Multigraph banana(int k) {
  Multigraph g;
  g.vertex_count = 2;
  for (int i = 0; i < k; ++i) g.edges.push_back({0, 1});
  return g;
}

Multigraph complete_graph(int n) {
  Multigraph g;
  g.vertex_count = n;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.edges.push_back({i, j});
  return g;
}

Multigraph complete_bipartite(int a, int b) {
  Multigraph g;
  g.vertex_count = a + b;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) g.edges.push_back({i, a + j});
  return g;
}

Multigraph octahedron() {
  Multigraph g;
  g.vertex_count = 6;
  // K_{2,2,2}: parts {0,1}, {2,3}, {4,5}.
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      if (j != (i ^ 1)) g.edges.push_back({i, j});
  return g;
}

Multigraph cycle_graph(int n) {
  Multigraph g;
  g.vertex_count = n;
  for (int i = 0; i < n; ++i) g.edges.push_back({i, (i + 1) % n});
  return g;
}

Multigraph path_graph(int n) {
  Multigraph g;
  g.vertex_count = n;
  for (int i = 0; i + 1 < n; ++i) g.edges.push_back({i, i + 1});
  return g;
}

Multigraph bouquet(int loops) {
  Multigraph g;
  g.vertex_count = 1;
  for (int i = 0; i < loops; ++i) g.edges.push_back({0, 0});
  return g;
}

Multigraph random_connected(std::uint64_t seed, int n, int m, bool allow_loops) {
  if (m < n - 1) throw PreconditionError("random_connected: m must be >= n - 1");
  std::mt19937_64 rng(seed);
  Multigraph g;
  g.vertex_count = n;
  // Random spanning tree first (each vertex attaches to an earlier one),
  // then the remaining edges uniformly, loops with small probability.
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> d(0, v - 1);
    g.edges.push_back({d(rng), v});
  }
  std::uniform_int_distribution<int> dv(0, n - 1);
  std::uniform_int_distribution<int> coin(0, 9);
  while (static_cast<int>(g.edges.size()) < m) {
    if (allow_loops && coin(rng) == 0) {
      int v = dv(rng);
      g.edges.push_back({v, v});
    } else {
      int u = dv(rng), v = dv(rng);
      if (u == v) continue;
      g.edges.push_back({std::min(u, v), std::max(u, v)});
    }
  }
  std::shuffle(g.edges.begin(), g.edges.end(), rng);
  return g;
}

std::vector<Multigraph> bass_suite() {
  std::vector<Multigraph> out;
  for (int k = 2; k <= 6; ++k) out.push_back(banana(k));
  for (int n = 3; n <= 6; ++n) out.push_back(complete_graph(n));
  out.push_back(octahedron());
  for (int n = 3; n <= 8; ++n) out.push_back(cycle_graph(n));
  for (int n = 2; n <= 6; ++n) out.push_back(path_graph(n));
  for (int l = 1; l <= 3; ++l) out.push_back(bouquet(l));
  std::mt19937_64 rng(0xB0551D);
  while (out.size() < 210) {
    std::uniform_int_distribution<int> dn(2, 8);
    int n = dn(rng);
    std::uniform_int_distribution<int> dm(n - 1, 14);
    int m = std::min(14, dm(rng));
    out.push_back(random_connected(rng(), n, m, true));
  }
  return out;
}

std::vector<Multigraph> zeta_suite() {
  std::vector<Multigraph> out;
  for (int k = 4; k <= 6; ++k) out.push_back(banana(k));
  out.push_back(complete_graph(5));
  out.push_back(complete_graph(6));
  out.push_back(complete_bipartite(4, 4));
  out.push_back(octahedron());
  std::mt19937_64 rng(0x2E7A);
  while (out.size() < 56) {
    std::uniform_int_distribution<int> dn(2, 6);
    int n = dn(rng);
    if (2 * n > 12) continue;
    std::uniform_int_distribution<int> dm(2 * n, 12);  // average degree >= 4
    int m = dm(rng);
    out.push_back(random_connected(rng(), n, m, true));
  }
  return out;
}

std::vector<Multigraph> walk_suite() {
  std::vector<Multigraph> out;
  for (int k = 2; k <= 5; ++k) out.push_back(banana(k));
  out.push_back(complete_graph(4));
  out.push_back(cycle_graph(5));
  out.push_back(bouquet(2));
  std::mt19937_64 rng(0x3A1C5);
  while (out.size() < 20) {
    std::uniform_int_distribution<int> dn(2, 5);
    int n = dn(rng);
    std::uniform_int_distribution<int> dm(n - 1, 8);
    int m = dm(rng);
    out.push_back(random_connected(rng(), n, m, true));
  }
  return out;
}

}  // namespace ihara
