#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ihara/edge_matrix.hpp"
#include "ihara/poly.hpp"
#include "ihara/random_suite.hpp"
#include "ihara/reconstruct.hpp"
#include "ihara/walks.hpp"

using namespace ihara;

TEST_CASE("top coefficients match the direct characteristic polynomial") {
  for (const Multigraph& g : {banana(5), complete_graph(5), octahedron()}) {
    IntPoly P = char_poly(build_T(g));
    auto top = reconstruct_top_coeffs(edge_deck(g));
    int m = g.edge_count();
    for (int d = m + 1; d <= 2 * m; ++d) CHECK(top.at(d) == poly_coeff(P, d));
  }
}

TEST_CASE("degree sequence from the deck") {
  for (std::uint64_t seed : {2u, 8u, 21u, 42u, 64u}) {
    Multigraph g = random_connected(seed, 5, 9, true);
    auto res = degree_sequence_from_deck(edge_deck(g));
    std::vector<int> want(g.vertex_count);
    for (int v = 0; v < g.vertex_count; ++v) want[v] = g.degree(v);
    std::sort(want.begin(), want.end());
    CHECK(res.degrees == want);
    CHECK(res.loop_count == g.loop_count());
  }
}

TEST_CASE("zeta reconstruction: strict and boundary average degree") {
  // d-bar > 4, d-bar = 4 non-bipartite (octahedron, K5: constant-term
  // anchor via the degree sequence), and d-bar = 4 bipartite.
  for (const Multigraph& g :
       {banana(5), banana(6), complete_graph(5), complete_graph(6), octahedron()}) {
    CHECK(reconstruct_zeta(edge_deck(g)) == char_poly(build_T(g)));
  }
}

TEST_CASE("zeta reconstruction refuses low average degree") {
  CHECK_THROWS_AS(reconstruct_zeta(edge_deck(complete_graph(4))), PreconditionError);
}

TEST_CASE("corrupted deck trips the exact-division guard") {
  EdgeDeck d = edge_deck(banana(5));
  d.cards[0].multiplicity = 4;  // one card missing
  CHECK_THROWS_AS(reconstruct_zeta(d), NumericError);
}

TEST_CASE("total closed-walk counts from the reconstructed polynomial") {
  Multigraph g = banana(5);
  EdgeMatrix T = build_T(g);
  auto tot = reconstruct_N_total(edge_deck(g), 8);
  IMatrix p = IMatrix::identity(T.size());
  for (int r = 1; r <= 8; ++r) {
    p = matmul(p, T.T);
    CHECK(p.trace() == tot[r]);
  }
}

TEST_CASE("per-edge N and F reconstruction is exact; W matches brute force") {
  Multigraph g = banana(5);
  EdgeDeck deck = edge_deck(g);
  int R = 10;
  auto N = reconstruct_Nr_edge(deck, R);
  auto F = reconstruct_Fr_edge(deck, R);
  WalkTable dt = walk_counts_direct(g, R);
  REQUIRE(N.size() == 1);
  for (int r = 0; r <= R; ++r) {
    CHECK(N[0].values[r] == dt.N_e(0, r));
    CHECK(F[0].values[r] == dt.F_e(0, r));
  }
  auto W = reconstruct_Wr_edge(deck, 3);
  WalkTable bt = walk_counts_brute(g, 3);
  for (int r = 0; r <= 3; ++r) CHECK(W[0].values[r] == bt.W[0][r]);
}

TEST_CASE("documented deviation: the M-series deck pipeline is not sound") {
  // The square identity it inverts fails from r = 3 on (see the walk
  // tests), so the pipeline as specified produces values that disagree
  // with the direct count. Frozen witness on B5: 116 vs 128 at r = 3,
  // while r <= 2 still agree.
  Multigraph g = banana(5);
  auto M = reconstruct_Mr_edge(edge_deck(g), 4);
  WalkTable dt = walk_counts_direct(g, 4);
  CHECK(M[0].values[0] == 2);
  CHECK(M[0].values[1] == 8);
  CHECK(M[0].values[2] == 32);
  CHECK(M[0].values[3] == 116);
  CHECK(dt.M_e(0, 3) == 128);
}

TEST_CASE("per-edge pipelines refuse an unsound seed window") {
  // K5 plus a loop: average degree 22/5 > 4, but girth 1 makes the sound
  // covering-count window shorter than the number of distinct eigenvalues.
  Multigraph g = complete_graph(5);
  g.edges.push_back({0, 0});
  CHECK_THROWS_AS(reconstruct_Nr_edge(edge_deck(g), 6), NumericError);
}

TEST_CASE("per-edge pipelines refuse low average degree") {
  CHECK_THROWS_AS(reconstruct_Nr_edge(edge_deck(complete_graph(4)), 4), PreconditionError);
}

TEST_CASE("PF pair reconstruction: pi sound, sigma deviation documented") {
  auto pairs = reconstruct_pf_pairs(edge_deck(banana(5)));
  REQUIRE(pairs.size() == 1);
  CHECK(pairs[0].multiplicity == 5);
  CHECK(pairs[0].pi == doctest::Approx(0.1).epsilon(1e-9));
  CHECK(std::abs(pairs[0].pi_cesaro - pairs[0].pi) < 1e-2);
  // sigma comes from the unsound M-series; the closed form is 2/sqrt(10).
  // The deviation is the documented finding, not an accepted tolerance.
  CHECK(std::abs(pairs[0].sigma - 2.0 / std::sqrt(10.0)) > 1e-6);
  // Normalization from the sound pi side: 2 * sum_e pi_e = 1.
  double s = 0;
  for (auto& p : pairs) s += p.multiplicity * p.pi;
  CHECK(2 * s == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("analysis record fields") {
  DeckAnalysis a = analyze_deck(edge_deck(complete_graph(6)));
  CHECK(a.n == 6);
  CHECK(a.m == 15);
  CHECK(a.dbar == Rat(5));
  CHECK(a.dbar_gt_4);
  CHECK_FALSE(a.bipartite);
  CHECK(a.betti == 10);
  CHECK(a.girth == 3);
  CHECK(a.r_safe == 5);
  DeckAnalysis b = analyze_deck(edge_deck(complete_bipartite(4, 4)));
  CHECK(b.bipartite);
  CHECK(b.dbar_ge_4);
  CHECK_FALSE(b.dbar_gt_4);
  CHECK(b.girth == 4);
}

TEST_CASE("subset-multiset variant recovers the polynomial") {
  for (const Multigraph& g : {banana(5), banana(6)}) {
    auto Z = generate_Z(g);
    CHECK(reconstruct_zeta_from_Z(Z, g.vertex_count) == char_poly(build_T(g)));
  }
}

TEST_CASE("subset-multiset variant validates its input") {
  Multigraph g = banana(5);
  auto Z = generate_Z(g);
  auto broken = Z;
  broken.pop_back();  // wrong group count
  CHECK_THROWS_AS(reconstruct_zeta_from_Z(broken, 2), PreconditionError);
  CHECK_THROWS_AS(reconstruct_zeta_from_Z(Z, 3), PreconditionError);  // d-bar too low
}

TEST_CASE("per-card values are class functions: equal cards, equal series") {
  // A graph whose deck has two classes; each class must get one series.
  Multigraph g;
  g.vertex_count = 3;
  g.edges = {{0, 1}, {0, 1}, {0, 1}, {1, 2}, {1, 2}, {1, 2}, {0, 2}};
  // d-bar = 14/3 > 4; girth 2.
  EdgeDeck deck = edge_deck(g);
  REQUIRE(deck.cards.size() == 2);
  // The W pipeline has no spectral seed window, so it works at girth 2.
  int R = 4;
  auto W = reconstruct_Wr_edge(deck, R);
  WalkTable bt = walk_counts_brute(g, R);
  for (auto& series : W) {
    // Find the edges whose deletion lands in this class and compare.
    bool matched_any = false;
    for (int e = 0; e < g.edge_count(); ++e) {
      if (canonical_form(delete_edges(g, {e})) != series.form) continue;
      matched_any = true;
      for (int r = 0; r <= R; ++r) CHECK(series.values[r] == bt.W[e][r]);
    }
    CHECK(matched_any);
  }
}
