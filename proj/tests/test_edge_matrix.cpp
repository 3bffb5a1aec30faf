#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ihara/edge_matrix.hpp"
#include "ihara/random_suite.hpp"

using namespace ihara;

TEST_CASE("T has the documented index layout and entries") {
  // B3: edges 0,1,2 between vertices 0 and 1. Forward orientations are
  // indices 0..2, reverses 3..5.
  EdgeMatrix T = build_T(banana(3));
  REQUIRE(T.size() == 6);
  // Forward edge 0 ends at vertex 1; continuations are the reverses of the
  // other two edges (not its own reverse).
  CHECK(T.T.at(0, 3) == 0);
  CHECK(T.T.at(0, 4) == 1);
  CHECK(T.T.at(0, 5) == 1);
  CHECK(T.T.at(0, 0) == 0);
  // Row sums equal deg(terminus) - 1 = 2.
  for (int a = 0; a < 6; ++a) {
    Int s = 0;
    for (int b = 0; b < 6; ++b) s += T.T.at(a, b);
    CHECK(s == 2);
  }
  CHECK(T.T.trace() == 0);
}

TEST_CASE("a loop orientation may follow itself: trace counts loops twice") {
  EdgeMatrix T = build_T(bouquet(1));
  REQUIRE(T.size() == 2);
  CHECK(T.T.trace() == 2);
  EdgeMatrix T2 = build_T(bouquet(2));
  CHECK(T2.T.trace() == 4);
}

TEST_CASE("T is symmetric for the indefinite pairing (J T J = T^t)") {
  for (const Multigraph& g :
       {banana(4), complete_graph(4), octahedron(), bouquet(2), path_graph(4)}) {
    CHECK(check_J_symmetry(build_T(g)));
  }
}

TEST_CASE("J-symmetry check detects a flipped entry") {
  EdgeMatrix T = build_T(banana(3));
  Int& x = T.T.at(0, 5);
  x = (x == 0) ? 1 : 0;
  CHECK_FALSE(check_J_symmetry(T));
}

TEST_CASE("krein product pairs forward with reverse entries") {
  // v = w = all ones on B3: sum over the 6 oriented edges of v_a w_{rev a} = 6.
  std::vector<double> ones(6, 1.0);
  CHECK(krein_product(ones, ones) == doctest::Approx(6.0));
}

TEST_CASE("row sums match deg(terminus) - 1 on random multigraphs") {
  for (std::uint64_t seed : {11u, 22u, 33u}) {
    Multigraph g = random_connected(seed, 5, 9, true);
    EdgeMatrix T = build_T(g);
    for (int a = 0; a < T.size(); ++a) {
      int t_of_a = a < T.m ? g.edges[a].second : g.edges[a - T.m].first;
      Int s = 0;
      for (int b = 0; b < T.size(); ++b) s += T.T.at(a, b);
      CHECK(s == g.degree(t_of_a) - 1);
    }
  }
}
