#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ihara/edge_matrix.hpp"
#include "ihara/poly.hpp"
#include "ihara/random_suite.hpp"

using namespace ihara;

static IntPoly ip(std::initializer_list<long long> v) {
  IntPoly p;
  for (long long x : v) p.push_back(Int(x));
  return p;
}

TEST_CASE("char_poly fixture values") {
  CHECK(char_poly(build_T(banana(3))) == ip({-4, 0, 9, 0, -6, 0, 1}));
  CHECK(char_poly(build_T(path_graph(2))) == ip({0, 0, 1}));
  CHECK(char_poly(build_T(banana(5))) == ip({-16, 0, 65, 0, -100, 0, 70, 0, -20, 0, 1}));
}

TEST_CASE("polynomial helpers") {
  CHECK(poly_mul(ip({1, 1}), ip({-1, 1})) == ip({-1, 0, 1}));
  CHECK(poly_pow(ip({-1, 0, 1}), 2) == ip({1, 0, -2, 0, 1}));
  CHECK(poly_degree(ip({0})) == -1);
  CHECK(poly_coeff(ip({3, 2}), 5) == 0);
  CHECK(squarefree_part(ip({1, 0, -2, 0, 1})) == ip({-1, 0, 1}));
  CHECK(root_multiplicity(ip({1, 0, -2, 0, 1}), 1) == 2);
  CHECK(root_multiplicity(ip({1, 0, -2, 0, 1}), -1) == 2);
  CHECK(root_multiplicity(ip({1, 0, -2, 0, 1}), 2) == 0);
}

TEST_CASE("Bass identity on fixtures and random multigraphs") {
  for (const Multigraph& g : {banana(3), banana(5), complete_graph(4), complete_graph(6),
                              octahedron(), bouquet(2), cycle_graph(5), path_graph(4)})
    CHECK(verify_bass_identity(g));
  for (std::uint64_t seed : {5u, 17u, 99u, 123u})
    CHECK(verify_bass_identity(random_connected(seed, 6, 11, true)));
}

TEST_CASE("zeta inverse series is the reversed characteristic polynomial") {
  IntPoly P = char_poly(build_T(banana(3)));
  RatSeries s = zeta_inverse_series(P, 6);
  CHECK(s.c[0] == 1);
  CHECK(s.c[2] == -6);
  CHECK(s.c[4] == 9);
  CHECK(s.c[6] == -4);
  CHECK(s.c[1] == 0);
}

TEST_CASE("Newton-identity closed-walk totals equal traces of powers") {
  for (const Multigraph& g : {banana(4), complete_graph(4), bouquet(2)}) {
    EdgeMatrix T = build_T(g);
    IntPoly P = char_poly(T);
    auto tot = total_closed_walks(P, 2 * g.edge_count());
    IMatrix p = IMatrix::identity(T.size());
    for (std::size_t r = 1; r < tot.size(); ++r) {
      p = matmul(p, T.T);
      CHECK(p.trace() == tot[r]);
    }
  }
}

TEST_CASE("girth and polygon count read off the polynomial") {
  GirthReport b3 = girth_and_polygons(char_poly(build_T(banana(3))), 3);
  REQUIRE(b3.found);
  CHECK(b3.girth == 2);
  CHECK(b3.g_gon_count == 3);

  GirthReport k4 = girth_and_polygons(char_poly(build_T(complete_graph(4))), 6);
  REQUIRE(k4.found);
  CHECK(k4.girth == 3);
  CHECK(k4.g_gon_count == 4);

  GirthReport k6 = girth_and_polygons(char_poly(build_T(complete_graph(6))), 15);
  REQUIRE(k6.found);
  CHECK(k6.girth == 3);
  CHECK(k6.g_gon_count == 20);

  GirthReport lp = girth_and_polygons(char_poly(build_T(bouquet(1))), 1);
  REQUIRE(lp.found);
  CHECK(lp.girth == 1);
  CHECK(lp.g_gon_count == 1);
}

TEST_CASE("series arithmetic round-trips") {
  IntPoly P = char_poly(build_T(banana(4)));
  RatSeries s = series_from_poly(P, 8);
  RatSeries one = series_div(s, s);
  CHECK(one.c[0] == 1);
  for (int i = 1; i <= 8; ++i) CHECK(one.c[i] == 0);
  RatSeries sq = series_mul(series_sqrt(s), series_sqrt(s));
  for (int i = 0; i <= 8; ++i) CHECK(sq.c[i] == s.c[i]);
}

TEST_CASE("degree-2n factor of the Bass identity") {
  // For B3 (n = 2, m = 3): char_poly = (lambda^2 - 1)^1 * B(lambda) with
  // deg B = 4.
  IntPoly B = bass_polynomial(banana(3));
  CHECK(poly_degree(B) == 4);
  CHECK(poly_mul(ip({-1, 0, 1}), B) == char_poly(build_T(banana(3))));
}
