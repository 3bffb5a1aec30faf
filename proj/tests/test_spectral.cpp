#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ihara/poly.hpp"
#include "ihara/random_suite.hpp"
#include "ihara/spectral.hpp"

using namespace ihara;

static std::vector<Int> apply_T(const EdgeMatrix& T, const std::vector<Int>& v) {
  std::vector<Int> w(v.size(), Int(0));
  for (int i = 0; i < T.size(); ++i)
    for (int j = 0; j < T.size(); ++j)
      if (T.T.at(i, j) != 0) w[i] += v[j];
  return w;
}

TEST_CASE("spectrum of B3: {+-2 simple, +-1 double}, all semisimple") {
  EdgeMatrix T = build_T(banana(3));
  SpectrumReport sp = numeric_spectrum(T, char_poly(T));
  REQUIRE(sp.eigenvalues.size() == 4);
  CHECK(sp.mult_plus1 == 2);
  CHECK(sp.mult_minus1 == 2);
  CHECK(sp.pm1_semisimple);
  CHECK(sp.M == 4);
  bool saw2 = false, sawm2 = false;
  for (auto& e : sp.eigenvalues) {
    if (e.exact && e.exact_value == 2) saw2 = e.alg_mult == 1 && e.max_block == 1;
    if (e.exact && e.exact_value == -2) sawm2 = e.alg_mult == 1 && e.max_block == 1;
  }
  CHECK(saw2);
  CHECK(sawm2);
  CHECK(is_semisimple_exact(T.T));
}

TEST_CASE("two-edge path: nontrivial Jordan block at 0") {
  EdgeMatrix T = build_T(path_graph(3));
  CHECK(exact_nullity(T.T, 0, 2) > exact_nullity(T.T, 0, 1));
  CHECK_FALSE(is_semisimple_exact(T.T));
  // One-edge path: T = 0, algebraic multiplicity 2, semisimple.
  EdgeMatrix T1 = build_T(path_graph(2));
  CHECK(exact_nullity(T1.T, 0, 1) == 2);
  CHECK(is_semisimple_exact(T1.T));
}

TEST_CASE("Perron-Frobenius data on closed-form fixtures") {
  PFData b5 = pf_eigen(build_T(banana(5)));
  CHECK(b5.lambda == doctest::Approx(4.0).epsilon(1e-10));
  CHECK(b5.residual < 1e-12);
  for (int e = 0; e < 5; ++e) {
    CHECK(b5.pi[e] == doctest::Approx(0.1).epsilon(1e-9));
    CHECK(b5.sigma[e] == doctest::Approx(2.0 / std::sqrt(10.0)).epsilon(1e-9));
  }
  PFData b3 = pf_eigen(build_T(banana(3)));
  CHECK(b3.lambda == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(b3.pi[0] == doctest::Approx(1.0 / 6.0).epsilon(1e-9));
  PFData k6 = pf_eigen(build_T(complete_graph(6)));
  CHECK(k6.lambda == doctest::Approx(4.0).epsilon(1e-10));
  // Normalization: 2 sum_e pi_e = 1.
  double s = 0;
  for (double x : k6.pi) s += x;
  CHECK(2 * s == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("pf_eigen refuses reducible T") {
  CHECK_THROWS_AS(pf_eigen(build_T(path_graph(4))), PreconditionError);
}

TEST_CASE("exact +-1 eigenspace dimensions (b1, b1 - p)") {
  EigenspaceDims b3 = eigenspace_dims(build_T(banana(3)));
  CHECK(b3.dim_plus == 2);
  CHECK(b3.dim_minus == 2);
  EigenspaceDims b5 = eigenspace_dims(build_T(banana(5)));
  CHECK(b5.dim_plus == 4);
  CHECK(b5.dim_minus == 4);
  EigenspaceDims k6 = eigenspace_dims(build_T(complete_graph(6)));
  CHECK(k6.dim_plus == 10);
  CHECK(k6.dim_minus == 9);
}

TEST_CASE("cycle space basis sizes") {
  CHECK(cycle_space_basis(banana(3)).size() == 2);
  CHECK(cycle_space_basis(complete_graph(6)).size() == 10);
  CHECK(cycle_space_basis(path_graph(4)).empty());
}

TEST_CASE("phi images are exact fixed vectors; psi images exact (-1)-vectors") {
  for (const Multigraph& g : {banana(3), banana(5), complete_graph(4), octahedron()}) {
    EdgeMatrix T = build_T(g);
    for (auto& c : cycle_space_basis(g)) {
      auto v = phi_map(c, g.edge_count());
      CHECK(apply_T(T, v) == v);
    }
    for (auto& c : simple_cycles_up_to(g, 8))
      if (c.even()) {
        auto v = psi_map(c, g.edge_count());
        auto w = apply_T(T, v);
        for (auto& x : w) x = -x;
        CHECK(w == v);
      }
  }
}

TEST_CASE("psi rejects odd cycles") {
  auto cycles = simple_cycles_up_to(complete_graph(4), 3);
  bool found_odd = false;
  for (auto& c : cycles)
    if (!c.even()) {
      found_odd = true;
      CHECK_THROWS_AS(psi_map(c, 6), PreconditionError);
      break;
    }
  CHECK(found_odd);
}

TEST_CASE("confluent alternant is nonsingular and matches the closed form") {
  EdgeMatrix T = build_T(banana(3));
  AlternantCheck ac = confluent_alternant(numeric_spectrum(T, char_poly(T)));
  CHECK(ac.ok);
  EdgeMatrix T6 = build_T(complete_graph(6));
  AlternantCheck ac6 = confluent_alternant(numeric_spectrum(T6, char_poly(T6)));
  CHECK(ac6.ok);
}
