// Acceptance gate: one criterion per invocation (argv[1] = 1..10), one
// PASS/FAIL line per criterion on stdout, exit 0 iff the criterion holds.
#include <cmath>
#include <complex>
#include <cstdlib>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ihara/edge_matrix.hpp"
#include "ihara/multigraph.hpp"
#include "ihara/poly.hpp"
#include "ihara/random_suite.hpp"
#include "ihara/reconstruct.hpp"
#include "ihara/spectral.hpp"
#include "ihara/util.hpp"
#include "ihara/walks.hpp"

using namespace ihara;

namespace {

int report(int k, const std::string& name, bool pass, const std::string& detail) {
  std::cout << "CRITERION " << k << " (" << name << "): " << (pass ? "PASS" : "FAIL");
  if (!detail.empty()) std::cout << " -- " << detail;
  std::cout << "\n";
  return pass ? 0 : 1;
}

// 1. Exact Bass factorization on >= 200 random connected multigraphs.
int c1() {
  auto suite = bass_suite();
  std::vector<char> ok(suite.size(), 0);
  parallel_for(suite.size(), [&](std::size_t i) { ok[i] = verify_bass_identity(suite[i]); });
  int bad = 0;
  for (char c : ok)
    if (!c) ++bad;
  std::ostringstream d;
  d << suite.size() << " graphs, " << bad << " failures";
  return report(1, "Bass identity", bad == 0, d.str());
}

// 2. Deck reconstruction of the characteristic polynomial, exact, on the
// average-degree >= 4 suite including the named fixtures.
int c2() {
  auto suite = zeta_suite();
  std::vector<std::string> err(suite.size());
  parallel_for(suite.size(), [&](std::size_t i) {
    try {
      IntPoly direct = char_poly(build_T(suite[i]));
      IntPoly rec = reconstruct_zeta(edge_deck(suite[i]));
      if (rec != direct) err[i] = "polynomial mismatch";
    } catch (const std::exception& e) {
      err[i] = e.what();
    }
  });
  int bad = 0;
  std::string first;
  for (std::size_t i = 0; i < suite.size(); ++i)
    if (!err[i].empty()) {
      ++bad;
      if (first.empty()) first = "graph " + std::to_string(i) + ": " + err[i];
    }
  std::ostringstream d;
  d << suite.size() << " graphs, " << bad << " failures";
  if (bad) d << " (" << first << ")";
  return report(2, "zeta edge-reconstruction", bad == 0, d.str());
}

// 3. Brute-force walk oracles and Newton-identity totals.
int c3() {
  auto wsuite = walk_suite();
  std::vector<std::string> err(wsuite.size());
  parallel_for(wsuite.size(), [&](std::size_t i) {
    try {
      const Multigraph& g = wsuite[i];
      int R = 8;
      WalkTable d = walk_counts_direct(g, R);
      WalkTable b = walk_counts_brute(g, R);
      for (int a = 0; a < 2 * g.edge_count(); ++a)
        for (int r = 0; r <= R; ++r)
          if (d.N[a][r] != b.N[a][r] || d.M[a][r] != b.M[a][r] || d.F[a][r] != b.F[a][r]) {
            err[i] = "table mismatch";
            return;
          }
      if (!verify_decompositions(g, 6)) err[i] = "decomposition identity";
    } catch (const std::exception& e) {
      err[i] = e.what();
    }
  });
  auto nsuite = bass_suite();
  std::vector<std::string> nerr(nsuite.size());
  parallel_for(nsuite.size(), [&](std::size_t i) {
    try {
      const Multigraph& g = nsuite[i];
      if (g.edge_count() == 0) return;
      EdgeMatrix T = build_T(g);
      IntPoly P = char_poly(T);
      auto tot = total_closed_walks(P, 2 * g.edge_count());
      IMatrix p = IMatrix::identity(T.size());
      for (std::size_t r = 1; r < tot.size(); ++r) {
        p = matmul(p, T.T);
        if (p.trace() != tot[r]) {
          nerr[i] = "Newton total mismatch";
          return;
        }
      }
    } catch (const std::exception& e) {
      nerr[i] = e.what();
    }
  });
  int bad = 0;
  for (auto& e : err)
    if (!e.empty()) ++bad;
  for (auto& e : nerr)
    if (!e.empty()) ++bad;
  std::ostringstream d;
  d << wsuite.size() << " brute-checked graphs + " << nsuite.size() << " Newton-checked, " << bad
    << " failures";
  return report(3, "walk-count oracles", bad == 0, d.str());
}

// 4. Per-edge N, M, F deck reconstruction vs direct values for r <= 2|E|.
int c4() {
  std::vector<Multigraph> graphs;
  for (auto& g : zeta_suite()) {
    GraphPredicates pr = predicates(g);
    bool eligible = 2 * g.edge_count() > 4 * g.vertex_count ||
                    (pr.bipartite && 2 * g.edge_count() == 4 * g.vertex_count);
    if (eligible) graphs.push_back(g);
  }
  struct Res {
    int n_bad = 0, m_bad = 0, f_bad = 0;
    std::string err;
  };
  std::vector<Res> res(graphs.size());
  parallel_for(graphs.size(), [&](std::size_t i) {
    try {
      const Multigraph& g = graphs[i];
      int m = g.edge_count(), R = 2 * m;
      EdgeDeck deck = edge_deck(g);
      auto N = reconstruct_Nr_edge(deck, R);
      auto M = reconstruct_Mr_edge(deck, R);
      auto F = reconstruct_Fr_edge(deck, R);
      WalkTable dt = walk_counts_direct(g, R);
      std::map<CanonicalForm, int> rep;
      for (int e = 0; e < m; ++e) rep.emplace(canonical_form(delete_edges(g, {e})), e);
      for (std::size_t c = 0; c < N.size(); ++c) {
        int e = rep.at(N[c].form);
        for (int r = 0; r <= R; ++r) {
          if (N[c].values[r] != dt.N_e(e, r)) ++res[i].n_bad;
          if (M[c].values[r] != dt.M_e(e, r)) ++res[i].m_bad;
          if (F[c].values[r] != dt.F_e(e, r)) ++res[i].f_bad;
        }
      }
    } catch (const std::exception& e) {
      res[i].err = e.what();
    }
  });
  int n_graphs_bad = 0, m_graphs_bad = 0, f_graphs_bad = 0, refused = 0;
  for (auto& r : res) {
    if (!r.err.empty()) ++refused;
    if (r.n_bad) ++n_graphs_bad;
    if (r.m_bad) ++m_graphs_bad;
    if (r.f_bad) ++f_graphs_bad;
  }
  bool pass = n_graphs_bad + m_graphs_bad + f_graphs_bad + refused == 0;
  std::ostringstream d;
  d << graphs.size() << " eligible graphs; N mismatches on " << n_graphs_bad
    << ", F mismatches on " << f_graphs_bad << ", M mismatches on " << m_graphs_bad
    << ", refusals/errors on " << refused << ".";
  if (m_graphs_bad)
    d << " The M-series step inverts a convolution identity that fails beyond low order"
         " (witness in test_walks), so its values diverge from direct counts; analysis in"
         " the project notes.";
  if (refused)
    d << " Refusals: graphs whose covering-count window (r <= 2*girth-1) is shorter than"
         " the number of distinct eigenvalues; emitting values there would be unsound.";
  return report(4, "per-edge N/M/F reconstruction", pass, d.str());
}

// 5. PF pair reconstruction on B5 and K6 within 1e-6 of direct values.
int c5() {
  bool sigma_ok = true, pi_ok = true, norm_ok = true;
  std::ostringstream d;
  for (const Multigraph& g : {banana(5), complete_graph(6)}) {
    PFData direct = pf_eigen(build_T(g));
    auto pairs = reconstruct_pf_pairs(edge_deck(g));
    std::map<CanonicalForm, int> rep;
    for (int e = 0; e < g.edge_count(); ++e)
      rep.emplace(canonical_form(delete_edges(g, {e})), e);
    double pisum = 0;
    for (auto& p : pairs) {
      int e = rep.at(p.form);
      if (std::abs(p.sigma - direct.sigma[e]) > 1e-6) sigma_ok = false;
      if (std::abs(p.pi - direct.pi[e]) > 1e-6) pi_ok = false;
      pisum += p.multiplicity * p.pi;
    }
    if (std::abs(2 * pisum - 1.0) > 1e-9) norm_ok = false;
  }
  bool pass = sigma_ok && pi_ok && norm_ok;
  d << "pi: " << (pi_ok ? "ok" : "bad") << ", normalization 2*sum(pi)=1: "
    << (norm_ok ? "ok" : "bad") << ", sigma: " << (sigma_ok ? "ok" : "bad") << ".";
  if (!sigma_ok)
    d << " sigma is solved from the M-series, which is not deck-computable (its identity"
         " fails beyond low order); the pi side and the normalization are sound.";
  return report(5, "Perron-Frobenius pairs", pass, d.str());
}

// 6. Exact +-1 eigenspace dimensions and exact phi/psi eigenvectors.
int c6() {
  auto suite = bass_suite();
  std::vector<std::string> err(suite.size());
  parallel_for(suite.size(), [&](std::size_t i) {
    try {
      const Multigraph& g = suite[i];
      GraphPredicates pr = predicates(g);
      int b1 = g.edge_count() - g.vertex_count + 1;
      if (!pr.connected || b1 <= 1) return;
      EdgeMatrix T = build_T(g);
      EigenspaceDims dims = eigenspace_dims(T);
      if (dims.dim_plus != b1 || dims.dim_minus != b1 - pr.p) {
        err[i] = "dimension mismatch";
        return;
      }
      auto apply = [&](const std::vector<Int>& v) {
        std::vector<Int> w(v.size(), Int(0));
        for (int a = 0; a < T.size(); ++a)
          for (int b = 0; b < T.size(); ++b)
            if (T.T.at(a, b) != 0) w[a] += v[b];
        return w;
      };
      for (auto& c : cycle_space_basis(g)) {
        auto v = phi_map(c, g.edge_count());
        if (apply(v) != v) {
          err[i] = "phi not fixed";
          return;
        }
      }
      for (auto& c : simple_cycles_up_to(g, 8))
        if (c.even()) {
          auto v = psi_map(c, g.edge_count());
          auto w = apply(v);
          for (auto& x : w) x = -x;
          if (w != v) {
            err[i] = "psi not negated";
            return;
          }
        }
    } catch (const std::exception& e) {
      err[i] = e.what();
    }
  });
  int bad = 0;
  for (auto& e : err)
    if (!e.empty()) ++bad;
  std::ostringstream d;
  d << "suite of " << suite.size() << ", " << bad << " failures";
  return report(6, "eigenspace structure", bad == 0, d.str());
}

// Shared by criteria 7: connected multigraphs up to `max_edges` edges, one
// per isomorphism class, no isolated vertices.
std::vector<Multigraph> enumerate_connected(int max_edges) {
  std::vector<Multigraph> out;
  std::set<CanonicalForm> seen;
  for (int me = 1; me <= max_edges; ++me)
    for (int n = 1; n <= me + 1; ++n) {
      std::vector<std::pair<int, int>> pairs;
      for (int u = 0; u < n; ++u)
        for (int v = u; v < n; ++v) pairs.push_back({u, v});
      std::vector<int> pick(me, 0);
      while (true) {
        Multigraph g;
        g.vertex_count = n;
        for (int i : pick) g.edges.push_back(pairs[i]);
        std::vector<bool> touched(n, false);
        for (auto& [u, v] : g.edges) touched[u] = touched[v] = true;
        bool cover = true;
        for (bool b : touched) cover = cover && b;
        if (cover && predicates(g).connected) {
          CanonicalForm f = canonical_form(g);
          if (seen.insert(f).second) out.push_back(g);
        }
        int i = me - 1;
        while (i >= 0 && pick[i] == static_cast<int>(pairs.size()) - 1) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < me; ++j) pick[j] = pick[i];
      }
    }
  return out;
}

// 7. Every connected graph with an end-vertex and |E| > 1 up to 5 edges has
// a nontrivial Jordan block at 0.
int c7() {
  auto graphs = enumerate_connected(5);
  int checked = 0, bad = 0;
  for (auto& g : graphs) {
    if (g.edge_count() <= 1 || !predicates(g).has_end_vertex) continue;
    ++checked;
    EdgeMatrix T = build_T(g);
    if (!(exact_nullity(T.T, 0, 2) > exact_nullity(T.T, 0, 1))) ++bad;
  }
  std::ostringstream d;
  d << graphs.size() << " graphs enumerated, " << checked << " with end-vertices, " << bad
    << " failures";
  return report(7, "Jordan probe", checked > 0 && bad == 0, d.str());
}

// 8. Girth/polygon readout vs brute-force shortest cycles.
int c8() {
  auto suite = bass_suite();
  int checked = 0, bad = 0;
  for (auto& g : suite) {
    int b1 = g.edge_count() - g.vertex_count + 1;
    if (!predicates(g).connected || b1 <= 1) continue;
    ++checked;
    GirthReport gr = girth_and_polygons(char_poly(build_T(g)), g.edge_count());
    auto cycles = simple_cycles_up_to(g, g.edge_count());
    int girth = 0;
    Int count = 0;
    for (auto& c : cycles) {
      int len = static_cast<int>(c.oriented_edges.size());
      if (girth == 0 || len < girth) girth = len;
    }
    for (auto& c : cycles)
      if (static_cast<int>(c.oriented_edges.size()) == girth) ++count;
    if (!gr.found || gr.girth != girth || gr.g_gon_count != count) ++bad;
  }
  std::ostringstream d;
  d << checked << " graphs with b1 > 1, " << bad << " failures";
  return report(8, "girth readout", checked > 0 && bad == 0, d.str());
}

// 9. The single-deletion polynomial multiset determines the polynomial.
int c9() {
  bool ok = true;
  for (const Multigraph& g : {banana(5), complete_graph(6)}) {
    auto Z = generate_Z(g);
    if (reconstruct_zeta_from_Z(Z, g.vertex_count) != char_poly(build_T(g))) ok = false;
  }
  return report(9, "subset-multiset zeta variant", ok, "B5 and K6, exact recovery");
}

// 10. Negative controls: hypothesis refusal and corruption detection.
int c10() {
  bool k4_refused = false, corruption_caught = false;
  try {
    reconstruct_zeta(edge_deck(complete_graph(4)));
  } catch (const PreconditionError&) {
    k4_refused = true;
  } catch (...) {
  }
  try {
    EdgeDeck d = edge_deck(banana(5));
    d.cards[0].multiplicity = 4;
    reconstruct_zeta(d);
  } catch (const NumericError&) {
    corruption_caught = true;
  } catch (...) {
  }
  std::ostringstream d;
  d << "K4 hypothesis refusal: " << (k4_refused ? "ok" : "missing")
    << "; corrupted-deck inexact division: " << (corruption_caught ? "ok" : "missing");
  return report(10, "negative controls", k4_refused && corruption_caught, d.str());
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: acceptance <criterion 1..10>\n";
    return 2;
  }
  int k = std::atoi(argv[1]);
  switch (k) {
    case 1: return c1();
    case 2: return c2();
    case 3: return c3();
    case 4: return c4();
    case 5: return c5();
    case 6: return c6();
    case 7: return c7();
    case 8: return c8();
    case 9: return c9();
    case 10: return c10();
    default: std::cerr << "unknown criterion\n"; return 2;
  }
}
