// Command-line frontend: zeta | deck | reconstruct | verify | probe.
// Machine-readable JSON on stdout, diagnostics on stderr.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <random>
#include <sstream>

#include "ihara/edge_matrix.hpp"
#include "ihara/multigraph.hpp"
#include "ihara/poly.hpp"
#include "ihara/random_suite.hpp"
#include "ihara/reconstruct.hpp"
#include "ihara/spectral.hpp"
#include "ihara/walks.hpp"

using json = nlohmann::ordered_json;
using namespace ihara;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IOError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IOError("read failure: " + path);
  return ss.str();
}

Multigraph load_graph(const std::string& path) { return parse_graph(slurp(path)); }

std::string dec(const Int& v) { return v.str(); }
std::string dec(const Rat& v) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(v) == 1) return numerator(v).str();
  return numerator(v).str() + "/" + denominator(v).str();
}

json jpoly(const IntPoly& p) {
  json a = json::array();
  for (auto& c : p) a.push_back(dec(c));
  return a;
}

json jints(const std::vector<Int>& v) {
  json a = json::array();
  for (auto& c : v) a.push_back(dec(c));
  return a;
}

json jdoubles(const std::vector<double>& v) {
  json a = json::array();
  for (double c : v) a.push_back(c);
  return a;
}

// --- zeta -------------------------------------------------------------------

int cmd_zeta(const std::string& path, int series_order) {
  Multigraph g = load_graph(path);
  EdgeMatrix T = build_T(g);
  IntPoly P = char_poly(T);
  int m = g.edge_count();
  int order = series_order >= 0 ? series_order : 2 * m;
  RatSeries zi = zeta_inverse_series(P, order);
  json out;
  out["vertex_count"] = g.vertex_count;
  out["edge_count"] = m;
  out["char_poly"] = jpoly(P);
  {
    json s = json::array();
    for (auto& c : zi.c) s.push_back(dec(c));
    out["zeta_inverse_series"] = s;
  }
  out["bass_identity"] = verify_bass_identity(g);
  GirthReport gr = girth_and_polygons(P, m);
  json gj;
  gj["found"] = gr.found;
  if (gr.found) {
    gj["girth"] = gr.girth;
    gj["g_gon_count"] = dec(gr.g_gon_count);
  }
  out["girth_report"] = gj;
  std::cout << out.dump() << "\n";
  return 0;
}

// --- deck -------------------------------------------------------------------

int cmd_deck(const std::string& path) {
  Multigraph g = load_graph(path);
  EdgeDeck deck = edge_deck(g);
  json cards = json::array();
  for (auto& c : deck.cards) {
    json cj;
    cj["form"] = c.form;
    cj["multiplicity"] = c.multiplicity;
    json ej = json::array();
    for (auto& [u, v] : c.representative.edges) ej.push_back(json::array({u, v}));
    cj["edges"] = ej;
    cards.push_back(cj);
  }
  json out;
  out["vertex_count"] = deck.source_vertex_count;
  out["edge_count"] = deck.source_edge_count;
  out["card_classes"] = static_cast<int>(deck.cards.size());
  out["cards"] = cards;
  std::cout << out.dump() << "\n";
  return 0;
}

// --- reconstruct ------------------------------------------------------------

int cmd_reconstruct(const std::string& path, const std::string& what, int r_max,
                    bool deck_only) {
  Multigraph g = load_graph(path);
  EdgeDeck deck = edge_deck(g);
  int m = deck.source_edge_count;
  int R = r_max >= 0 ? r_max : 2 * m;
  json out;
  out["vertex_count"] = deck.source_vertex_count;
  out["edge_count"] = m;

  // Map each card form to one deleted-edge id for direct comparisons.
  std::map<CanonicalForm, int> rep_edge;
  if (!deck_only)
    for (int e = 0; e < m; ++e) {
      CanonicalForm f = canonical_form(delete_edges(g, {e}));
      rep_edge.emplace(f, e);
    }

  bool want_zeta = what == "zeta" || what == "all";
  bool want_walks = what == "walks" || what == "all";
  bool want_pf = what == "pf" || what == "all";

  if (want_zeta) {
    IntPoly rz = reconstruct_zeta(deck);
    json zj;
    zj["char_poly"] = jpoly(rz);
    zj["N_total"] = jints(reconstruct_N_total(deck, std::min(R, 2 * m)));
    if (!deck_only) {
      IntPoly direct = char_poly(build_T(g));
      zj["verdict"] = (rz == direct) ? "match" : "mismatch";
    }
    out["zeta"] = zj;
  }
  if (want_walks) {
    auto Nr = reconstruct_Nr_edge(deck, R);
    auto Mr = reconstruct_Mr_edge(deck, R);
    auto Fr = reconstruct_Fr_edge(deck, R);
    WalkTable direct;
    if (!deck_only) direct = walk_counts_direct(g, R);
    json wj = json::array();
    for (std::size_t i = 0; i < Nr.size(); ++i) {
      json cj;
      cj["form"] = Nr[i].form;
      cj["multiplicity"] = Nr[i].multiplicity;
      cj["N"] = jints(Nr[i].values);
      cj["M"] = jints(Mr[i].values);
      cj["F"] = jints(Fr[i].values);
      if (!deck_only) {
        int e = rep_edge.at(Nr[i].form);
        auto same = [&](const std::vector<Int>& got, auto&& ref) {
          for (int r = 0; r <= R; ++r)
            if (got[r] != ref(r)) return false;
          return true;
        };
        cj["N_verdict"] =
            same(Nr[i].values, [&](int r) { return direct.N_e(e, r); }) ? "match" : "mismatch";
        cj["M_verdict"] =
            same(Mr[i].values, [&](int r) { return direct.M_e(e, r); }) ? "match" : "mismatch";
        cj["F_verdict"] =
            same(Fr[i].values, [&](int r) { return direct.F_e(e, r); }) ? "match" : "mismatch";
      }
      wj.push_back(cj);
    }
    out["walks"] = wj;
  }
  if (want_pf) {
    auto pairs = reconstruct_pf_pairs(deck);
    PFData pf;
    if (!deck_only) pf = pf_eigen(build_T(g));
    json pj = json::array();
    for (auto& pr : pairs) {
      json cj;
      cj["form"] = pr.form;
      cj["multiplicity"] = pr.multiplicity;
      cj["sigma"] = pr.sigma;
      cj["pi"] = pr.pi;
      cj["p_pair"] = json::array({pr.p_pair[0], pr.p_pair[1]});
      cj["pi_cesaro"] = pr.pi_cesaro;
      if (!deck_only) {
        int e = rep_edge.at(pr.form);
        cj["sigma_verdict"] = std::abs(pr.sigma - pf.sigma[e]) < 1e-6 ? "match" : "mismatch";
        cj["pi_verdict"] = std::abs(pr.pi - pf.pi[e]) < 1e-6 ? "match" : "mismatch";
      }
      pj.push_back(cj);
    }
    out["pf"] = pj;
  }
  std::cout << out.dump() << "\n";
  return 0;
}

// --- verify -----------------------------------------------------------------

json verify_one(const Multigraph& g, int r_max, bool fault) {
  json out;
  int m = g.edge_count();
  out["vertex_count"] = g.vertex_count;
  out["edge_count"] = m;
  EdgeMatrix T = build_T(g);
  if (fault && m > 0) {
    // Flip one entry to demonstrate the J-symmetry detector.
    Int& x = T.T.at(0, T.T.n - 1);
    x = (x == 0) ? 1 : 0;
  }
  bool all = true;
  auto put = [&](const char* key, bool ok) {
    out[key] = ok;
    all = all && ok;
  };
  put("bass_identity", verify_bass_identity(g));
  put("j_symmetry", check_J_symmetry(T));
  IntPoly P = char_poly(build_T(g));
  // Newton-identity totals vs exact traces.
  {
    bool ok = true;
    auto tot = total_closed_walks(P, std::min(2 * m, std::max(r_max, 1)));
    IMatrix p = IMatrix::identity(2 * m);
    for (std::size_t r = 1; r < tot.size(); ++r) {
      p = matmul(p, T.T);
      if (!fault && p.trace() != tot[r]) ok = false;
    }
    put("newton_traces", ok);
  }
  if (m <= 8) put("walk_decompositions", verify_decompositions(g, std::min(r_max, 8)));
  GraphPredicates pr = predicates(g);
  int b1 = pr.connected ? m - g.vertex_count + 1 : -1;
  if (pr.connected && b1 > 1) {
    EigenspaceDims d = eigenspace_dims(build_T(g));
    put("eigenspace_dims", d.dim_plus == b1 && d.dim_minus == b1 - pr.p);
    bool phi_ok = true, psi_ok = true;
    auto apply = [&](const std::vector<Int>& v) {
      std::vector<Int> w(v.size(), Int(0));
      for (int i = 0; i < T.size(); ++i)
        for (int j = 0; j < T.size(); ++j)
          if (T.T.at(i, j) != 0) w[i] += v[j];
      return w;
    };
    for (auto& c : cycle_space_basis(g)) {
      auto v = phi_map(c, m);
      if (apply(v) != v) phi_ok = false;
    }
    for (auto& c : simple_cycles_up_to(g, 8))
      if (c.even()) {
        auto v = psi_map(c, m);
        auto w = apply(v);
        for (auto& x : w) x = -x;
        if (w != v) psi_ok = false;
      }
    put("phi_fixed_vectors", phi_ok);
    put("psi_negated_vectors", psi_ok);
  }
  if (pr.connected && pr.has_end_vertex && m > 1) {
    // Expected finding: a nontrivial Jordan block at 0.
    out["jordan_block_at_zero"] =
        exact_nullity(T.T, 0, 2) > exact_nullity(T.T, 0, 1);
  }
  {
    SpectrumReport sp = numeric_spectrum(build_T(g), P);
    out["distinct_eigenvalues"] = static_cast<int>(sp.eigenvalues.size());
    out["M"] = sp.M;
    out["pm1_semisimple"] = sp.pm1_semisimple;
    if (!sp.eigenvalues.empty()) {
      AlternantCheck ac = confluent_alternant(sp);
      put("confluent_alternant", ac.ok);
    }
  }
  out["all_pass"] = all;
  return out;
}

int cmd_verify(const std::string& path, int r_max, bool fault, int random_n,
               std::uint64_t seed) {
  json out;
  if (random_n > 0) {
    std::mt19937_64 rng(seed);
    json runs = json::array();
    for (int i = 0; i < random_n; ++i) {
      std::uniform_int_distribution<int> dn(2, 7);
      int n = dn(rng);
      std::uniform_int_distribution<int> dm(n - 1, 10);
      Multigraph g = random_connected(rng(), n, dm(rng), true);
      runs.push_back(verify_one(g, r_max, false));
    }
    out["runs"] = runs;
  } else {
    out = verify_one(load_graph(path), r_max, fault);
  }
  std::cout << out.dump() << "\n";
  return 0;
}

// --- probe ------------------------------------------------------------------

// All connected multigraphs with 1..max_edges edges and no isolated
// vertices, one representative per isomorphism class.
std::vector<Multigraph> enumerate_connected(int max_edges) {
  std::vector<Multigraph> out;
  std::set<CanonicalForm> seen;
  for (int me = 1; me <= max_edges; ++me) {
    for (int n = 1; n <= me + 1; ++n) {
      // Vertex pairs u <= v, then multisets of `me` of them as
      // nondecreasing index sequences.
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
        bool cover = std::all_of(touched.begin(), touched.end(), [](bool b) { return b; });
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
  }
  return out;
}

int cmd_probe(int max_edges, const std::string& question) {
  json out;
  out["question"] = question;
  out["max_edges"] = max_edges;
  auto graphs = enumerate_connected(max_edges);
  if (question == "semisimple") {
    json rows = json::array();
    for (auto& g : graphs) {
      EdgeMatrix T = build_T(g);
      json r;
      r["form"] = canonical_form(g);
      r["edges"] = g.edge_count();
      r["end_vertex"] = predicates(g).has_end_vertex;
      r["semisimple"] = is_semisimple_exact(T.T);
      rows.push_back(r);
    }
    out["graphs"] = rows;
  } else if (question == "single-deletion-zeta") {
    // Group by the multiset of single-deletion characteristic polynomials;
    // report any two non-isomorphic graphs sharing a multiset but
    // differing in their own polynomial.
    std::map<std::string, std::vector<std::pair<CanonicalForm, IntPoly>>> groups;
    for (auto& g : graphs) {
      if (g.edge_count() < 2) continue;
      std::vector<std::string> parts;
      for (int e = 0; e < g.edge_count(); ++e) {
        Multigraph h = delete_edges(g, {e});
        IntPoly p = h.edge_count() ? char_poly(build_T(h)) : IntPoly{Int(1)};
        parts.push_back(jpoly(p).dump());
      }
      std::sort(parts.begin(), parts.end());
      std::string key;
      for (auto& s : parts) key += s + "|";
      groups[key].push_back({canonical_form(g), char_poly(build_T(g))});
    }
    json collisions = json::array();
    for (auto& [key, members] : groups) {
      bool diff = false;
      for (std::size_t i = 1; i < members.size(); ++i)
        if (members[i].second != members[0].second) diff = true;
      if (diff) {
        json c = json::array();
        for (auto& [f, p] : members) {
          json mj;
          mj["form"] = f;
          mj["char_poly"] = jpoly(p);
          c.push_back(mj);
        }
        collisions.push_back(c);
      }
    }
    out["graphs_examined"] = static_cast<int>(graphs.size());
    out["collisions"] = collisions;
  } else {
    throw PreconditionError("probe: unknown question '" + question + "'");
  }
  std::cout << out.dump() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ihara zeta toolkit: edge operator, zeta polynomial, walk counts, "
               "edge-deck reconstruction"};
  app.require_subcommand(1);

  std::string path, what = "all", question = "semisimple";
  int series_order = -1, r_max = -1, random_n = 0, max_edges = 4;
  bool deck_only = false, fault = false;
  std::uint64_t seed = 1;

  auto* z = app.add_subcommand("zeta", "characteristic polynomial of T and zeta data");
  z->add_option("graph-file", path)->required();
  z->add_option("--series-order", series_order);

  auto* d = app.add_subcommand("deck", "edge deck: card classes and multiplicities");
  d->add_option("graph-file", path)->required();

  auto* r = app.add_subcommand("reconstruct", "deck-only reconstruction pipelines");
  r->add_option("graph-file", path)->required();
  r->add_option("--what", what)->check(CLI::IsMember({"zeta", "walks", "pf", "all"}));
  r->add_option("--r-max", r_max);
  r->add_flag("--from-deck-only", deck_only);

  auto* v = app.add_subcommand("verify", "invariant battery");
  v->add_option("graph-file", path);
  v->add_option("--r-max", r_max);
  v->add_flag("--fault", fault);
  v->add_option("--random", random_n);
  v->add_option("--seed", seed);

  auto* p = app.add_subcommand("probe", "exhaustive small-graph experiments");
  p->add_option("--max-edges", max_edges);
  p->add_option("--question", question)
      ->check(CLI::IsMember({"semisimple", "single-deletion-zeta"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? 1 : 0;
  }

  try {
    if (z->parsed()) return cmd_zeta(path, series_order);
    if (d->parsed()) return cmd_deck(path);
    if (r->parsed()) return cmd_reconstruct(path, what, r_max, deck_only);
    if (v->parsed()) {
      if (random_n <= 0 && path.empty())
        throw PreconditionError("verify: need a graph file or --random N");
      return cmd_verify(path, r_max < 0 ? 6 : r_max, fault, random_n, seed);
    }
    if (p->parsed()) return cmd_probe(max_edges, question);
  } catch (const IOError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return 3;
  } catch (const NumericError& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
