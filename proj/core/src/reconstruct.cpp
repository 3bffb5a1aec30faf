#include "ihara/reconstruct.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <tuple>

#include "ihara/edge_matrix.hpp"
#include "ihara/spectral.hpp"

namespace ihara {

namespace {

IntPoly charpoly_graph(const Multigraph& g) {
  if (g.edge_count() == 0) return IntPoly{Int(1)};
  return char_poly(build_T(g));
}

// Shared memoized evaluation of the subset coefficient sums.
struct GRecursion {
  std::map<std::tuple<CanonicalForm, int, int>, Int> memo;
  std::map<CanonicalForm, EdgeDeck> decks;

  const EdgeDeck& deck_of(const DeckCard& card) {
    auto it = decks.find(card.form);
    if (it == decks.end()) it = decks.emplace(card.form, edge_deck(card.representative)).first;
    return it->second;
  }

  Int g(const EdgeDeck& deck, int r, int c) {
    if (r < 1) throw PreconditionError("subset_coefficient_sums: r must be >= 1");
    if (c < 0) throw PreconditionError("subset_coefficient_sums: d - 2r must be >= 0");
    Int total = 0;
    for (auto& card : deck.cards) {
      Int v;
      if (r == 1) {
        v = poly_coeff(charpoly_graph(card.representative), c);
      } else {
        auto key = std::make_tuple(card.form, r - 1, c);
        auto it = memo.find(key);
        if (it != memo.end()) {
          v = it->second;
        } else {
          v = g(deck_of(card), r - 1, c);
          memo.emplace(key, v);
        }
      }
      total += Int(card.multiplicity) * v;
    }
    if (total % r != 0)
      throw NumericError("subset_coefficient_sums: inexact division (corrupted deck)");
    return total / r;
  }
};

std::map<int, Int> top_coeffs_impl(const EdgeDeck& deck, GRecursion& rec) {
  int m = deck.source_edge_count;
  std::map<int, Int> out;
  for (int d = m + 1; d <= 2 * m; ++d) {
    Int s = 0;
    for (int r = 1; r <= d / 2 && r <= m; ++r) {
      Int term = rec.g(deck, r, d - 2 * r);
      s += (r % 2 ? term : -term);
    }
    out[d] = s;
  }
  return out;
}

// Peels the degree-2n factor B out of P = (lambda^2-1)^{m-n} * B given the
// top coefficients [lambda^d] P for d = m+1..2m (plus the monic top), then
// multiplies back. `constant_term` supplies [lambda^0] B when the peel
// cannot reach index 0 (exactly the average-degree-4 case).
IntPoly bass_peel(const std::map<int, Int>& top, int n, int m,
                  const std::function<Int()>& constant_term) {
  IntPoly A = poly_pow(IntPoly{Int(-1), Int(0), Int(1)}, m - n);
  std::vector<std::optional<Int>> B(2 * n + 1);
  for (int j = 0; j < std::min(m, 2 * n + 1); ++j) {
    int k = 2 * m - j;
    Int pk = (k == 2 * m) ? Int(1) : top.at(k);
    Int s = 0;
    for (int i = 2 * n - j + 1; i <= 2 * n; ++i) {
      int ai = k - i;
      if (ai >= 0 && ai < static_cast<int>(A.size()) && B[i]) s += *B[i] * A[ai];
    }
    B[2 * n - j] = pk - s;  // leading coefficient of A is 1
  }
  std::vector<int> missing;
  for (int i = 0; i <= 2 * n; ++i)
    if (!B[i]) missing.push_back(i);
  if (!missing.empty()) {
    if (missing != std::vector<int>{0})
      throw NumericError("reconstruct_zeta: unexpected unresolved coefficients");
    B[0] = constant_term();
  }
  IntPoly Bp(2 * n + 1);
  for (int i = 0; i <= 2 * n; ++i) Bp[i] = *B[i];
  IntPoly P = poly_mul(A, poly_trim(Bp));
  // Internal consistency: the assembled polynomial must reproduce every
  // reconstructed top coefficient, not only the ones the peel consumed.
  if (poly_degree(P) != 2 * m || P[2 * m] != 1)
    throw NumericError("reconstruct_zeta: assembled polynomial malformed");
  for (auto& [d, c] : top)
    if (poly_coeff(P, d) != c)
      throw NumericError("reconstruct_zeta: internal consistency failure at degree " +
                         std::to_string(d));
  return P;
}

std::vector<int> sorted_degrees(const Multigraph& g) {
  std::vector<int> d(g.vertex_count);
  for (int v = 0; v < g.vertex_count; ++v) d[v] = g.degree(v);
  std::sort(d.begin(), d.end());
  return d;
}

// #ways to pick k distinct edge-endpoint slots at one vertex of H covering
// every edge of H (the weight in the binomial-moment identities).
Int moment_phi(const Multigraph& h, int k) {
  Int tot = 0;
  int me = h.edge_count();
  for (int v = 0; v < h.vertex_count; ++v) {
    std::vector<int> slots;  // incident endpoint slots, by edge id
    for (int i = 0; i < me; ++i) {
      auto [a, b] = h.edges[i];
      if (a == v) slots.push_back(i);
      if (b == v) slots.push_back(i);
    }
    int ns = static_cast<int>(slots.size());
    if (ns < k) continue;
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      std::set<int> covered;
      for (int i : idx) covered.insert(slots[i]);
      if (static_cast<int>(covered.size()) == me) tot += 1;
      int i = k - 1;
      while (i >= 0 && idx[i] == ns - k + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return tot;
}

Int binomial(int a, int b) {
  if (b < 0 || b > a) return 0;
  Int r = 1;
  for (int i = 0; i < b; ++i) {
    r *= (a - i);
    r /= (i + 1);
  }
  return r;
}

bool moment_check(const EdgeDeck& deck, const std::vector<int>& cand) {
  int m = deck.source_edge_count;
  for (int k = 2; k <= std::min(3, m - 1); ++k) {
    Int want = 0;
    for (int d : cand) want += binomial(d, k);
    Int got = 0;
    for (int ks = 1; ks <= k; ++ks) {
      auto S = kelly_class_counts(deck, ks);
      for (auto& [form, cnt] : S) got += moment_phi(graph_of_form(form), k) * cnt;
    }
    if (want != got) return false;
  }
  return true;
}

}  // namespace

Int subset_coefficient_sums(const EdgeDeck& deck, int r, int d) {
  if (d - 2 * r < 0) throw PreconditionError("subset_coefficient_sums: requires d - 2r >= 0");
  GRecursion rec;
  return rec.g(deck, r, d - 2 * r);
}

std::map<int, Int> reconstruct_top_coeffs(const EdgeDeck& deck) {
  GRecursion rec;
  return top_coeffs_impl(deck, rec);
}

DegreeSequenceResult degree_sequence_from_deck(const EdgeDeck& deck) {
  int n = deck.source_vertex_count, m = deck.source_edge_count;
  // Loop count: every loop of G survives in m-1 cards.
  long long tot_loops = 0;
  for (auto& card : deck.cards)
    tot_loops += static_cast<long long>(card.multiplicity) * card.representative.loop_count();
  if (m < 2 || tot_loops % (m - 1) != 0)
    throw NumericError("degree_sequence_from_deck: inconsistent loop counts");
  int L = static_cast<int>(tot_loops / (m - 1));
  // Candidates: one card's degree sequence plus an edge (two +1's or one +2).
  std::vector<int> h0 = sorted_degrees(deck.cards[0].representative);
  std::set<std::vector<int>> cands;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      std::vector<int> c = h0;
      if (i == j) c[i] += 2;
      else {
        c[i] += 1;
        c[j] += 1;
      }
      std::sort(c.begin(), c.end());
      cands.insert(c);
    }
  auto count_of = [](const std::vector<int>& v) {
    std::map<int, int> c;
    for (int x : v) ++c[x];
    return c;
  };
  std::vector<std::vector<int>> good;
  for (auto& cand : cands) {
    bool ok = true;
    int must_loop = 0, can_loop = 0;
    auto cc = count_of(cand);
    for (auto& card : deck.cards) {
      auto hc = count_of(sorted_degrees(card.representative));
      // Multiset differences cand \ card and card \ cand.
      std::vector<int> plus, minus;
      for (auto& [d, c] : cc) {
        int diff = c - (hc.count(d) ? hc[d] : 0);
        for (int i = 0; i < diff; ++i) plus.push_back(d);
      }
      for (auto& [d, c] : hc) {
        int diff = c - (cc.count(d) ? cc[d] : 0);
        for (int i = 0; i < diff; ++i) minus.push_back(d);
      }
      std::sort(plus.begin(), plus.end());
      std::sort(minus.begin(), minus.end());
      // Readings of "one edge was deleted": a non-loop between degrees x,y
      // gives plus={x,y}, minus={x-1,y-1}; a loop at degree x gives
      // plus={x}, minus={x-2}; the single-element difference also reads as
      // a non-loop when the candidate has a vertex already at degree x-1.
      bool reads_nonloop = false, reads_loop = false;
      if (plus.size() == minus.size()) {
        if (plus.size() == 2) {
          std::vector<int> pm{plus[0] - 1, plus[1] - 1};
          std::sort(pm.begin(), pm.end());
          if (pm == minus) reads_nonloop = true;
        }
        if (plus.size() == 1 && plus[0] - 2 == minus[0]) {
          reads_loop = true;
          if (cc.count(plus[0] - 1) && cc[plus[0] - 1] >= 1) reads_nonloop = true;
        }
      }
      if (!reads_nonloop && !reads_loop) {
        ok = false;
        break;
      }
      if (reads_loop && !reads_nonloop) must_loop += card.multiplicity;
      if (reads_loop) can_loop += card.multiplicity;
    }
    if (ok && must_loop <= L && L <= can_loop) good.push_back(cand);
  }
  if (good.size() > 1) {
    std::vector<std::vector<int>> filtered;
    for (auto& cand : good)
      if (moment_check(deck, cand)) filtered.push_back(cand);
    good = filtered;
  }
  if (good.size() != 1)
    throw NumericError("degree_sequence_from_deck: candidate count " +
                       std::to_string(good.size()) + " (expected exactly 1)");
  return DegreeSequenceResult{L, good[0]};
}

IntPoly reconstruct_zeta(const EdgeDeck& deck) {
  int n = deck.source_vertex_count, m = deck.source_edge_count;
  if (2 * m < 4 * n)
    throw PreconditionError("reconstruct_zeta: requires average degree >= 4 (got 2|E| < 4|V|)");
  GRecursion rec;
  auto top = top_coeffs_impl(deck, rec);
  return bass_peel(top, n, m, [&]() {
    // [lambda^0] B = prod(deg v - 1), from the reconstructed degree sequence.
    auto ds = degree_sequence_from_deck(deck);
    Int p = 1;
    for (int d : ds.degrees) p *= (d - 1);
    return p;
  });
}

std::vector<Int> reconstruct_N_total(const EdgeDeck& deck, int R) {
  return total_closed_walks(reconstruct_zeta(deck), R);
}

namespace {
std::string deck_signature(const EdgeDeck& deck) {
  std::string s = std::to_string(deck.source_vertex_count) + "#" +
                  std::to_string(deck.source_edge_count);
  for (auto& c : deck.cards) s += "#" + std::to_string(c.multiplicity) + ":" + c.form;
  return s;
}
}  // namespace

DeckAnalysis analyze_deck(const EdgeDeck& deck) {
  // The per-edge pipelines all start from the same analysis; cache it so a
  // multi-quantity run reconstructs the polynomial once.
  static std::mutex cache_mutex;
  static std::map<std::string, DeckAnalysis> cache;
  std::string sig = deck_signature(deck);
  {
    std::lock_guard<std::mutex> lk(cache_mutex);
    auto it = cache.find(sig);
    if (it != cache.end()) return it->second;
  }
  DeckAnalysis a;
  a.n = deck.source_vertex_count;
  a.m = deck.source_edge_count;
  a.dbar = Rat(2 * a.m, a.n);
  a.dbar_ge_4 = 2 * a.m >= 4 * a.n;
  a.dbar_gt_4 = 2 * a.m > 4 * a.n;
  a.betti = a.m - a.n + 1;
  a.zeta = reconstruct_zeta(deck);
  bool all_cards_bip = true;
  for (auto& card : deck.cards)
    if (!predicates(card.representative).bipartite) all_cards_bip = false;
  a.bipartite = all_cards_bip && root_multiplicity(a.zeta, -1) == a.betti;
  a.squarefree = squarefree_part(a.zeta);
  a.seeds_needed = poly_degree(a.squarefree);
  GirthReport gr = girth_and_polygons(a.zeta, a.m);
  if (!gr.found) throw NumericError("analyze_deck: degenerate polynomial, no girth readout");
  a.girth = gr.girth;
  a.r_safe = 2 * a.girth - 1;
  {
    std::lock_guard<std::mutex> lk(cache_mutex);
    if (cache.size() > 256) cache.clear();
    cache.emplace(sig, a);
  }
  return a;
}

namespace {

void require_per_edge_hypothesis(const DeckAnalysis& a, const char* who) {
  if (!(a.dbar_gt_4 || (a.bipartite && a.dbar_ge_4)))
    throw PreconditionError(std::string(who) +
                            ": requires average degree > 4, or bipartite with average degree >= 4");
}

using I128 = __int128;

Int from128(I128 x) {
  long long q = static_cast<long long>(x / (I128(1) << 62));
  long long rem = static_cast<long long>(x % (I128(1) << 62));
  return (Int(q) << 62) + rem;
}

// Continuation lists of the T-digraph restricted to an edge subset: for
// each kept oriented edge, the kept oriented edges that may follow it.
// Oriented edges of the subset are indexed 0..2k-1 (k = |keep|).
std::vector<std::vector<int>> continuations(const Multigraph& h, const std::vector<int>& keep) {
  int k = static_cast<int>(keep.size());
  std::vector<int> org(2 * k), ter(2 * k);
  for (int i = 0; i < k; ++i) {
    auto [u, v] = h.edges[keep[i]];
    org[i] = u;
    ter[i] = v;
    org[i + k] = v;
    ter[i + k] = u;
  }
  std::vector<std::vector<int>> cont(2 * k);
  for (int a = 0; a < 2 * k; ++a)
    for (int b = 0; b < 2 * k; ++b) {
      int rev_a = a < k ? a + k : a - k;
      if (b != rev_a && ter[a] == org[b]) cont[a].push_back(b);
    }
  return cont;
}

// Closed non-backtracking words of each length d = 1..dmax covering every
// edge of H (inclusion-exclusion over edge subsets; traces by per-start
// column iteration). int64 intermediates; counts at these sizes stay far
// below the overflow line, and the final totals accumulate in 128 bits.
std::vector<Int> covering_words_all(const Multigraph& h, int dmax) {
  int me = h.edge_count();
  std::vector<I128> tot(dmax + 1, 0);
  std::vector<int> keep;
  for (int mask = 1; mask < (1 << me); ++mask) {
    keep.clear();
    for (int i = 0; i < me; ++i)
      if (mask >> i & 1) keep.push_back(i);
    int removed = me - static_cast<int>(keep.size());
    auto cont = continuations(h, keep);
    int sz = static_cast<int>(cont.size());
    int sign = removed % 2 ? -1 : 1;
    for (int start = 0; start < sz; ++start) {
      std::vector<long long> w(sz, 0), nx(sz);
      w[start] = 1;
      for (int d = 1; d <= dmax; ++d) {
        std::fill(nx.begin(), nx.end(), 0);
        for (int a = 0; a < sz; ++a)
          if (w[a])
            for (int b : cont[a]) nx[b] += w[a];
        w.swap(nx);
        tot[d] += sign * w[start];
      }
    }
  }
  std::vector<Int> out(dmax + 1, Int(0));
  for (int d = 1; d <= dmax; ++d) out[d] = from128(tot[d]);
  return out;
}

int euler_phi(int k) {
  int res = k;
  for (int p = 2; p * p <= k; ++p)
    if (k % p == 0) {
      res = res / p * (p - 1);
      while (k % p == 0) k /= p;
    }
  if (k > 1) res = res / k * (k - 1);
  return res;
}

// Cyclic classes of closed covering words, per length r = 1..rmax.
std::vector<Int> cyclic_cover_all(const Multigraph& h, int rmax) {
  auto words = covering_words_all(h, rmax);
  std::vector<Int> out(rmax + 1, Int(0));
  for (int r = 1; r <= rmax; ++r) {
    Int s = 0;
    for (int d = 1; d <= r; ++d)
      if (r % d == 0) s += Int(euler_phi(r / d)) * words[d];
    if (s % r != 0) throw NumericError("cyclic class count: inexact division");
    out[r] = s / r;
  }
  return out;
}

// Non-backtracking walks of L = 1..Lmax edges (L-1 transitions) covering
// every edge of H, by inclusion-exclusion.
std::vector<Int> covering_walks_all(const Multigraph& h, int Lmax) {
  int me = h.edge_count();
  std::vector<I128> tot(Lmax + 1, 0);
  std::vector<int> keep;
  for (int mask = 1; mask < (1 << me); ++mask) {
    keep.clear();
    for (int i = 0; i < me; ++i)
      if (mask >> i & 1) keep.push_back(i);
    int removed = me - static_cast<int>(keep.size());
    auto cont = continuations(h, keep);
    int sz = static_cast<int>(cont.size());
    int sign = removed % 2 ? -1 : 1;
    std::vector<long long> w(sz, 1), nx(sz);
    long long all = sz;
    for (int L = 1; L <= Lmax; ++L) {
      tot[L] += sign * all;
      std::fill(nx.begin(), nx.end(), 0);
      all = 0;
      for (int a = 0; a < sz; ++a)
        if (w[a])
          for (int b : cont[a]) nx[b] += w[a];
      w.swap(nx);
      for (long long x : w) all += x;
    }
  }
  std::vector<Int> out(Lmax + 1, Int(0));
  for (int L = 1; L <= Lmax; ++L) out[L] = from128(tot[L]);
  return out;
}

// The deck-counting step shared by the N and W pipelines: per card class,
// sum_H weight(H, r) * (S(H, G) - S(H, card)) over subgraph classes H with
// at most r_cap edges.
struct KellyTables {
  std::vector<std::map<CanonicalForm, Int>> SG;  // [k] -> class counts in G
  std::vector<std::map<CanonicalForm, Int>> Scard_by_card;  // flattened below
};

std::vector<std::map<CanonicalForm, Int>> source_counts(const EdgeDeck& deck, int r_cap) {
  std::vector<std::map<CanonicalForm, Int>> SG(r_cap + 1);
  for (int k = 1; k <= r_cap && k < deck.source_edge_count; ++k)
    SG[k] = kelly_class_counts(deck, k);
  return SG;
}

}  // namespace

std::vector<PerCardSeries> reconstruct_Nr_edge(const EdgeDeck& deck, int R) {
  DeckAnalysis a = analyze_deck(deck);
  require_per_edge_hypothesis(a, "reconstruct_Nr_edge");
  int r_cap = std::min(a.r_safe, a.m - 1);
  int Mn = a.seeds_needed;
  if (Mn - 1 > r_cap)
    throw NumericError(
        "reconstruct_Nr_edge: needs " + std::to_string(Mn) +
        " seed values but the covering-class counting step is only sound for r <= " +
        std::to_string(r_cap) + " (= min(2*girth-1, |E|-1)); refusing to emit unsound values");
  auto SG = source_counts(deck, r_cap);
  std::map<CanonicalForm, std::vector<Int>> pcyc_memo;
  std::vector<PerCardSeries> out;
  for (auto& card : deck.cards) {
    std::vector<std::map<CanonicalForm, Int>> SC(r_cap + 1);
    for (int k = 1; k <= r_cap && k < a.m; ++k)
      SC[k] = subgraph_class_counts(card.representative, k);
    std::vector<Int> seeds(r_cap + 1, Int(0));
    seeds[0] = 2;
    for (int r = 1; r <= r_cap; ++r) {
      Int tot = 0;
      for (int k = 1; k <= r; ++k) {
        for (auto& [form, sg] : SG[k]) {
          Int diff = sg;
          auto it = SC[k].find(form);
          if (it != SC[k].end()) diff -= it->second;
          if (diff == 0) continue;
          auto pit = pcyc_memo.find(form);
          if (pit == pcyc_memo.end()) {
            Multigraph h = graph_of_form(form);
            std::vector<Int> pc(r_cap + 1, Int(0));
            if (predicates(h).connected) pc = cyclic_cover_all(h, r_cap);
            pit = pcyc_memo.emplace(form, std::move(pc)).first;
          }
          tot += pit->second[r] * diff;
        }
      }
      seeds[r] = tot;
    }
    // Consistency of the semisimple model on the spare seed range.
    const IntPoly& s = a.squarefree;
    for (int r0 = 0; r0 + Mn <= r_cap; ++r0) {
      Int acc = 0;
      for (int k = 0; k <= Mn; ++k) acc += s[k] * seeds[r0 + k];
      if (acc != 0)
        throw NumericError("reconstruct_Nr_edge: seed values violate the spectral recurrence "
                           "(non-semisimple spectrum beyond +/-1?)");
    }
    // Exact extension by the recurrence of the squarefree polynomial.
    std::vector<Int> vals(std::max(R, r_cap) + 1, Int(0));
    for (int r = 0; r <= r_cap; ++r) vals[r] = seeds[r];
    for (int r = r_cap + 1; r < static_cast<int>(vals.size()); ++r) {
      Int acc = 0;
      for (int k = 0; k < Mn; ++k) acc += s[k] * vals[r - Mn + k];
      vals[r] = -acc;  // monic leading coefficient
    }
    vals.resize(R + 1);
    out.push_back(PerCardSeries{card.form, card.multiplicity, vals});
  }
  return out;
}

std::vector<PerCardSeries> reconstruct_Wr_edge(const EdgeDeck& deck, int R) {
  DeckAnalysis a = analyze_deck(deck);
  require_per_edge_hypothesis(a, "reconstruct_Wr_edge");
  // A length-R walk (R transitions) spans up to R+1 edges; the subgraph
  // counting step needs every spanned subgraph strictly smaller than G.
  if (R + 1 >= a.m) throw PreconditionError("reconstruct_Wr_edge: requires R + 1 < |E|");
  auto SG = source_counts(deck, R + 1);
  std::map<CanonicalForm, std::vector<Int>> q_memo;
  std::vector<PerCardSeries> out;
  for (auto& card : deck.cards) {
    std::vector<std::map<CanonicalForm, Int>> SC(R + 2);
    for (int k = 1; k <= R + 1; ++k) SC[k] = subgraph_class_counts(card.representative, k);
    std::vector<Int> vals(R + 1, Int(0));
    for (int r = 0; r <= R; ++r) {
      Int tot = 0;
      for (int k = 1; k <= r + 1; ++k) {
        for (auto& [form, sg] : SG[k]) {
          Int diff = sg;
          auto it = SC[k].find(form);
          if (it != SC[k].end()) diff -= it->second;
          if (diff == 0) continue;
          auto qit = q_memo.find(form);
          if (qit == q_memo.end()) {
            Multigraph h = graph_of_form(form);
            std::vector<Int> q(R + 2, Int(0));
            if (predicates(h).connected) q = covering_walks_all(h, R + 1);
            qit = q_memo.emplace(form, std::move(q)).first;
          }
          tot += qit->second[r + 1] * diff;
        }
      }
      vals[r] = tot;
    }
    out.push_back(PerCardSeries{card.form, card.multiplicity, vals});
  }
  return out;
}

std::vector<PerCardSeries> reconstruct_Mr_edge(const EdgeDeck& deck, int R) {
  DeckAnalysis a = analyze_deck(deck);
  require_per_edge_hypothesis(a, "reconstruct_Mr_edge");
  int low = a.m - 2;  // the square identity is applied where W is available
  auto N = reconstruct_Nr_edge(deck, std::max(R, low));
  auto W = reconstruct_Wr_edge(deck, low);
  int Mn = a.seeds_needed;
  if (Mn > low + 1)
    throw NumericError("reconstruct_Mr_edge: not enough identity-range values to seed the "
                       "spectral extension");
  std::vector<PerCardSeries> out;
  for (std::size_t ci = 0; ci < deck.cards.size(); ++ci) {
    const auto& Ne = N[ci].values;
    const auto& We = W[ci].values;
    // sum_{i+j=r} M_i M_j = sum_{i+j=r} W_i N_j, M_0 = 2.
    std::vector<Rat> M(low + 1, Rat(0));
    M[0] = 2;
    for (int r = 1; r <= low; ++r) {
      Rat rhs = 0;
      for (int i = 0; i <= r; ++i) rhs += Rat(We[i]) * Rat(Ne[r - i]);
      Rat middle = 0;
      for (int i = 1; i < r; ++i) middle += M[i] * M[r - i];
      M[r] = (rhs - middle) / (2 * M[0]);
    }
    std::vector<Int> vals(std::max(R, low) + 1, Int(0));
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    for (int r = 0; r <= low; ++r) {
      if (denominator(M[r]) != 1)
        throw NumericError("reconstruct_Mr_edge: non-integer value at r = " + std::to_string(r));
      vals[r] = numerator(M[r]);
    }
    const IntPoly& s = a.squarefree;
    for (int r = low + 1; r < static_cast<int>(vals.size()); ++r) {
      Int acc = 0;
      for (int k = 0; k < Mn; ++k) acc += s[k] * vals[r - Mn + k];
      vals[r] = -acc;
    }
    vals.resize(R + 1);
    out.push_back(PerCardSeries{deck.cards[ci].form, deck.cards[ci].multiplicity, vals});
  }
  return out;
}

std::vector<PerCardSeries> reconstruct_Fr_edge(const EdgeDeck& deck, int R) {
  DeckAnalysis a = analyze_deck(deck);
  require_per_edge_hypothesis(a, "reconstruct_Fr_edge");
  auto N = reconstruct_Nr_edge(deck, R);
  RatSeries zg = zeta_inverse_series(a.zeta, R);
  std::vector<PerCardSeries> out;
  for (std::size_t ci = 0; ci < deck.cards.size(); ++ci) {
    IntPoly cardP = charpoly_graph(deck.cards[ci].representative);
    RatSeries zc = zeta_inverse_series(cardP, R);
    RatSeries D = series_div(zc, zg);  // zeta_G / zeta_{G-e} as a series
    std::vector<Int> vals(R + 1, Int(0));
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    for (int r = 0; r <= R; ++r) {
      // F_r(->e) = sum_{i+j=r} n_i n_j - [u^r] D, with n_i = N_i(e)/2.
      Rat acc = 0;
      for (int i = 0; i <= r; ++i) acc += Rat(N[ci].values[i], 2) * Rat(N[ci].values[r - i], 2);
      Rat f = acc - D.c[r];
      Rat fe = 2 * f;  // F_r(e) = 2 F_r(->e)
      if (denominator(fe) != 1)
        throw NumericError("reconstruct_Fr_edge: non-integer value at r = " + std::to_string(r));
      vals[r] = numerator(fe);
    }
    out.push_back(PerCardSeries{deck.cards[ci].form, deck.cards[ci].multiplicity, vals});
  }
  return out;
}

std::vector<PFPairResult> reconstruct_pf_pairs(const EdgeDeck& deck) {
  DeckAnalysis a = analyze_deck(deck);
  require_per_edge_hypothesis(a, "reconstruct_pf_pairs");
  int Mn = a.seeds_needed;
  auto N = reconstruct_Nr_edge(deck, std::max(Mn - 1, 1));
  auto M = reconstruct_Mr_edge(deck, std::max(Mn - 1, 1));
  auto roots = distinct_roots(a.zeta);
  // Dominant eigenvalue: the largest real root (positive for these T).
  int pf_idx = -1;
  double best = -1e300;
  for (std::size_t i = 0; i < roots.size(); ++i)
    if (std::abs(roots[i].imag()) < 1e-9 && roots[i].real() > best) {
      best = roots[i].real();
      pf_idx = static_cast<int>(i);
    }
  if (pf_idx < 0) throw NumericError("reconstruct_pf_pairs: no real dominant eigenvalue found");
  double lam_pf = roots[pf_idx].real();
  // Vandermonde solve helper: coefficient of lambda_PF in the expansion of
  // an integer sequence over the distinct eigenvalues.
  auto pf_coefficient = [&](const std::vector<Int>& seq) {
    int sz = static_cast<int>(roots.size());
    Eigen::MatrixXcd V(sz, sz);
    Eigen::VectorXcd b(sz);
    for (int r = 0; r < sz; ++r) {
      for (int i = 0; i < sz; ++i) V(r, i) = std::pow(roots[i], r);
      b(r) = seq[r].convert_to<double>();
    }
    Eigen::VectorXcd y = V.fullPivLu().solve(b);
    return y(pf_idx).real();
  };
  // alpha = sqrt(sum_e sigma_tilde_e), positive root.
  double sum_sigma = 0;
  std::vector<double> sig_tilde(deck.cards.size());
  for (std::size_t ci = 0; ci < deck.cards.size(); ++ci) {
    sig_tilde[ci] = pf_coefficient(M[ci].values);
    sum_sigma += deck.cards[ci].multiplicity * sig_tilde[ci];
  }
  if (sum_sigma <= 0)
    throw NumericError("reconstruct_pf_pairs: nonpositive sigma normalization sum");
  double alpha = std::sqrt(sum_sigma);
  std::vector<PFPairResult> out;
  for (std::size_t ci = 0; ci < deck.cards.size(); ++ci) {
    PFPairResult r;
    r.form = deck.cards[ci].form;
    r.multiplicity = deck.cards[ci].multiplicity;
    r.pi = pf_coefficient(N[ci].values) / 2.0;
    r.sigma = sig_tilde[ci] / alpha;
    double disc = r.sigma * r.sigma - 4 * r.pi;
    if (disc >= -1e-9) {
      if (disc < 0) disc = 0;
      r.pair_real = true;
      r.p_pair[0] = (r.sigma - std::sqrt(disc)) / 2;
      r.p_pair[1] = (r.sigma + std::sqrt(disc)) / 2;
    } else {
      // Complex pair: reported as a finding, not an abort, so the (sound)
      // pi value stays visible alongside the sigma estimate.
      r.pair_real = false;
      r.p_pair[0] = r.p_pair[1] = r.sigma / 2;
    }
    // Literal Cesaro average of N_r(e) / (2 lambda^r), k = 1e5, using the
    // spectral recurrence in scaled double arithmetic.
    {
      const IntPoly& s = a.squarefree;
      int deg = poly_degree(s);
      std::vector<double> buf(deg);
      for (int i = 0; i < deg; ++i) buf[i] = N[ci].values[i].convert_to<double>() / std::pow(lam_pf, i);
      double acc = 0;
      long long K = 100000;
      for (int i = 0; i < deg && i < K; ++i) acc += buf[i];
      for (long long r2 = deg; r2 < K; ++r2) {
        double next = 0;
        for (int k = 0; k < deg; ++k)
          next -= s[k].convert_to<double>() * buf[k] / std::pow(lam_pf, deg - k);
        // shift
        for (int k = 0; k + 1 < deg; ++k) buf[k] = buf[k + 1];
        buf[deg - 1] = next;
        acc += next;
      }
      r.pi_cesaro = acc / (2.0 * K);
    }
    out.push_back(r);
  }
  return out;
}

// --- subset multiset variant ------------------------------------------------

std::vector<IntPoly> generate_Z(const Multigraph& g) {
  int m = g.edge_count();
  std::map<CanonicalForm, IntPoly> cache;
  std::vector<IntPoly> out;
  // Deleting r = 1..m-1 edges = keeping k = 1..m-1 edges.
  for (int k = 1; k <= m - 1; ++k) {
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      CanonicalForm f = subgraph_form(g, idx);
      auto it = cache.find(f);
      if (it == cache.end()) {
        Multigraph sub;
        sub.vertex_count = g.vertex_count;
        for (int i : idx) sub.edges.push_back(g.edges[i]);
        IntPoly P = charpoly_graph(sub);
        IntPoly zinv(P.rbegin(), P.rend());  // 1/zeta coefficients, ascending in u
        it = cache.emplace(f, zinv).first;
      }
      out.push_back(it->second);
      int i = k - 1;
      while (i >= 0 && idx[i] == m - k + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return out;
}

IntPoly reconstruct_zeta_from_Z(const std::vector<IntPoly>& zmultiset, int vertex_count) {
  if (zmultiset.empty()) throw PreconditionError("reconstruct_zeta_from_Z: empty multiset");
  int maxdeg = 0;
  for (auto& p : zmultiset) {
    // Trailing zeros are meaningful here: each element is a reversed char
    // poly whose array length encodes the subgraph size.
    int d = static_cast<int>(p.size()) - 1;
    if (d % 2 != 0) throw PreconditionError("reconstruct_zeta_from_Z: odd-degree polynomial");
    maxdeg = std::max(maxdeg, d);
  }
  int m = maxdeg / 2 + 1;
  int n = vertex_count;
  if (2 * m <= 4 * n)
    throw PreconditionError("reconstruct_zeta_from_Z: requires average degree > 4");
  // Group by deleted-subset size r = m - deg/2 and validate completeness.
  std::vector<std::vector<const IntPoly*>> groups(m);
  for (auto& p : zmultiset) {
    int r = m - (static_cast<int>(p.size()) - 1) / 2;
    if (r < 1 || r > m - 1)
      throw PreconditionError("reconstruct_zeta_from_Z: polynomial of unexpected degree");
    groups[r].push_back(&p);
  }
  for (int r = 1; r <= m - 1; ++r)
    if (Int(groups[r].size()) != binomial(m, r))
      throw PreconditionError("reconstruct_zeta_from_Z: subset size " + std::to_string(r) +
                              " has " + std::to_string(groups[r].size()) +
                              " polynomials (degree gap or wrong count)");
  // [lambda^{d-2r}] char_poly(G - E') = [u^{2m-d}] (1/zeta_{G-E'}).
  std::map<int, Int> top;
  for (int d = m + 1; d <= 2 * m; ++d) {
    Int s = 0;
    for (int r = 1; r <= d / 2 && r <= m; ++r) {
      Int g;
      if (r <= m - 1) {
        g = 0;
        int j = 2 * m - d;
        for (auto* p : groups[r]) g += poly_coeff(*p, j);
      } else {
        // r = m: the empty graph, char poly 1; only d = 2m contributes.
        g = (d == 2 * m) ? 1 : 0;
      }
      s += (r % 2 ? g : -g);
    }
    top[d] = s;
  }
  return bass_peel(top, n, m, []() -> Int {
    throw NumericError("reconstruct_zeta_from_Z: constant term unexpectedly required");
  });
}

}  // namespace ihara
