#include "ihara/multigraph.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <queue>
#include <sstream>

namespace ihara {

int Multigraph::degree(int v) const {
  int d = 0;
  for (auto& [a, b] : edges) {
    if (a == v) ++d;
    if (b == v) ++d;
  }
  return d;
}

int Multigraph::loops_at(int v) const {
  int d = 0;
  for (auto& [a, b] : edges)
    if (a == v && b == v) ++d;
  return d;
}

int Multigraph::loop_count() const {
  int d = 0;
  for (auto& [a, b] : edges)
    if (a == b) ++d;
  return d;
}

// --- parsing ---------------------------------------------------------------

Multigraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::string> rows;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    bool blank = line.find_first_not_of(" \t\r\n") == std::string::npos;
    if (!blank) rows.push_back(line);
  }
  if (rows.empty()) throw PreconditionError("graph file: no header line");
  std::istringstream head(rows[0]);
  long long n = -1, m = -1;
  if (!(head >> n >> m) || n <= 0 || m < 0)
    throw PreconditionError("graph file: malformed header: " + rows[0]);
  std::string extra;
  if (head >> extra) throw PreconditionError("graph file: malformed header: " + rows[0]);
  if (m == 0) throw PreconditionError("graph file: empty edge list");
  if (static_cast<long long>(rows.size()) - 1 != m)
    throw PreconditionError("graph file: expected " + std::to_string(m) + " edge lines, got " +
                            std::to_string(rows.size() - 1));
  Multigraph g;
  g.vertex_count = static_cast<int>(n);
  for (long long i = 1; i <= m; ++i) {
    std::istringstream es(rows[i]);
    long long u = -1, v = -1;
    if (!(es >> u >> v) || (es >> extra))
      throw PreconditionError("graph file: malformed edge line: " + rows[i]);
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw PreconditionError("graph file: vertex index out of range: " + rows[i]);
    g.edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  return g;
}

// --- predicates ------------------------------------------------------------

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

GraphPredicates predicates(const Multigraph& g) {
  GraphPredicates out;
  int n = g.vertex_count, m = g.edge_count();
  UnionFind uf(n);
  for (auto& [u, v] : g.edges) uf.unite(u, v);
  int comps = 0;
  for (int v = 0; v < n; ++v)
    if (uf.find(v) == v) ++comps;
  out.connected = (comps == 1);
  for (int v = 0; v < n && !out.has_end_vertex; ++v)
    if (g.degree(v) == 1) out.has_end_vertex = true;
  // 2-coloring; any loop or odd cycle breaks bipartiteness.
  std::vector<int> color(n, -1);
  bool bip = true;
  std::vector<std::vector<int>> adj(n);
  for (auto& [u, v] : g.edges) {
    if (u == v) bip = false;
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (int s = 0; s < n && bip; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty() && bip) {
      int x = q.front();
      q.pop();
      for (int y : adj[x]) {
        if (color[y] == -1) {
          color[y] = 1 - color[x];
          q.push(y);
        } else if (color[y] == color[x]) {
          bip = false;
          break;
        }
      }
    }
  }
  out.bipartite = bip;
  out.p = bip ? 0 : 1;
  if (out.connected) out.betti = m - n + 1;
  out.avg_degree = Rat(2 * m, n);
  return out;
}

Multigraph delete_edges(const Multigraph& g, const std::vector<int>& ids) {
  std::vector<char> drop(g.edges.size(), 0);
  for (int id : ids) {
    if (id < 0 || id >= g.edge_count()) throw PreconditionError("delete_edges: invalid edge id");
    drop[id] = 1;
  }
  Multigraph out;
  out.vertex_count = g.vertex_count;
  for (int i = 0; i < g.edge_count(); ++i)
    if (!drop[i]) out.edges.push_back(g.edges[i]);
  return out;
}

// --- canonical form --------------------------------------------------------

namespace {

using Edge = std::pair<int, int>;

// Canonical sorted edge list of one connected component given in local labels
// 0..c-1. Minimizes over relabelings, restricted to iterated-refinement color
// classes (colors are isomorphism-invariant, and class target positions are
// ordered by the invariant color keys, so the restricted minimum is itself a
// canonical form).
std::vector<Edge> canonical_component(int c, const std::vector<Edge>& edges) {
  // Iterated refinement: key strings are label-independent.
  std::vector<std::string> key(c);
  {
    std::vector<int> deg(c, 0), loops(c, 0);
    for (auto& [u, v] : edges) {
      ++deg[u];
      ++deg[v];
      if (u == v) ++loops[u];
    }
    for (int v = 0; v < c; ++v)
      key[v] = "d" + std::to_string(deg[v]) + "l" + std::to_string(loops[v]);
    for (int round = 0; round < 3; ++round) {
      std::vector<std::vector<std::string>> nb(c);
      for (auto& [u, v] : edges) {
        nb[u].push_back(key[v]);
        nb[v].push_back(key[u]);
      }
      std::vector<std::string> next(c);
      for (int v = 0; v < c; ++v) {
        std::sort(nb[v].begin(), nb[v].end());
        next[v] = key[v] + "[";
        for (auto& s : nb[v]) next[v] += s + ",";
        next[v] += "]";
      }
      key = std::move(next);
    }
  }
  // Group vertices into classes ordered by key.
  std::map<std::string, std::vector<int>> classes_by_key;
  for (int v = 0; v < c; ++v) classes_by_key[key[v]].push_back(v);
  std::vector<std::vector<int>> classes;
  std::vector<int> base;
  int pos = 0;
  std::uint64_t work = 1;
  for (auto& [k, members] : classes_by_key) {
    (void)k;
    base.push_back(pos);
    pos += static_cast<int>(members.size());
    for (std::uint64_t f = 2; f <= members.size(); ++f) work *= f;
    if (work > 50'000'000ULL)
      throw PreconditionError("canonical_form: size limit exceeded (too symmetric/large)");
    classes.push_back(members);
  }
  std::vector<int> label(c, -1);
  std::vector<Edge> best, cur(edges.size());
  bool have_best = false;
  std::function<void(std::size_t)> rec = [&](std::size_t ci) {
    if (ci == classes.size()) {
      for (std::size_t i = 0; i < edges.size(); ++i) {
        int a = label[edges[i].first], b = label[edges[i].second];
        cur[i] = {std::min(a, b), std::max(a, b)};
      }
      std::sort(cur.begin(), cur.end());
      if (!have_best || cur < best) {
        best = cur;
        have_best = true;
      }
      return;
    }
    std::vector<int> members = classes[ci];
    std::sort(members.begin(), members.end());
    do {
      for (std::size_t j = 0; j < members.size(); ++j) label[members[j]] = base[ci] + static_cast<int>(j);
      rec(ci + 1);
    } while (std::next_permutation(members.begin(), members.end()));
  };
  rec(0);
  return best;
}

std::string encode(int n, const std::vector<Edge>& edges) {
  std::string s = "V" + std::to_string(n) + "|";
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i) s += ";";
    s += std::to_string(edges[i].first) + "-" + std::to_string(edges[i].second);
  }
  return s;
}

// Canonical body: components canonicalized individually, sorted, then
// assembled with consecutive global labels (isolated vertices come last).
std::vector<Edge> canonical_edges(const Multigraph& g) {
  int n = g.vertex_count;
  UnionFind uf(n);
  for (auto& [u, v] : g.edges) uf.unite(u, v);
  std::map<int, std::vector<int>> comp_edges;  // root -> edge ids
  for (int i = 0; i < g.edge_count(); ++i) comp_edges[uf.find(g.edges[i].first)].push_back(i);
  // Canonicalize each component in local labels.
  std::vector<std::pair<std::string, std::pair<int, std::vector<Edge>>>> comps;
  for (auto& [root, ids] : comp_edges) {
    (void)root;
    std::map<int, int> local;
    std::vector<Edge> le;
    for (int id : ids) {
      auto [u, v] = g.edges[id];
      if (!local.count(u)) local[u] = static_cast<int>(local.size());
      if (!local.count(v)) local[v] = static_cast<int>(local.size());
      le.emplace_back(local[u], local[v]);
    }
    int c = static_cast<int>(local.size());
    auto ce = canonical_component(c, le);
    comps.push_back({encode(c, ce), {c, ce}});
  }
  std::sort(comps.begin(), comps.end());
  std::vector<Edge> out;
  int basev = 0;
  for (auto& [enc, sized] : comps) {
    (void)enc;
    for (auto [u, v] : sized.second) out.emplace_back(u + basev, v + basev);
    basev += sized.first;
  }
  return out;
}

}  // namespace

CanonicalForm canonical_form(const Multigraph& g) {
  return encode(g.vertex_count, canonical_edges(g));
}

Multigraph graph_of_form(const CanonicalForm& form) {
  Multigraph g;
  auto bar = form.find('|');
  if (form.empty() || form[0] != 'V' || bar == std::string::npos)
    throw PreconditionError("graph_of_form: bad encoding: " + form);
  g.vertex_count = std::stoi(form.substr(1, bar - 1));
  std::string body = form.substr(bar + 1);
  std::istringstream in(body);
  std::string tok;
  while (std::getline(in, tok, ';')) {
    auto dash = tok.find('-');
    if (dash == std::string::npos) throw PreconditionError("graph_of_form: bad edge: " + tok);
    g.edges.emplace_back(std::stoi(tok.substr(0, dash)), std::stoi(tok.substr(dash + 1)));
  }
  return g;
}

EdgeDeck edge_deck(const Multigraph& g) {
  if (g.edge_count() < 1) throw PreconditionError("edge_deck: graph has no edges");
  std::map<CanonicalForm, DeckCard> cards;
  for (int e = 0; e < g.edge_count(); ++e) {
    Multigraph card = delete_edges(g, {e});
    CanonicalForm f = canonical_form(card);
    auto it = cards.find(f);
    if (it == cards.end())
      cards[f] = DeckCard{f, card, 1};
    else
      ++it->second.multiplicity;
  }
  EdgeDeck deck;
  deck.source_edge_count = g.edge_count();
  deck.source_vertex_count = g.vertex_count;
  for (auto& [f, c] : cards) deck.cards.push_back(c);
  return deck;
}

CanonicalForm subgraph_form(const Multigraph& g, const std::vector<int>& edge_ids) {
  std::map<int, int> local;
  Multigraph h;
  for (int id : edge_ids) {
    if (id < 0 || id >= g.edge_count()) throw PreconditionError("subgraph_form: invalid edge id");
    auto [u, v] = g.edges[id];
    if (!local.count(u)) local[u] = static_cast<int>(local.size());
    if (!local.count(v)) local[v] = static_cast<int>(local.size());
    h.edges.emplace_back(local[u], local[v]);
  }
  h.vertex_count = static_cast<int>(local.size());
  return canonical_form(h);
}

std::map<CanonicalForm, Int> subgraph_class_counts(const Multigraph& g, int k) {
  std::map<CanonicalForm, Int> out;
  int m = g.edge_count();
  if (k < 0 || k > m) return out;
  if (k == 0) return out;
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    out[subgraph_form(g, idx)] += 1;
    int i = k - 1;
    while (i >= 0 && idx[i] == m - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

Int count_subgraphs(const Multigraph& h, const Multigraph& g) {
  int k = h.edge_count();
  if (k > g.edge_count()) throw PreconditionError("count_subgraphs: |E(H)| > |E(G)|");
  // Key H on its own support (subgraphs carry no isolated vertices).
  std::vector<int> all(k);
  std::iota(all.begin(), all.end(), 0);
  CanonicalForm hf = subgraph_form(h, all);
  auto counts = subgraph_class_counts(g, k);
  auto it = counts.find(hf);
  return it == counts.end() ? Int(0) : it->second;
}

Int kelly_count(const Multigraph& h, const EdgeDeck& deck) {
  int k = h.edge_count();
  if (k >= deck.source_edge_count)
    throw PreconditionError("kelly_count: requires |E(H)| < |E(G)|");
  Int total = 0;
  for (auto& card : deck.cards) total += Int(card.multiplicity) * count_subgraphs(h, card.representative);
  Int d = deck.source_edge_count - k;
  if (total % d != 0)
    throw NumericError("kelly_count: inexact division (corrupted deck or bad precondition)");
  return total / d;
}

std::map<CanonicalForm, Int> kelly_class_counts(const EdgeDeck& deck, int k) {
  if (k < 1 || k >= deck.source_edge_count)
    throw PreconditionError("kelly_class_counts: requires 1 <= k < |E(G)|");
  std::map<CanonicalForm, Int> total;
  for (auto& card : deck.cards) {
    auto counts = subgraph_class_counts(card.representative, k);
    for (auto& [f, c] : counts) total[f] += Int(card.multiplicity) * c;
  }
  Int d = deck.source_edge_count - k;
  std::map<CanonicalForm, Int> out;
  for (auto& [f, c] : total) {
    if (c % d != 0)
      throw NumericError("kelly_class_counts: inexact division (corrupted deck)");
    out[f] = c / d;
  }
  return out;
}

}  // namespace ihara
