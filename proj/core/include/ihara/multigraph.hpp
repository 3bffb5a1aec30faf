#pragma once
// Multigraph representation, predicates, canonical forms, edge decks and
// subgraph counting (including the deck-based counting rule for S(H,G)).
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ihara/types.hpp"

namespace ihara {

// Labeled multigraph. Edges are unordered vertex pairs; loops (u,u) allowed;
// parallel edges are distinguished by their position in `edges` (= edge id).
struct Multigraph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;

  int edge_count() const { return static_cast<int>(edges.size()); }
  // Loops count twice.
  int degree(int v) const;
  int loops_at(int v) const;
  int loop_count() const;
};

struct GraphPredicates {
  bool connected = false;
  bool has_end_vertex = false;
  bool bipartite = false;
  int p = 0;                  // 0 if bipartite, 1 otherwise
  std::optional<int> betti;   // |E| - |V| + 1, reported only when connected
  Rat avg_degree;             // 2|E| / |V|
};

// Isomorphism-class key: equal strings iff the multigraphs are isomorphic
// (respecting loops, multiplicities and isolated-vertex count).
using CanonicalForm = std::string;

struct DeckCard {
  CanonicalForm form;
  Multigraph representative;  // one concrete deletion realizing this class
  int multiplicity = 0;
};

struct EdgeDeck {
  std::vector<DeckCard> cards;  // sorted by canonical form
  int source_edge_count = 0;
  int source_vertex_count = 0;
};

// --- construction & basic operations -------------------------------------

// Text format: first non-comment line "n m", then m lines "u v"; '#' starts
// a comment line. Throws PreconditionError on malformed input.
Multigraph parse_graph(const std::string& text);

GraphPredicates predicates(const Multigraph& g);

// Vertices are preserved (deletions may create isolated vertices); the
// surviving edges keep their relative order.
Multigraph delete_edges(const Multigraph& g, const std::vector<int>& ids);

// Exhaustive minimization over vertex relabelings, component by component,
// pruned by iterated degree-refinement classes. Intended for |V| <= ~10.
CanonicalForm canonical_form(const Multigraph& g);

// Recover a concrete representative of a canonical form.
Multigraph graph_of_form(const CanonicalForm& form);

EdgeDeck edge_deck(const Multigraph& g);

// Class key of the edge-subset subgraph of G spanned by `edge_ids`, with the
// support vertices compacted (no isolated vertices). This is the key under
// which subgraphs H "without isolated vertices" are counted.
CanonicalForm subgraph_form(const Multigraph& g, const std::vector<int>& edge_ids);

// Number of k-edge subsets of G in each isomorphism class, keyed as above.
std::map<CanonicalForm, Int> subgraph_class_counts(const Multigraph& g, int k);

// S(H, G): number of edge subsets of G isomorphic to H (H may not have
// isolated vertices; they carry no meaning in subgraph counting).
Int count_subgraphs(const Multigraph& h, const Multigraph& g);

// S(H, G) computed only from the deck:
//   S(H,G) = sum_cards mult * S(H, card) / (|E(G)| - |E(H)|).
// Throws PreconditionError when |E(H)| >= |E(G)|, NumericError when the
// division is inexact (corrupted deck).
Int kelly_count(const Multigraph& h, const EdgeDeck& deck);

// All class counts S(H,G) for |E(H)| = k, from the deck alone.
std::map<CanonicalForm, Int> kelly_class_counts(const EdgeDeck& deck, int k);

}  // namespace ihara
