#pragma once
// Per-edge walk statistics: matrix-power ("direct") and explicit-enumeration
// ("brute") computation, plus verification of the decomposition identities.
//
// Length conventions (frozen after oracle validation; see the module tests):
//   - N_r, M_r, F_r count transitions: a walk a_0..a_r has length r.
//     N_0(->e) = M_0(->e) = 1 (empty walk), F_0 = 0.
//   - O_r and W_r count edges: a walk of r edges makes r-1 transitions.
//     O_0 = 0, O_1(->e) = 1 (the trivial walk at ->e); W_0(e) = 0,
//     W_1(e) = 2 (the two orientations of e itself).
//   Under these conventions the validated decompositions are
//     M_r(->e)  = sum_{i+j=r+1} N_i(->e) O_j(->e)
//     W_r(e)    = sum_o sum_{i+j+k=r+1} P_i(rev o) N_j(o) O_k(o)
//   with P the internal "never revisit either orientation of e" table
//   (edge-counted like O). The O*N*O form of the W decomposition is not an
//   identity under any offset; the front segment must avoid both
//   orientations, which is exactly P.
#include <vector>

#include "ihara/multigraph.hpp"
#include "ihara/types.hpp"

namespace ihara {

struct WalkTable {
  int R = 0;
  int m = 0;  // |E|
  // Oriented tables, indexed [oriented edge a][r], a in [0, 2m).
  std::vector<std::vector<Int>> N;  // closed at a (transition length)
  std::vector<std::vector<Int>> M;  // open, starting at a (transition length)
  // Closed at a, weighted by visits to rev(a): the split sum
  // sum_{i=0}^{r} (T^i)_{a,rev a} (T^{r-i})_{rev a,a}.
  std::vector<std::vector<Int>> F;
  std::vector<std::vector<Int>> O;  // never returning to a (edge length); brute only
  std::vector<std::vector<Int>> P;  // never visiting a or rev(a) again (edge length); brute only
  // Unoriented, indexed [e][r]: walks traversing e at least once, counted
  // by transitions like N and M (a length-r walk spans r+1 edges; W_0(e)=2).
  // This is the indexing under which the square-identity convolution
  // sum_{i+j=r} M_i(e)M_j(e) = sum_{i+j=r} W_i(e)N_j(e) holds at low order.
  std::vector<std::vector<Int>> W;  // brute only
  bool has_brute_tables = false;

  // Unoriented accessors.
  Int N_e(int e, int r) const { return 2 * N[e][r]; }
  Int M_e(int e, int r) const { return M[e][r] + M[e + m][r]; }
  Int F_e(int e, int r) const { return 2 * F[e][r]; }
  Int O_e(int e, int r) const { return O[e][r] + O[e + m][r]; }
};

// N, M, F from exact powers of T.
WalkTable walk_counts_direct(const Multigraph& g, int R);

// All tables (including O, P, W) by depth-first enumeration of oriented-edge
// sequences. Throws PreconditionError when the enumeration exceeds ~1e7
// walk extensions.
WalkTable walk_counts_brute(const Multigraph& g, int R);

// Checks the two validated decomposition identities (header comment) against
// brute-force tables for all edges and r <= R.
bool verify_decompositions(const Multigraph& g, int R);

}  // namespace ihara
