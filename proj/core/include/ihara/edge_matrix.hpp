#pragma once
// The edge-adjacency operator T on oriented edges, the indefinite pairing J,
// and exact dense integer matrix arithmetic for powers of T.
#include <vector>

#include "ihara/multigraph.hpp"
#include "ihara/types.hpp"

namespace ihara {

// Oriented edge indexing: index e in [0, |E|) is edge e traversed in file
// order (forward); index e + |E| is its reverse. A loop's two orientations
// are distinct indices.
struct OrientedEdges {
  int m = 0;                 // |E|
  std::vector<int> origin;   // size 2|E|
  std::vector<int> terminus; // size 2|E|
  int rev(int a) const { return a < m ? a + m : a - m; }
};

OrientedEdges orient(const Multigraph& g);

// Dense exact integer matrix (row-major).
struct IMatrix {
  int n = 0;
  std::vector<Int> a;  // n*n
  Int& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
  const Int& at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
  static IMatrix zero(int n);
  static IMatrix identity(int n);
  Int trace() const;
};

IMatrix matmul(const IMatrix& A, const IMatrix& B);

struct EdgeMatrix {
  int m = 0;    // |E|; matrix size is 2m
  IMatrix T;    // 0/1 entries
  int size() const { return 2 * m; }
};

// T[a][b] = 1 iff terminus(a) = origin(b) and b != reverse(a).
EdgeMatrix build_T(const Multigraph& g);

// <v, w> = sum_a v[a] * w[rev(a)]  (= v^T J w, J the block swap).
double krein_product(const std::vector<double>& v, const std::vector<double>& w);

// True iff T^t = J T J entrywise.
bool check_J_symmetry(const EdgeMatrix& T);

}  // namespace ihara
