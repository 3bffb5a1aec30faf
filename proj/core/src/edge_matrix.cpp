#include "ihara/edge_matrix.hpp"

namespace ihara {

OrientedEdges orient(const Multigraph& g) {
  OrientedEdges o;
  o.m = g.edge_count();
  o.origin.resize(2 * o.m);
  o.terminus.resize(2 * o.m);
  for (int i = 0; i < o.m; ++i) {
    auto [u, v] = g.edges[i];
    o.origin[i] = u;
    o.terminus[i] = v;
    o.origin[i + o.m] = v;
    o.terminus[i + o.m] = u;
  }
  return o;
}

IMatrix IMatrix::zero(int n) {
  IMatrix m;
  m.n = n;
  m.a.assign(static_cast<std::size_t>(n) * n, Int(0));
  return m;
}

IMatrix IMatrix::identity(int n) {
  IMatrix m = zero(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Int IMatrix::trace() const {
  Int t = 0;
  for (int i = 0; i < n; ++i) t += at(i, i);
  return t;
}

IMatrix matmul(const IMatrix& A, const IMatrix& B) {
  IMatrix C = IMatrix::zero(A.n);
  for (int i = 0; i < A.n; ++i)
    for (int k = 0; k < A.n; ++k) {
      const Int& aik = A.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < A.n; ++j) {
        const Int& bkj = B.at(k, j);
        if (bkj != 0) C.at(i, j) += aik * bkj;
      }
    }
  return C;
}

EdgeMatrix build_T(const Multigraph& g) {
  if (g.edge_count() < 1) throw PreconditionError("build_T: graph has no edges");
  OrientedEdges o = orient(g);
  EdgeMatrix em;
  em.m = o.m;
  em.T = IMatrix::zero(2 * o.m);
  for (int a = 0; a < 2 * o.m; ++a)
    for (int b = 0; b < 2 * o.m; ++b)
      if (o.terminus[a] == o.origin[b] && b != o.rev(a)) em.T.at(a, b) = 1;
  return em;
}

double krein_product(const std::vector<double>& v, const std::vector<double>& w) {
  if (v.size() != w.size() || v.size() % 2 != 0)
    throw PreconditionError("krein_product: length mismatch");
  std::size_t m = v.size() / 2;
  double s = 0;
  for (std::size_t a = 0; a < v.size(); ++a) s += v[a] * w[a < m ? a + m : a - m];
  return s;
}

bool check_J_symmetry(const EdgeMatrix& em) {
  int m = em.m, n = em.size();
  auto swap_idx = [m](int a) { return a < m ? a + m : a - m; };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (em.T.at(j, i) != em.T.at(swap_idx(i), swap_idx(j))) return false;
  return true;
}

}  // namespace ihara
