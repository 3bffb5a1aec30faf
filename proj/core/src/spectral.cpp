#include "ihara/spectral.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <set>

namespace ihara {

namespace {

double to_double(const Int& v) { return v.convert_to<double>(); }

Eigen::MatrixXd to_eigen(const IMatrix& M) {
  Eigen::MatrixXd out(M.n, M.n);
  for (int i = 0; i < M.n; ++i)
    for (int j = 0; j < M.n; ++j) out(i, j) = to_double(M.at(i, j));
  return out;
}

}  // namespace

std::vector<std::complex<double>> distinct_roots(const IntPoly& p) {
  IntPoly sq = squarefree_part(p);
  // Strip the power of lambda (root 0) to keep the companion matrix clean.
  int zero_mult = 0;
  while (!sq.empty() && sq[0] == 0) {
    sq.erase(sq.begin());
    ++zero_mult;
  }
  int d = poly_degree(sq);
  std::vector<std::complex<double>> roots;
  if (zero_mult > 0) roots.push_back({0.0, 0.0});
  if (d >= 1) {
    Eigen::MatrixXd C = Eigen::MatrixXd::Zero(d, d);
    double lead = to_double(sq[d]);
    for (int i = 0; i < d; ++i) {
      C(i, d - 1) = -to_double(sq[i]) / lead;
      if (i + 1 < d) C(i + 1, i) = 1.0;
    }
    Eigen::EigenSolver<Eigen::MatrixXd> es(C);
    for (int i = 0; i < d; ++i) roots.push_back(es.eigenvalues()(i));
  }
  // Snap near-integer roots (the squarefree part has simple, well-separated
  // roots at desk scale, so 1e-8 snapping is safe).
  for (auto& r : roots) {
    double re = std::round(r.real());
    if (std::abs(r.real() - re) < 1e-8 && std::abs(r.imag()) < 1e-8) r = {re, 0.0};
  }
  std::sort(roots.begin(), roots.end(), [](auto a, auto b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return roots;
}

int exact_nullity(const IMatrix& T, const Int& shift, int power) {
  int n = T.n;
  IMatrix M = IMatrix::identity(n);
  IMatrix S = T;
  for (int i = 0; i < n; ++i) S.at(i, i) -= shift;
  for (int k = 0; k < power; ++k) M = matmul(M, S);
  // Rational Gaussian elimination.
  std::vector<std::vector<Rat>> A(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) A[i][j] = Rat(M.at(i, j));
  int rank = 0;
  for (int col = 0; col < n && rank < n; ++col) {
    int piv = -1;
    for (int i = rank; i < n; ++i)
      if (A[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(A[rank], A[piv]);
    Rat p = A[rank][col];
    for (int i = rank + 1; i < n; ++i) {
      if (A[i][col] == 0) continue;
      Rat f = A[i][col] / p;
      for (int j = col; j < n; ++j) A[i][j] -= f * A[rank][j];
    }
    ++rank;
  }
  return n - rank;
}

bool is_semisimple_exact(const IMatrix& T) {
  IntPoly sq = squarefree_part(char_poly_matrix(T));
  IMatrix acc = IMatrix::zero(T.n);
  for (int i = 0; i < T.n; ++i) acc.at(i, i) = sq.empty() ? Int(0) : sq.back();
  for (int k = poly_degree(sq) - 1; k >= 0; --k) {
    acc = matmul(acc, T);
    for (int i = 0; i < T.n; ++i) acc.at(i, i) += sq[k];
  }
  for (auto& v : acc.a)
    if (v != 0) return false;
  return true;
}

SpectrumReport numeric_spectrum(const EdgeMatrix& em, const IntPoly& P) {
  if (poly_degree(P) != em.size())
    throw PreconditionError("numeric_spectrum: P is not char_poly(T)");
  SpectrumReport rep;
  // Gcd chain: D0 = P, D_{k+1} = gcd(D_k, D_k'); roots of multiplicity
  // exactly k are the roots of (D_{k-1}/D_k) / (D_k/D_{k+1}).
  std::vector<IntPoly> D{poly_trim(P)};
  while (poly_degree(D.back()) > 0) D.push_back(poly_gcd(D.back(), poly_derivative(D.back())));
  std::vector<IntPoly> E;  // E[k] = D[k] / D[k+1], roots of multiplicity >= k+1
  for (std::size_t k = 0; k + 1 < D.size(); ++k) E.push_back(poly_div_exact(D[k], D[k + 1]));
  for (std::size_t k = 0; k < E.size(); ++k) {
    IntPoly exactly = (k + 1 < E.size()) ? poly_div_exact(E[k], E[k + 1]) : E[k];
    if (poly_degree(exactly) <= 0) continue;
    for (auto& root : distinct_roots(exactly)) {
      EigenClass ec;
      ec.lambda = root;
      ec.alg_mult = static_cast<int>(k) + 1;
      double re = std::round(root.real());
      if (root.imag() == 0.0 && root.real() == re) {
        ec.exact = true;
        ec.exact_value = Int(static_cast<long long>(re));
      }
      rep.eigenvalues.push_back(ec);
    }
  }
  // Jordan block profile.
  for (auto& ec : rep.eigenvalues) {
    if (ec.alg_mult == 1) {
      ec.max_block = 1;
      continue;
    }
    if (ec.exact) {
      int prev = exact_nullity(em.T, ec.exact_value, 1);
      int k = 1;
      while (true) {
        int next = exact_nullity(em.T, ec.exact_value, k + 1);
        if (next == prev) break;
        prev = next;
        ++k;
        if (k > ec.alg_mult) break;
      }
      ec.max_block = k;
    } else {
      // Numeric rank of (T - lambda I)^k via SVD, threshold 1e-9 * sigma_max.
      Eigen::MatrixXcd S = to_eigen(em.T).cast<std::complex<double>>();
      for (int i = 0; i < em.size(); ++i) S(i, i) -= ec.lambda;
      Eigen::MatrixXcd Pw = Eigen::MatrixXcd::Identity(em.size(), em.size());
      auto nullity = [&](const Eigen::MatrixXcd& M) {
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(M);
        auto sv = svd.singularValues();
        double thr = 1e-9 * (sv.size() ? sv(0) : 1.0);
        int r = 0;
        for (int i = 0; i < sv.size(); ++i)
          if (sv(i) > thr) ++r;
        return em.size() - r;
      };
      Pw = Pw * S;
      int prev = nullity(Pw), k = 1;
      while (k <= ec.alg_mult) {
        Pw = Pw * S;
        int next = nullity(Pw);
        if (next == prev) break;
        prev = next;
        ++k;
      }
      ec.max_block = k;
    }
  }
  rep.M = 0;
  for (auto& ec : rep.eigenvalues) rep.M += ec.max_block;
  rep.mult_plus1 = root_multiplicity(P, 1);
  rep.mult_minus1 = root_multiplicity(P, -1);
  rep.pm1_semisimple = true;
  for (auto& ec : rep.eigenvalues)
    if (ec.exact && (ec.exact_value == 1 || ec.exact_value == -1) && ec.max_block > 1)
      rep.pm1_semisimple = false;
  return rep;
}

PFData pf_eigen(const EdgeMatrix& em) {
  int n = em.size(), m = em.m;
  // Irreducibility: the digraph of T must be strongly connected.
  std::vector<std::vector<int>> fwd(n), bwd(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (em.T.at(i, j) != 0) {
        fwd[i].push_back(j);
        bwd[j].push_back(i);
      }
  auto reach_all = [n](const std::vector<std::vector<int>>& adj) {
    std::vector<char> seen(n, 0);
    std::vector<int> st{0};
    seen[0] = 1;
    int cnt = 1;
    while (!st.empty()) {
      int x = st.back();
      st.pop_back();
      for (int y : adj[x])
        if (!seen[y]) {
          seen[y] = 1;
          ++cnt;
          st.push_back(y);
        }
    }
    return cnt == n;
  };
  if (n == 0 || !reach_all(fwd) || !reach_all(bwd))
    throw PreconditionError("pf_eigen: T is not irreducible (graph must be connected, without end-vertices, b1 >= 2)");
  Eigen::MatrixXd T = to_eigen(em.T);
  Eigen::VectorXd v = Eigen::VectorXd::Ones(n);
  double lambda = 0, resid = 1;
  for (int it = 0; it < 1000000; ++it) {
    Eigen::VectorXd w = T * v + v;  // (T + I) v: aperiodic, same PF vector
    w /= w.maxCoeff();
    v = w;
    Eigen::VectorXd tv = T * v;
    // Rayleigh-style estimate on the positive vector.
    lambda = tv.dot(v) / v.dot(v);
    resid = (tv - lambda * v).lpNorm<Eigen::Infinity>();
    if (resid < 1e-12) break;
  }
  if (resid >= 1e-12) throw NumericError("pf_eigen: power iteration did not converge");
  // Normalize <p,p>_J = 2 sum_e p_fwd p_rev = 1 (positive for the PF vector).
  double s = 0;
  for (int e = 0; e < m; ++e) s += 2 * v(e) * v(e + m);
  if (s <= 0) throw NumericError("pf_eigen: indefinite norm not positive on PF vector");
  v /= std::sqrt(s);
  PFData out;
  out.lambda = lambda;
  out.p.assign(n, 0);
  for (int i = 0; i < n; ++i) out.p[i] = v(i);
  out.sigma.resize(m);
  out.pi.resize(m);
  for (int e = 0; e < m; ++e) {
    out.sigma[e] = v(e) + v(e + m);
    out.pi[e] = v(e) * v(e + m);
  }
  Eigen::VectorXd tv = T * v;
  out.residual = (tv - lambda * v).lpNorm<Eigen::Infinity>();
  return out;
}

std::vector<CycleVector> cycle_space_basis(const Multigraph& g) {
  auto pred = predicates(g);
  if (!pred.connected) throw PreconditionError("cycle_space_basis: graph must be connected");
  int n = g.vertex_count, m = g.edge_count();
  // BFS spanning tree.
  std::vector<int> parent_edge(n, -1), parent(n, -1), depth(n, 0);
  std::vector<char> in_tree(m, 0), seen(n, 0);
  std::vector<int> order{0};
  seen[0] = 1;
  for (std::size_t qi = 0; qi < order.size(); ++qi) {
    int x = order[qi];
    for (int e = 0; e < m; ++e) {
      auto [a, b] = g.edges[e];
      int y = -1;
      if (a == x && !seen[b]) y = b;
      else if (b == x && !seen[a]) y = a;
      if (y >= 0) {
        seen[y] = 1;
        in_tree[e] = 1;
        parent[y] = x;
        parent_edge[y] = e;
        depth[y] = depth[x] + 1;
        order.push_back(y);
      }
    }
  }
  // Oriented index for traveling edge e from u to v.
  auto oriented_idx = [&](int e, int u, int v) {
    auto [a, b] = g.edges[e];
    (void)v;
    return (a == u) ? e : e + m;
  };
  std::vector<CycleVector> basis;
  for (int e = 0; e < m; ++e) {
    if (in_tree[e]) continue;
    auto [u, v] = g.edges[e];
    CycleVector c;
    if (u == v) {
      c.oriented_edges = {e};  // a loop is a 1-cycle
      basis.push_back(c);
      continue;
    }
    // Tree paths u -> lca and lca -> v, then close with e traveled v -> u.
    std::vector<int> up, down;
    int x = u, y = v;
    while (x != y) {
      if (depth[x] >= depth[y]) {
        up.push_back(oriented_idx(parent_edge[x], x, parent[x]));
        x = parent[x];
      } else {
        down.push_back(oriented_idx(parent_edge[y], parent[y], y));
        y = parent[y];
      }
    }
    std::reverse(down.begin(), down.end());
    // Traversal: v -> u along e reversed? Orient the cycle u ->(tree) v ->e u:
    // up is u -> lca, down is lca -> v, then edge e traveled v -> u.
    c.oriented_edges = up;
    c.oriented_edges.insert(c.oriented_edges.end(), down.begin(), down.end());
    c.oriented_edges.push_back(oriented_idx(e, v, u));
    basis.push_back(c);
  }
  return basis;
}

std::vector<CycleVector> simple_cycles_up_to(const Multigraph& g, int max_len) {
  int m = g.edge_count();
  OrientedEdges o = orient(g);
  std::set<std::vector<int>> seen_edge_sets;
  std::vector<CycleVector> out;
  // DFS over oriented edges; intermediate vertices distinct; start vertex is
  // the traversal anchor. Dedupe by the (sorted) set of edge ids.
  std::vector<int> path;
  std::function<void(int, int, std::uint64_t, std::uint64_t)> rec =
      [&](int start_v, int cur_v, std::uint64_t used_edges, std::uint64_t used_verts) {
        if (static_cast<int>(path.size()) >= max_len) return;
        for (int a = 0; a < 2 * m; ++a) {
          int e = a % m;
          if (used_edges >> e & 1) continue;
          if (o.origin[a] != cur_v) continue;
          int w = o.terminus[a];
          path.push_back(a);
          if (w == start_v) {
            std::vector<int> key;
            for (int x : path) key.push_back(x % m);
            std::sort(key.begin(), key.end());
            if (!seen_edge_sets.count(key)) {
              seen_edge_sets.insert(key);
              out.push_back(CycleVector{path});
            }
          } else if (!(used_verts >> w & 1)) {
            rec(start_v, w, used_edges | (1ULL << e), used_verts | (1ULL << w));
          }
          path.pop_back();
        }
      };
  for (int v = 0; v < g.vertex_count; ++v) {
    path.clear();
    rec(v, v, 0, 1ULL << v);
  }
  return out;
}

std::vector<Int> phi_map(const CycleVector& c, int edge_count) {
  std::vector<Int> v(2 * edge_count, Int(0));
  for (int a : c.oriented_edges) {
    int r = a < edge_count ? a + edge_count : a - edge_count;
    v[a] += 1;
    v[r] -= 1;
  }
  return v;
}

std::vector<Int> psi_map(const CycleVector& c, int edge_count) {
  if (!c.even()) throw PreconditionError("psi_map: cycle must have even length");
  std::vector<Int> v(2 * edge_count, Int(0));
  int sign = 1;
  for (int a : c.oriented_edges) {
    int r = a < edge_count ? a + edge_count : a - edge_count;
    v[a] += sign;
    v[r] += sign;
    sign = -sign;
  }
  return v;
}

EigenspaceDims eigenspace_dims(const EdgeMatrix& em) {
  EigenspaceDims d;
  d.dim_plus = exact_nullity(em.T, Int(1), 1);
  d.dim_minus = exact_nullity(em.T, Int(-1), 1);
  return d;
}

AlternantCheck confluent_alternant(const SpectrumReport& spectrum) {
  int M = spectrum.M;
  AlternantCheck chk;
  chk.V.assign(M, std::vector<std::complex<double>>(M, {0, 0}));
  Eigen::MatrixXcd V = Eigen::MatrixXcd::Zero(M, M);
  int col = 0;
  auto binom = [](int a, int b) {
    if (b < 0 || b > a) return 0.0;
    double r = 1;
    for (int i = 0; i < b; ++i) r = r * (a - i) / (i + 1);
    return r;
  };
  for (auto& ec : spectrum.eigenvalues) {
    for (int l = 0; l < ec.max_block; ++l, ++col) {
      for (int k = 1; k <= M; ++k) {
        std::complex<double> val = 0;
        if (k - 1 - l >= 0) val = binom(k - 1, l) * std::pow(ec.lambda, k - 1 - l);
        V(k - 1, col) = val;
      }
    }
  }
  for (int i = 0; i < M; ++i)
    for (int j = 0; j < M; ++j) chk.V[i][j] = V(i, j);
  chk.det_abs = std::abs(V.determinant());
  std::complex<double> expected = 1;
  auto& ev = spectrum.eigenvalues;
  for (std::size_t i = 0; i < ev.size(); ++i)
    for (std::size_t j = i + 1; j < ev.size(); ++j)
      expected *= std::pow(ev[j].lambda - ev[i].lambda,
                           static_cast<double>(ev[i].max_block * ev[j].max_block));
  chk.expected_abs = std::abs(expected);
  chk.rel_err = chk.expected_abs > 0 ? std::abs(chk.det_abs - chk.expected_abs) / chk.expected_abs : 1.0;
  chk.ok = chk.expected_abs > 0 && chk.rel_err < 1e-8 && chk.det_abs > 0;
  return chk;
}

}  // namespace ihara
