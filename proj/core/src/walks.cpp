#include "ihara/walks.hpp"

#include <cstdint>
#include <functional>

#include "ihara/edge_matrix.hpp"
#include "ihara/util.hpp"

namespace ihara {

WalkTable walk_counts_direct(const Multigraph& g, int R) {
  if (R < 0) throw PreconditionError("walk_counts_direct: R must be >= 0");
  EdgeMatrix em = build_T(g);
  int m = em.m, n = em.size();
  WalkTable t;
  t.R = R;
  t.m = m;
  t.N.assign(n, std::vector<Int>(R + 1, Int(0)));
  t.M.assign(n, std::vector<Int>(R + 1, Int(0)));
  t.F.assign(n, std::vector<Int>(R + 1, Int(0)));
  std::vector<IMatrix> pw;
  pw.push_back(IMatrix::identity(n));
  for (int r = 1; r <= R; ++r) pw.push_back(matmul(pw.back(), em.T));
  for (int a = 0; a < n; ++a) {
    int ra = a < m ? a + m : a - m;
    for (int r = 0; r <= R; ++r) {
      t.N[a][r] = pw[r].at(a, a);
      Int rowsum = 0;
      for (int b = 0; b < n; ++b) rowsum += pw[r].at(a, b);
      t.M[a][r] = rowsum;
      Int f = 0;
      for (int i = 0; i <= r; ++i) f += pw[i].at(a, ra) * pw[r - i].at(ra, a);
      t.F[a][r] = f;
    }
  }
  return t;
}

namespace {

// Transition-counted raw brute tables (O/P/W un-shifted); shared by the
// public brute table and by verify_decompositions.
struct RawBrute {
  int R = 0, m = 0;
  std::vector<std::vector<long long>> N, M, F, Oraw, Praw;  // [2m][R+1]
  std::vector<std::vector<long long>> Wraw;                 // [m][R+1]
};

RawBrute brute_raw(const Multigraph& g, int R) {
  OrientedEdges o = orient(g);
  int m = o.m, n2 = 2 * m;
  std::vector<std::vector<int>> succ(n2);
  for (int a = 0; a < n2; ++a)
    for (int b = 0; b < n2; ++b)
      if (o.terminus[a] == o.origin[b] && b != o.rev(a)) succ[a].push_back(b);
  RawBrute t;
  t.R = R;
  t.m = m;
  t.N.assign(n2, std::vector<long long>(R + 1, 0));
  t.M = t.N;
  t.F = t.N;
  t.Oraw = t.N;
  t.Praw = t.N;
  t.Wraw.assign(m, std::vector<long long>(R + 1, 0));
  // Budget guard over total enumerated walk extensions.
  std::uint64_t budget = 600'000'000ULL, used = 0;
  for (int a0 = 0; a0 < n2; ++a0) {
    int ra0 = o.rev(a0);
    std::function<void(int, int, int, bool, bool, std::uint32_t)> rec =
        [&](int cur, int r, int rev_visits, bool no_return, bool no_either, std::uint32_t mask) {
          if (++used > budget) throw PreconditionError("walk_counts_brute: enumeration budget exceeded");
          t.M[a0][r] += 1;
          if (cur == a0) {
            t.N[a0][r] += 1;
            // F counts a closed walk once per visit to the reverse edge,
            // matching the split sum sum_i (T^i)_{a,ra} (T^{r-i})_{ra,a}.
            t.F[a0][r] += rev_visits;
          }
          if (no_return) t.Oraw[a0][r] += 1;
          if (no_either) t.Praw[a0][r] += 1;
          // Each walk counts once toward W for every edge in its support.
          std::uint32_t mm = mask;
          while (mm) {
            int e = __builtin_ctz(mm);
            mm &= mm - 1;
            t.Wraw[e][r] += 1;
          }
          if (r == R) return;
          for (int b : succ[cur])
            rec(b, r + 1, rev_visits + (b == ra0 ? 1 : 0), no_return && b != a0,
                no_either && b != a0 && b != ra0, mask | (1u << (b % m)));
        };
    rec(a0, 0, 0, true, true, 1u << (a0 % m));
  }
  return t;
}

}  // namespace

WalkTable walk_counts_brute(const Multigraph& g, int R) {
  if (R < 0) throw PreconditionError("walk_counts_brute: R must be >= 0");
  RawBrute raw = brute_raw(g, R);
  int m = raw.m, n2 = 2 * m;
  WalkTable t;
  t.R = R;
  t.m = m;
  t.has_brute_tables = true;
  auto conv = [R](const std::vector<std::vector<long long>>& src) {
    std::vector<std::vector<Int>> out(src.size(), std::vector<Int>(R + 1, Int(0)));
    for (std::size_t i = 0; i < src.size(); ++i)
      for (int r = 0; r <= R; ++r) out[i][r] = src[i][r];
    return out;
  };
  t.N = conv(raw.N);
  t.M = conv(raw.M);
  t.F = conv(raw.F);
  // Shift O and P to the edge-counted convention: X_r = Xraw_{r-1}, X_0 = 0.
  // W stays transition-counted: that is the indexing under which the
  // generating-series square identity holds at low orders (W_0(e) = 2).
  auto shift = [R](const std::vector<std::vector<long long>>& src) {
    std::vector<std::vector<Int>> out(src.size(), std::vector<Int>(R + 1, Int(0)));
    for (std::size_t i = 0; i < src.size(); ++i)
      for (int r = 1; r <= R; ++r) out[i][r] = src[i][r - 1];
    return out;
  };
  t.O = shift(raw.Oraw);
  t.P = shift(raw.Praw);
  t.W = conv(raw.Wraw);
  (void)n2;
  return t;
}

bool verify_decompositions(const Multigraph& g, int R) {
  if (R < 0) throw PreconditionError("verify_decompositions: R must be >= 0");
  RawBrute t = brute_raw(g, R);
  int m = t.m, n2 = 2 * m;
  // (w2) at the oriented level, zero-offset in transition counts:
  //   M_r(a) = sum_{i+j=r} N_i(a) Oraw_j(a).
  for (int a = 0; a < n2; ++a)
    for (int r = 0; r <= R; ++r) {
      long long s = 0;
      for (int i = 0; i <= r; ++i) s += t.N[a][i] * t.Oraw[a][r - i];
      if (s != t.M[a][r]) return false;
    }
  // (w1): W_r(e) = sum_o sum_{i+j+k=r} Praw_i(rev o) N_j(o) Oraw_k(o).
  for (int e = 0; e < m; ++e)
    for (int r = 0; r <= R; ++r) {
      long long s = 0;
      for (int oidx : {e, e + m}) {
        int ro = oidx < m ? oidx + m : oidx - m;
        for (int i = 0; i <= r; ++i)
          for (int j = 0; i + j <= r; ++j) s += t.Praw[ro][i] * t.N[oidx][j] * t.Oraw[oidx][r - i - j];
      }
      if (s != t.Wraw[e][r]) return false;
    }
  return true;
}

}  // namespace ihara
