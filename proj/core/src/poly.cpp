#include "ihara/poly.hpp"

#include <algorithm>

namespace ihara {

// --- integer polynomial helpers --------------------------------------------

IntPoly poly_trim(IntPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

int poly_degree(const IntPoly& p) {
  int d = static_cast<int>(p.size()) - 1;
  while (d >= 0 && p[d] == 0) --d;
  return d;
}

Int poly_coeff(const IntPoly& p, int k) {
  if (k < 0 || k >= static_cast<int>(p.size())) return 0;
  return p[k];
}

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly out(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (b[j] != 0) out[i + j] += a[i] * b[j];
  }
  return poly_trim(out);
}

IntPoly poly_add(const IntPoly& a, const IntPoly& b) {
  IntPoly out(std::max(a.size(), b.size()), Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return poly_trim(out);
}

IntPoly poly_pow(const IntPoly& a, int k) {
  IntPoly out{Int(1)};
  for (int i = 0; i < k; ++i) out = poly_mul(out, a);
  return out;
}

IntPoly poly_div_exact(const IntPoly& a0, const IntPoly& b0) {
  IntPoly a = poly_trim(a0), b = poly_trim(b0);
  if (b.empty()) throw NumericError("poly_div_exact: division by zero polynomial");
  if (a.empty()) return {};
  if (a.size() < b.size()) throw NumericError("poly_div_exact: inexact division");
  IntPoly q(a.size() - b.size() + 1, Int(0));
  for (int d = static_cast<int>(q.size()) - 1; d >= 0; --d) {
    Int lead = a[d + b.size() - 1];
    if (lead == 0) continue;
    if (lead % b.back() != 0) throw NumericError("poly_div_exact: inexact division");
    Int c = lead / b.back();
    q[d] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[d + i] -= c * b[i];
  }
  if (!poly_trim(a).empty()) throw NumericError("poly_div_exact: nonzero remainder");
  return poly_trim(q);
}

IntPoly poly_derivative(const IntPoly& p) {
  IntPoly out;
  for (std::size_t i = 1; i < p.size(); ++i) out.push_back(Int(i) * p[i]);
  return poly_trim(out);
}

namespace {

using RatPoly = std::vector<Rat>;

RatPoly rtrim(RatPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

// Remainder of a / b over the rationals.
RatPoly rmod(RatPoly a, const RatPoly& b) {
  while (a.size() >= b.size() && !a.empty()) {
    Rat c = a.back() / b.back();
    std::size_t d = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[d + i] -= c * b[i];
    a = rtrim(std::move(a));
    if (a.size() < b.size()) break;
  }
  return a;
}

IntPoly primitive_from_rat(const RatPoly& p) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  Int lcm = 1;
  for (auto& c : p) lcm = boost::multiprecision::lcm(lcm, denominator(c));
  IntPoly out;
  for (auto& c : p) out.push_back(numerator(c) * (lcm / denominator(c)));
  Int g = 0;
  for (auto& c : out) g = boost::multiprecision::gcd(g, c);
  if (g > 1)
    for (auto& c : out) c /= g;
  if (!out.empty() && out.back() < 0)
    for (auto& c : out) c = -c;
  return poly_trim(out);
}

}  // namespace

IntPoly poly_gcd(const IntPoly& a0, const IntPoly& b0) {
  RatPoly a(a0.begin(), a0.end()), b(b0.begin(), b0.end());
  a = rtrim(a);
  b = rtrim(b);
  while (!b.empty()) {
    RatPoly r = rmod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return primitive_from_rat(a);
}

IntPoly squarefree_part(const IntPoly& p) {
  IntPoly g = poly_gcd(p, poly_derivative(p));
  if (poly_degree(g) <= 0) return poly_trim(p);
  return poly_div_exact(p, g);
}

int root_multiplicity(const IntPoly& p0, const Int& r) {
  IntPoly p = poly_trim(p0);
  IntPoly lin{-r, Int(1)};
  int mult = 0;
  while (!p.empty()) {
    // Evaluate p(r).
    Int val = 0;
    for (int i = poly_degree(p); i >= 0; --i) val = val * r + p[i];
    if (val != 0) break;
    p = poly_div_exact(p, lin);
    ++mult;
  }
  return mult;
}

// --- series ----------------------------------------------------------------

RatSeries series_from_poly(const IntPoly& p, int order) {
  RatSeries s;
  s.order = order;
  s.c.assign(order + 1, Rat(0));
  for (int i = 0; i <= order && i < static_cast<int>(p.size()); ++i) s.c[i] = Rat(p[i]);
  return s;
}

RatSeries series_mul(const RatSeries& a, const RatSeries& b) {
  RatSeries out;
  out.order = std::min(a.order, b.order);
  out.c.assign(out.order + 1, Rat(0));
  for (int i = 0; i <= out.order; ++i)
    for (int j = 0; i + j <= out.order; ++j) out.c[i + j] += a.c[i] * b.c[j];
  return out;
}

RatSeries series_div(const RatSeries& a, const RatSeries& b) {
  if (b.c.empty() || b.c[0] == 0) throw NumericError("series_div: divisor has zero constant term");
  RatSeries out;
  out.order = std::min(a.order, b.order);
  out.c.assign(out.order + 1, Rat(0));
  for (int r = 0; r <= out.order; ++r) {
    Rat s = r < static_cast<int>(a.c.size()) ? a.c[r] : Rat(0);
    for (int k = 1; k <= r; ++k)
      if (k < static_cast<int>(b.c.size())) s -= b.c[k] * out.c[r - k];
    out.c[r] = s / b.c[0];
  }
  return out;
}

RatSeries series_log(const RatSeries& a) {
  if (a.c.empty() || a.c[0] != 1) throw NumericError("series_log: requires constant term 1");
  // log(a)' = a'/a; integrate term by term.
  RatSeries da;
  da.order = a.order;
  da.c.assign(a.order + 1, Rat(0));
  for (int i = 1; i <= a.order; ++i) da.c[i - 1] = Rat(i) * a.c[i];
  RatSeries q = series_div(da, a);
  RatSeries out;
  out.order = a.order;
  out.c.assign(a.order + 1, Rat(0));
  for (int i = 1; i <= a.order; ++i) out.c[i] = q.c[i - 1] / i;
  return out;
}

RatSeries series_sqrt(const RatSeries& a) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (a.c.empty() || a.c[0] <= 0) throw NumericError("series_sqrt: requires positive constant term");
  Int ns = boost::multiprecision::sqrt(numerator(a.c[0]));
  Int ds = boost::multiprecision::sqrt(denominator(a.c[0]));
  if (ns * ns != numerator(a.c[0]) || ds * ds != denominator(a.c[0]))
    throw NumericError("series_sqrt: constant term is not a rational square");
  RatSeries out;
  out.order = a.order;
  out.c.assign(a.order + 1, Rat(0));
  out.c[0] = Rat(ns, ds);
  for (int r = 1; r <= a.order; ++r) {
    Rat s = a.c[r];
    for (int i = 1; i < r; ++i) s -= out.c[i] * out.c[r - i];
    out.c[r] = s / (2 * out.c[0]);
  }
  return out;
}

// --- characteristic polynomial ---------------------------------------------

IntPoly char_poly_matrix(const IMatrix& M) {
  int n = M.n;
  IntPoly c(n + 1, Int(0));
  c[n] = 1;
  if (n == 0) return c;
  IMatrix Mk = IMatrix::identity(n);
  for (int k = 1; k <= n; ++k) {
    if (k > 1) {
      Mk = matmul(M, Mk);
      for (int i = 0; i < n; ++i) Mk.at(i, i) += c[n - k + 1];
    }
    IMatrix TM = matmul(M, Mk);
    Int tr = TM.trace();
    if (tr % k != 0) throw NumericError("char_poly: trace recursion not divisible");
    c[n - k] = -tr / k;
  }
  return c;
}

IntPoly char_poly(const EdgeMatrix& T) { return char_poly_matrix(T.T); }

// --- three-term determinant identity ---------------------------------------

namespace {

// Exact determinant by fraction-free (Bareiss) elimination.
Int det_bareiss(IMatrix M) {
  int n = M.n;
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (M.at(k, k) == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i)
        if (M.at(i, k) != 0) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(M.at(k, j), M.at(swap_row, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Int num = M.at(i, j) * M.at(k, k) - M.at(i, k) * M.at(k, j);
        M.at(i, j) = num / prev;  // exact by the Bareiss identity
      }
    prev = M.at(k, k);
  }
  return sign * M.at(n - 1, n - 1);
}

}  // namespace

IntPoly bass_polynomial(const Multigraph& g) {
  int n = g.vertex_count;
  // A counts parallel edges; a loop contributes 2 to its diagonal entry.
  IMatrix A = IMatrix::zero(n);
  for (auto& [u, v] : g.edges) {
    A.at(u, v) += 1;
    A.at(v, u) += 1;  // a loop lands here twice, giving diagonal 2 per loop
  }
  std::vector<Int> dm1(n);
  for (int v = 0; v < n; ++v) dm1[v] = g.degree(v) - 1;
  // Interpolate det(t^2 I - A t + (D-1)) at 2n+1 integer points.
  int deg = 2 * n;
  std::vector<Int> xs, ys;
  for (int t = 0; t <= deg; ++t) {
    IMatrix M = IMatrix::zero(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        M.at(i, j) = -A.at(i, j) * t;
        if (i == j) M.at(i, j) += Int(t) * t + dm1[i];
      }
    xs.push_back(t);
    ys.push_back(det_bareiss(std::move(M)));
  }
  // Newton divided differences over rationals; assemble and check integrality.
  std::vector<Rat> dd(ys.begin(), ys.end());
  for (int level = 1; level <= deg; ++level)
    for (int i = deg; i >= level; --i)
      dd[i] = (dd[i] - dd[i - 1]) / Rat(xs[i] - xs[i - level]);
  std::vector<Rat> poly{dd[deg]};
  for (int i = deg - 1; i >= 0; --i) {
    // poly = poly * (x - xs[i]) + dd[i]
    std::vector<Rat> next(poly.size() + 1, Rat(0));
    for (std::size_t j = 0; j < poly.size(); ++j) {
      next[j + 1] += poly[j];
      next[j] -= poly[j] * Rat(xs[i]);
    }
    next[0] += dd[i];
    poly = std::move(next);
  }
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  IntPoly out;
  for (auto& c : poly) {
    if (denominator(c) != 1) throw NumericError("bass_polynomial: non-integer interpolation");
    out.push_back(numerator(c));
  }
  return poly_trim(out);
}

bool verify_bass_identity(const Multigraph& g) {
  auto pred = predicates(g);
  if (!pred.connected) throw PreconditionError("verify_bass_identity: graph must be connected");
  IntPoly P = char_poly(build_T(g));
  IntPoly B = bass_polynomial(g);
  IntPoly u2m1{Int(-1), Int(0), Int(1)};  // lambda^2 - 1
  int n = g.vertex_count, m = g.edge_count();
  IntPoly lhs = P, rhs = B;
  if (m >= n)
    rhs = poly_mul(rhs, poly_pow(u2m1, m - n));
  else
    lhs = poly_mul(lhs, poly_pow(u2m1, n - m));
  return lhs == rhs;
}

RatSeries zeta_inverse_series(const IntPoly& P, int order) {
  if (order < 0) throw PreconditionError("zeta_inverse_series: order must be >= 0");
  int deg = poly_degree(P);
  RatSeries s;
  s.order = order;
  s.c.assign(order + 1, Rat(0));
  for (int j = 0; j <= order && j <= deg; ++j) s.c[j] = Rat(P[deg - j]);
  return s;
}

std::vector<Int> total_closed_walks(const IntPoly& P, int R) {
  if (R < 0) throw PreconditionError("total_closed_walks: R must be >= 0");
  int n = poly_degree(P);
  if (n < 0 || P[n] != 1) throw PreconditionError("total_closed_walks: expected a monic polynomial");
  // e_k = (-1)^k [lambda^{n-k}] P.
  std::vector<Int> e(R + 1, Int(0));
  for (int k = 1; k <= R; ++k)
    if (k <= n) e[k] = (k % 2 ? -poly_coeff(P, n - k) : poly_coeff(P, n - k));
  std::vector<Int> p(R + 1, Int(0));
  for (int k = 1; k <= R; ++k) {
    Int s = 0;
    int sign = 1;
    for (int i = 1; i < k; ++i) {
      s += sign * e[i] * p[k - i];
      sign = -sign;
    }
    s += sign * Int(k) * e[k];
    p[k] = s;
  }
  p[0] = Int(n);  // tr(T^0) = matrix dimension
  return p;
}

GirthReport girth_and_polygons(const IntPoly& P, int edge_count) {
  GirthReport rep;
  int top = 2 * edge_count;
  for (int i = top - 1; i >= 0; --i) {
    if (poly_coeff(P, i) != 0) {
      rep.found = true;
      rep.girth = top - i;
      rep.g_gon_count = -poly_coeff(P, i) / 2;
      return rep;
    }
  }
  return rep;  // all sub-leading coefficients vanish: degenerate
}

}  // namespace ihara
