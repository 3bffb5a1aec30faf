#pragma once
// Exact polynomials and truncated rational power series: characteristic
// polynomial of T, the three-term determinant identity, zeta series, walk
// totals via Newton's identities, and the girth readout.
#include <vector>

#include "ihara/edge_matrix.hpp"
#include "ihara/multigraph.hpp"
#include "ihara/types.hpp"

namespace ihara {

// Dense integer polynomial, coefficient index = degree, no trailing zeros
// (the zero polynomial is {}). Helpers keep this normalized.
using IntPoly = std::vector<Int>;

// Truncated power series with exact rational coefficients for u^0..u^order.
struct RatSeries {
  int order = 0;
  std::vector<Rat> c;  // size order+1
};

// --- integer polynomial arithmetic ----------------------------------------
IntPoly poly_trim(IntPoly p);
IntPoly poly_mul(const IntPoly& a, const IntPoly& b);
IntPoly poly_add(const IntPoly& a, const IntPoly& b);
IntPoly poly_pow(const IntPoly& a, int k);
// Exact division; throws NumericError if the remainder is nonzero.
IntPoly poly_div_exact(const IntPoly& a, const IntPoly& b);
IntPoly poly_derivative(const IntPoly& p);
int poly_degree(const IntPoly& p);  // -1 for the zero polynomial
Int poly_coeff(const IntPoly& p, int k);
// Monic gcd over the rationals, scaled back to a primitive integer poly.
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);
// p / gcd(p, p'): the radical (distinct-root) part; monic for monic input.
IntPoly squarefree_part(const IntPoly& p);
// Multiplicity of root `r` (exact, by repeated division by (x - r)).
int root_multiplicity(const IntPoly& p, const Int& r);

// --- series arithmetic -----------------------------------------------------
RatSeries series_from_poly(const IntPoly& p, int order);
RatSeries series_mul(const RatSeries& a, const RatSeries& b);
// a / b with b(0) != 0.
RatSeries series_div(const RatSeries& a, const RatSeries& b);
// log(a) with a(0) = 1.
RatSeries series_log(const RatSeries& a);
// sqrt(a) with a(0) a rational square.
RatSeries series_sqrt(const RatSeries& a);

// --- the core operations ----------------------------------------------------

// det(lambda - T), exact, monic of degree 2|E| (Faddeev-LeVerrier).
IntPoly char_poly(const EdgeMatrix& T);
// Characteristic polynomial of an arbitrary exact integer matrix.
IntPoly char_poly_matrix(const IMatrix& M);

// B(lambda) = det(lambda^2 I - A lambda + (D - I)), degree 2|V|; the vertex
// adjacency matrix counts a loop as 2 on the diagonal.
IntPoly bass_polynomial(const Multigraph& g);

// char_poly(T) == (lambda^2 - 1)^{|E|-|V|} * B(lambda) as exact polynomials
// (both sides multiplied by (lambda^2-1)^{|V|-|E|} when |E| < |V|).
bool verify_bass_identity(const Multigraph& g);

// Coefficients of 1/zeta(u) = u^{2|E|} P(1/u), truncated at `order`.
RatSeries zeta_inverse_series(const IntPoly& P, int order);

// Returns tot[r] = tr(T^r) for r = 0..R (power sums of the roots of the
// monic polynomial P, via Newton's identities); tot[0] = deg P.
std::vector<Int> total_closed_walks(const IntPoly& P, int R);

struct GirthReport {
  bool found = false;
  int girth = 0;
  Int g_gon_count = 0;
};

// Shortest-cycle data read off the characteristic polynomial: with i* the
// largest index < 2|E| carrying a nonzero coefficient, girth = 2|E| - i*
// and the number of girth-gons is -coeff(i*)/2. Requires b1 > 1.
GirthReport girth_and_polygons(const IntPoly& P, int edge_count);

}  // namespace ihara
