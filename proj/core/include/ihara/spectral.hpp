#pragma once
// Spectrum of T: exact multiplicity structure via squarefree decomposition,
// Perron-Frobenius data by power iteration, exact +/-1 eigenspaces from the
// cycle space, Jordan-structure probes, and the confluent alternant.
#include <complex>
#include <vector>

#include "ihara/edge_matrix.hpp"
#include "ihara/multigraph.hpp"
#include "ihara/poly.hpp"
#include "ihara/types.hpp"

namespace ihara {

struct EigenClass {
  std::complex<double> lambda;  // numeric value (snapped when exact)
  int alg_mult = 0;             // exact (from squarefree decomposition)
  int max_block = 0;            // largest Jordan block size M_i
  bool exact = false;           // lambda is exactly an integer (0, +/-1, ...)
  Int exact_value = 0;          // meaningful when `exact`
};

struct SpectrumReport {
  std::vector<EigenClass> eigenvalues;  // distinct
  int M = 0;                            // sum of max_block
  bool pm1_semisimple = false;
  int mult_plus1 = 0, mult_minus1 = 0;  // exact algebraic multiplicities
};

// Distinct eigenvalues and multiplicity structure. P must be char_poly(T).
// Multiplicities are exact (polynomial gcd chain); eigenvalue values are
// numeric except for integer roots, which are snapped and flagged exact.
// Jordan block sizes use exact rational rank for integer eigenvalues and
// SVD numeric rank (threshold 1e-9 * sigma_max) otherwise.
SpectrumReport numeric_spectrum(const EdgeMatrix& T, const IntPoly& P);

struct PFData {
  double lambda = 0;              // dominant eigenvalue
  std::vector<double> p;          // positive eigenvector, <p,p>_J = 1
  std::vector<double> sigma;      // per edge: p_fwd + p_rev
  std::vector<double> pi;         // per edge: p_fwd * p_rev
  double residual = 0;            // ||T p - lambda p||_inf
};

// Power iteration (on T + I, which is aperiodic) until the residual on T
// drops below 1e-12. Requires T irreducible (checked by strong connectivity
// of its nonzero pattern); throws PreconditionError otherwise.
PFData pf_eigen(const EdgeMatrix& T);

// A closed traversal, as a sequence of oriented-edge indices.
struct CycleVector {
  std::vector<int> oriented_edges;
  bool even() const { return oriented_edges.size() % 2 == 0; }
};

// b1 = |E|-|V|+1 fundamental cycles of a spanning tree. Requires connected.
std::vector<CycleVector> cycle_space_basis(const Multigraph& g);

// All simple cycles (distinct edges, no repeated intermediate vertex) with
// at most `max_len` edges, each once. Loops are length-1 cycles, parallel
// pairs length-2 cycles.
std::vector<CycleVector> simple_cycles_up_to(const Multigraph& g, int max_len);

// phi(c) = sum over the traversal of (->e - <-e): an exact fixed vector of T.
std::vector<Int> phi_map(const CycleVector& c, int edge_count);

// psi(c) = sum of alternating signs times (->e + <-e) along an even simple
// cycle: an exact (-1)-eigenvector of T. Throws on odd cycles.
std::vector<Int> psi_map(const CycleVector& c, int edge_count);

struct EigenspaceDims {
  int dim_plus = 0;   // exact nullity of (T - I)
  int dim_minus = 0;  // exact nullity of (T + I)
};

EigenspaceDims eigenspace_dims(const EdgeMatrix& T);

// Exact nullity over the rationals of (T - shift*I)^power.
int exact_nullity(const IMatrix& T, const Int& shift, int power);

// True iff T is diagonalizable, decided exactly: evaluate the squarefree
// part of its characteristic polynomial at T and test for the zero matrix.
bool is_semisimple_exact(const IMatrix& T);

struct AlternantCheck {
  std::vector<std::vector<std::complex<double>>> V;  // M x M
  double det_abs = 0;
  double expected_abs = 0;  // |prod_{i<j} (l_i - l_j)^{M_i M_j}|
  double rel_err = 0;
  bool ok = false;  // within relative tolerance 1e-8 and nonsingular
};

// The block generalized Vandermonde matrix of the spectrum report:
// block i has M_i columns, entry (k, l) = C(k-1, l) lambda_i^{k-1-l}.
AlternantCheck confluent_alternant(const SpectrumReport& spectrum);

// Distinct numeric roots of an integer polynomial: exact squarefree part,
// then companion-matrix eigenvalues of the squarefree factor.
std::vector<std::complex<double>> distinct_roots(const IntPoly& p);

}  // namespace ihara
