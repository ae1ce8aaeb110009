#pragma once
// Explicit constructions of multi-directional unitary gates and of the
// corresponding maximally entangled states: identity (Bell-pair) states,
// diagonal phase gates, the two-qubit Cartan family and the kicked Ising
// gate, complex-Hadamard-based gates on the square and on the cube, and
// qudit graph states together with an exact integer determinant criterion
// for maximal entanglement.

#include <vector>

#include <Eigen/Dense>

#include <multidir/geometry.hpp>
#include <multidir/state.hpp>

namespace multidir {

// --- basic number-theory / phase helpers -------------------------------------

bool is_prime(int n);

// e^{2*pi*i * numerator / denominator}.  Quarter turns (multiples of 1/4)
// are returned exactly as {1, i, -1, -i} so that constructions whose phases
// are fourth roots of unity produce bit-exact amplitudes.
Complex root_of_unity(long long numerator, long long denominator);

// --- domain types -------------------------------------------------------------

// Real phases indexed by value tuples in {0..N-1}^arity.  Entries are stored
// flat in the same big-endian mixed-radix order as pack_config.
struct PhaseTable {
  int N = 0;
  int arity = 0;
  std::vector<double> phases;  // size N^arity

  static PhaseTable zeros(int local_dim, int arity);

  double at(const std::vector<int>& tuple) const;
  double& at(const std::vector<int>& tuple);
};

// N x N matrix whose entries all have modulus one and which is proportional
// to a unitary matrix (matrix / sqrt(N) unitary).
struct HadamardMatrix {
  int N = 0;
  Eigen::MatrixXcd entries;
};

// Symmetric integer edge labels on K vertices with zero diagonal.  Labels are
// reduced modulo the local dimension by the functions that consume them.
struct IncidenceGraph {
  int K = 0;
  std::vector<std::vector<int>> labels;
};

// --- identity and diagonal constructions --------------------------------------

// Equal-weight superposition acting as the identity along the diagonals of
// the arrangement: a product of K/2 maximally entangled pairs, one per
// diagonal.  Throws for arrangements without diagonals (tetrahedron).
PureState identity_state(const Geometry& geometry, int local_dim);

// Diagonal gate D with D^a_a = e^{i phi_a} for every input tuple a.  The
// result is multi-directional unitary for every phase table; the state is
// spatially symmetric exactly when the phase table is invariant under the
// tuple permutations induced by the symmetry group on the diagonals.
OperatorMatrix diagonal_gate(const Geometry& geometry, const PhaseTable& phases);

// Qubit diagonal gate on three sites,
//   D = exp[i (gamma (Z1 Z2 + Z2 Z3 + Z1 Z3) + delta Z1 Z2 Z3)],
// returned as an 8x8 diagonal-convention operator.  delta != 0 introduces a
// genuine three-body coupling; delta = 0 factorizes into two-site gates.
OperatorMatrix hexagonal_qubit_diagonal(double gamma, double delta);

// --- qubit Cartan family -------------------------------------------------------

// U = e^{i phi} (s1 (x) s2) diag(e^{i alpha}, e^{-i alpha}, e^{-i alpha},
// e^{i alpha}) (s3 (x) s4) in the diagonal convention.  Every member is
// unitary and stays unitary under the partial transpose, so both square
// bipartitions of the corresponding state are maximally entangled.
// The one-site factors must be special unitaries (det = 1).
OperatorMatrix cartan_dual_unitary(double phi, double alpha,
                                   const Eigen::Matrix2cd& s1, const Eigen::Matrix2cd& s2,
                                   const Eigen::Matrix2cd& s3, const Eigen::Matrix2cd& s4);

// Self-dual subfamily e^{i phi} (V^t (x) V^t) D(alpha) (V (x) V); the
// corresponding square state is spatially symmetric.
OperatorMatrix self_dual_family(const Eigen::Matrix2cd& v, double alpha, double phi);

// The self-dual kicked Ising gate at its maximally chaotic point, as the
// exact 4x4 edge-convention matrix
//   (i/2) [[ 1,-1,-1,-1], [-1,-1, 1,-1], [-1, 1,-1,-1], [-1,-1,-1, 1]],
// which is i/2 times a real Hadamard matrix.
OperatorMatrix kicked_ising_gate();

// --- complex Hadamard constructions --------------------------------------------

// Fourier matrix F_jk = e^{2 pi i jk / N} (indices 0-based); a symmetric
// complex Hadamard matrix for every N >= 2.
HadamardMatrix fourier_hadamard(int local_dim);

// True iff every entry has modulus one and matrix / sqrt(N) is unitary,
// both within tol.
bool is_complex_hadamard(const Eigen::MatrixXcd& matrix, double tol = kMatrixTol);

// Checks the monomial equivalence  lhs == P2 D2 rhs D1 P1  within tol, where
// D1/D2 are the diagonal matrices with the given diagonals and P1/P2 are the
// permutation matrices mapping basis vector k to basis vector p[k].
bool hadamard_equivalent(const Eigen::MatrixXcd& lhs, const Eigen::MatrixXcd& rhs,
                         const Eigen::VectorXcd& d1, const Eigen::VectorXcd& d2,
                         const std::vector<int>& p1, const std::vector<int>& p2,
                         double tol = kMatrixTol);

// Dual unitary gate built from four Hadamard matrices attached to the edges
// of the square: the edge-convention matrix with entries
//   U[(d,c)][(a,b)] = A_a^b B_b^c C_c^d E_d^a / N
// where X_u^v denotes the element of X in column u and row v.  With four
// equal symmetric factors the gate is in addition self-dual.
OperatorMatrix hadamard_square(const HadamardMatrix& a, const HadamardMatrix& b,
                               const HadamardMatrix& c, const HadamardMatrix& e);

// Multi-directional unitary gate on four input sites built from one symmetric
// Hadamard matrix attached to all 12 edges of the cube: two-site diagonal
// factors on the four input-face edges and on the four output-face edges,
// and one-site factors A along the four remaining edges.
OperatorMatrix hadamard_cube(const HadamardMatrix& a);

// --- graph states ---------------------------------------------------------------

// Graph state of the labeled graph: every component has modulus N^{-K/2} and
// phase omega^e with omega = e^{2 pi i / N} and
//   e = sum_{j<k} labels[j][k] a_j a_k  (site values a in {0..N-1}).
// The local dimension must be prime.
PureState graph_state(const IncidenceGraph& incidence, int local_dim);

// The group-invariant labeled graph of the arrangement.  Parameter order:
//   square:     {alpha (edges), beta (diagonals)}
//   hexagon:    {alpha (nearest), beta (next-nearest), gamma (diagonals)}
//   cube:       {alpha (edges), beta (face diagonals), gamma (body diagonals)}
//   octahedron: {alpha (edges), gamma (diagonals)}
// Other arrangements have no such parameter convention and are rejected.
IncidenceGraph symmetric_incidence(const Geometry& geometry, const std::vector<int>& parameters);

struct IncidenceDeterminant {
  long long determinant = 0;  // exact integer determinant of the reduced block
  int residue = 0;            // determinant mod N, in {0..N-1}
  bool maximal = false;       // residue != 0
};

// Exact determinant of the reduced incidence block I^{AB} for the canonical
// bipartition A = {first K/2 sites}: (I^{AB})_{jk} = label of the pair
// (site j, site k + K/2).  The state of the labeled graph is maximally
// entangled for that bipartition iff the determinant is nonzero mod N.
// The local dimension must be prime.
IncidenceDeterminant reduced_incidence_determinant(const Geometry& geometry,
                                                   const std::vector<int>& parameters,
                                                   int local_dim);

// Same criterion for an arbitrary labeled graph on an even number of sites.
IncidenceDeterminant reduced_incidence_determinant(const IncidenceGraph& incidence, int local_dim);

}  // namespace multidir
