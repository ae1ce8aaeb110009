#pragma once

#include <complex>
#include <optional>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "multidir/geometry.hpp"

namespace multidir {

using Complex = std::complex<double>;

// Shared numeric tolerances.
inline constexpr double kMatrixTol = 1e-9;        // max-norm tolerance for unitarity / maximality / symmetry
inline constexpr double kEntropyTol = 1e-8;       // tolerance when comparing von Neumann entropies (nats)
inline constexpr double kEigenvalueFloor = -1e-12;  // density eigenvalues in [floor, 0) are treated as 0

// --- configuration indexing -------------------------------------------------
// A configuration assigns a value 0..N-1 to each site. Configurations are
// stored big-endian mixed radix: site 0 is the most significant digit.
// (User-facing output renders values 1-based.)
long long pack_config(const std::vector<int>& values, int local_dim);
std::vector<int> unpack_config(long long index, int local_dim, int site_count);
long long pow_ll(int base, int exponent);

// --- core types -------------------------------------------------------------

// Pure state of K sites with local dimension N; amplitude vector of length N^K.
struct PureState {
  int N = 0;  // local dimension
  int K = 0;  // number of sites
  Eigen::VectorXcd amplitudes;

  static PureState zero(int local_dim, int site_count);

  long long dimension() const { return static_cast<long long>(amplitudes.size()); }
  double norm() const { return amplitudes.norm(); }
  Complex& at(const std::vector<int>& config) { return amplitudes(pack_config(config, N)); }
  Complex at(const std::vector<int>& config) const { return amplitudes(pack_config(config, N)); }
};

// Matrix convention for an operator acting on half of the sites.
//   Diagonal: row/column tuples run along the diagonals of the arrangement
//             (column = input sites 1..K/2, row = output sites K/2+1..K).
//   Edge:     the nearest-neighbour ("checkerboard") convention; related to
//             Diagonal by a fixed permutation of the output tensor factors.
enum class Convention { Diagonal, Edge };

struct OperatorMatrix {
  int N = 0;       // local dimension
  int half_K = 0;  // number of input sites; matrix is N^half_K x N^half_K
  Convention convention = Convention::Diagonal;
  Eigen::MatrixXcd entries;
};

struct DensityMatrix {
  int N = 0;
  std::vector<int> subset;  // 0-based site labels, ascending
  Eigen::MatrixXcd entries;
};

// --- linear-algebra helpers -------------------------------------------------
Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);
// Max-norm of (M† M - I); zero iff M is unitary (square M).
double unitarity_deviation(const Eigen::MatrixXcd& m);
bool is_unitary(const Eigen::MatrixXcd& m, double tol = kMatrixTol);
Eigen::MatrixXcd haar_random_unitary(int dim, std::mt19937_64& rng);

// --- operator-state correspondence ------------------------------------------
// The Edge<->Diagonal conversion permutes output tensor factors; it is defined
// for the square (swap), hexagonal (reverse) and cubic (half rotation)
// arrangements only.
OperatorMatrix to_diagonal_convention(const OperatorMatrix& op, const Geometry& geometry);
OperatorMatrix to_edge_convention(const OperatorMatrix& op, const Geometry& geometry);

// State with amplitude psi(a;b) = N^(-K/4) * U[b][a], where column tuple a
// lives on sites 0..K/2-1 and row tuple b on their antipodes (diagonal
// convention; Edge inputs are converted first).
PureState state_from_operator(const OperatorMatrix& op, const Geometry& geometry);

// Matrix M[b][a] = N^(K/4) * psi(a on `bipartition`, b on complement), indices
// ordered by ascending site label on each side. `bipartition` (or its
// complement) must be an allowed bipartition of the geometry. Edge output is
// only defined for the canonical input subset {0..K/2-1}.
OperatorMatrix operator_from_state(const PureState& state, const Geometry& geometry,
                                   const std::vector<int>& bipartition, Convention convention);

// --- density matrices and entropies -----------------------------------------
DensityMatrix reduced_density_matrix(const PureState& state, const std::vector<int>& subset);
// Entropy in nats; eigenvalues in [kEigenvalueFloor, 0) are clamped to zero.
double von_neumann_entropy(const DensityMatrix& rho);
double von_neumann_entropy(const PureState& state, const std::vector<int>& subset);

// Max-norm distance of the reduced density matrix from I / N^|subset|.
double maximal_entanglement_deviation(const PureState& state, const std::vector<int>& subset);
bool is_maximally_entangled(const PureState& state, const std::vector<int>& subset,
                            double tol = kMatrixTol);

struct BipartitionCheck {
  std::vector<int> subset;  // 0-based ascending
  double deviation = 0.0;   // max-norm distance of rho_A from I / N^|A|
  bool maximal = false;
};

struct MultidirectionalReport {
  std::vector<BipartitionCheck> checks;  // one per allowed bipartition, in geometry order
  bool multidirectional = false;         // AND of all checks
};

MultidirectionalReport is_multidirectional_unitary(const PureState& state, const Geometry& geometry,
                                                   double tol = kMatrixTol);

// True iff every subset of size <= K/2 is maximally entangled.
bool is_absolutely_maximally_entangled(const PureState& state, double tol = kMatrixTol);

// --- operator transformations -----------------------------------------------
// Realignment of a two-site operator: groups (row, column) indices per site
// and swaps the off-site pair. Involutive; unitary output on the edge matrix
// is equivalent to maximal entanglement along the second diagonal. Inputs in
// diagonal convention are converted to the edge matrix, realigned, and
// converted back.
OperatorMatrix reshuffle(const OperatorMatrix& op);

// Transposes the designated tensor factors (0-based positions < half_K):
// swaps the row and column index on those factors. Plain transposition, no
// complex conjugation.
OperatorMatrix partial_transpose(const OperatorMatrix& op, const std::vector<int>& positions);

// --- state transformations and symmetry -------------------------------------
// Moves the value at site j to site perm(j).
PureState apply_site_permutation(const PureState& state, const SitePermutation& perm);

// Applies factor[j] on site j; every factor must be N x N unitary.
PureState apply_local_unitaries(const PureState& state,
                                const std::vector<Eigen::MatrixXcd>& factors);

// Max over group generators g of the max-norm of (P_g psi - psi).
double spatial_symmetry_deviation(const PureState& state, const Geometry& geometry);
bool is_spatially_symmetric(const PureState& state, const Geometry& geometry,
                            double tol = kMatrixTol);

// Groups the two sites of each diagonal into one macro-site and returns the
// largest von Neumann entropy of a single macro-site; 0 iff the diagonals are
// in a product state. Requires a geometry with diagonals.
double diagonal_entanglement(const PureState& state, const Geometry& geometry);

// --- weak spatial invariance -------------------------------------------------
// Searches for local operators L_j undoing a site permutation g:
//   P_g psi = phase * (L_1 (x) ... (x) L_K) psi
// GlobalPhase restricts every L_j to the identity. Monomial searches
// generalized permutation matrices L_j |v> = w^{e_j(s_j(v))} |s_j(v)| with
// w = exp(2 pi i / N), a value permutation s_j per site and integer exponents
// e_j. The exponent solve is complete for prime N (modular elimination needs
// invertible pivots).
enum class WitnessSearch { GlobalPhase, Monomial };

struct InvarianceWitness {
  Complex phase{1.0, 0.0};
  std::vector<std::vector<int>> value_maps;       // per site: s_j as an image table of size N
  std::vector<std::vector<int>> phase_exponents;  // per site: e_j(v) for v = 0..N-1
};

std::optional<InvarianceWitness> invariance_witness(const PureState& state,
                                                    const SitePermutation& perm,
                                                    WitnessSearch search);

struct GeneratorInvariance {
  SitePermutation generator;
  std::optional<InvarianceWitness> witness;
};

struct WeakInvarianceReport {
  std::vector<GeneratorInvariance> generators;
  bool invariant = false;  // every generator admits a witness
};

WeakInvarianceReport weak_spatial_invariance(const PureState& state, const Geometry& geometry,
                                             WitnessSearch search);

// --- random inputs ------------------------------------------------------------
PureState random_state(int local_dim, int site_count, std::mt19937_64& rng);

}  // namespace multidir
