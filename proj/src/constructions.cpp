#include <multidir/constructions.hpp>

#include <cmath>
#include <stdexcept>
#include <utility>

namespace multidir {
namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

void check_local_dim(int local_dim) {
  if (local_dim < 1) throw std::invalid_argument("local dimension must be positive");
}

void check_phase_table(const PhaseTable& phases) {
  if (phases.N < 1) throw std::invalid_argument("phase table local dimension must be positive");
  if (phases.arity < 1) throw std::invalid_argument("phase table arity must be positive");
  if (static_cast<long long>(phases.phases.size()) != pow_ll(phases.N, phases.arity))
    throw std::invalid_argument("phase table size does not match N^arity");
}

void check_hadamard(const HadamardMatrix& h) {
  if (h.N < 1 || h.entries.rows() != h.N || h.entries.cols() != h.N)
    throw std::invalid_argument("Hadamard matrix has inconsistent dimensions");
  if (!is_complex_hadamard(h.entries, kMatrixTol))
    throw std::invalid_argument("matrix is not a complex Hadamard matrix");
}

void check_incidence(const IncidenceGraph& incidence) {
  const int k = incidence.K;
  if (k < 1) throw std::invalid_argument("incidence graph must have at least one vertex");
  if (static_cast<int>(incidence.labels.size()) != k)
    throw std::invalid_argument("incidence label matrix has wrong number of rows");
  for (int j = 0; j < k; ++j) {
    if (static_cast<int>(incidence.labels[j].size()) != k)
      throw std::invalid_argument("incidence label matrix has wrong number of columns");
    if (incidence.labels[j][j] != 0)
      throw std::invalid_argument("incidence graph must not have self-loops");
    for (int l = 0; l < k; ++l) {
      if (incidence.labels[j][l] < 0)
        throw std::invalid_argument("incidence labels must be non-negative");
      if (incidence.labels[j][l] != incidence.labels[l][j])
        throw std::invalid_argument("incidence label matrix must be symmetric");
    }
  }
}

bool is_special_unitary_2(const Eigen::Matrix2cd& s) {
  if (unitarity_deviation(s) > kMatrixTol) return false;
  return std::abs(s.determinant() - Complex(1.0, 0.0)) <= kMatrixTol;
}

// Exact integer determinant by cofactor expansion along the first row; the
// reduced incidence blocks are at most 4x4, so this stays exact and cheap.
long long integer_determinant(const std::vector<std::vector<long long>>& m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  long long det = 0;
  for (int col = 0; col < n; ++col) {
    if (m[0][col] == 0) continue;
    std::vector<std::vector<long long>> minor(n - 1, std::vector<long long>(n - 1));
    for (int r = 1; r < n; ++r) {
      int mc = 0;
      for (int c = 0; c < n; ++c) {
        if (c == col) continue;
        minor[r - 1][mc++] = m[r][c];
      }
    }
    const long long term = m[0][col] * integer_determinant(minor);
    det += (col % 2 == 0) ? term : -term;
  }
  return det;
}

Eigen::MatrixXcd permutation_matrix(const std::vector<int>& image) {
  const int n = static_cast<int>(image.size());
  std::vector<bool> seen(n, false);
  for (int k = 0; k < n; ++k) {
    if (image[k] < 0 || image[k] >= n || seen[image[k]])
      throw std::invalid_argument("permutation image is not a bijection");
    seen[image[k]] = true;
  }
  Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(n, n);
  for (int k = 0; k < n; ++k) p(image[k], k) = Complex(1.0, 0.0);
  return p;
}

// The twelve edges of the cube in the frozen site labeling: the input-face
// ring, the output-face ring, and the four edges connecting the faces.
const std::vector<std::pair<int, int>>& cube_edges() {
  static const std::vector<std::pair<int, int>> edges = {
      {0, 1}, {1, 2}, {2, 3}, {0, 3}, {4, 5}, {5, 6},
      {6, 7}, {4, 7}, {0, 6}, {1, 7}, {2, 4}, {3, 5}};
  return edges;
}

}  // namespace

// --- basic helpers -------------------------------------------------------------

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; static_cast<long long>(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Complex root_of_unity(long long numerator, long long denominator) {
  if (denominator <= 0) throw std::invalid_argument("root_of_unity denominator must be positive");
  long long r = numerator % denominator;
  if (r < 0) r += denominator;
  if ((4 * r) % denominator == 0) {
    switch ((4 * r) / denominator) {
      case 0: return Complex(1.0, 0.0);
      case 1: return Complex(0.0, 1.0);
      case 2: return Complex(-1.0, 0.0);
      default: return Complex(0.0, -1.0);
    }
  }
  const double angle = kTwoPi * static_cast<double>(r) / static_cast<double>(denominator);
  return Complex(std::cos(angle), std::sin(angle));
}

// --- PhaseTable ------------------------------------------------------------------

PhaseTable PhaseTable::zeros(int local_dim, int arity) {
  check_local_dim(local_dim);
  if (arity < 1) throw std::invalid_argument("phase table arity must be positive");
  PhaseTable table;
  table.N = local_dim;
  table.arity = arity;
  table.phases.assign(static_cast<size_t>(pow_ll(local_dim, arity)), 0.0);
  return table;
}

double PhaseTable::at(const std::vector<int>& tuple) const {
  if (static_cast<int>(tuple.size()) != arity)
    throw std::invalid_argument("phase table tuple has wrong arity");
  return phases.at(static_cast<size_t>(pack_config(tuple, N)));
}

double& PhaseTable::at(const std::vector<int>& tuple) {
  if (static_cast<int>(tuple.size()) != arity)
    throw std::invalid_argument("phase table tuple has wrong arity");
  return phases.at(static_cast<size_t>(pack_config(tuple, N)));
}

// --- identity and diagonal constructions ----------------------------------------

PureState identity_state(const Geometry& geometry, int local_dim) {
  check_local_dim(local_dim);
  if (!geometry.has_diagonals())
    throw std::invalid_argument("identity construction needs an arrangement with diagonals");
  const int half = geometry.half();
  const long long half_dim = pow_ll(local_dim, half);
  PureState state = PureState::zero(local_dim, geometry.sites);
  const double amp = std::pow(static_cast<double>(local_dim), -geometry.sites / 4.0);
  for (long long a = 0; a < half_dim; ++a) state.amplitudes(a * half_dim + a) = amp;
  return state;
}

OperatorMatrix diagonal_gate(const Geometry& geometry, const PhaseTable& phases) {
  check_phase_table(phases);
  if (!geometry.has_diagonals())
    throw std::invalid_argument("diagonal gates need an arrangement with diagonals");
  if (phases.arity != geometry.half())
    throw std::invalid_argument("phase table arity must equal half the number of sites");
  const long long dim = pow_ll(phases.N, phases.arity);
  OperatorMatrix op;
  op.N = phases.N;
  op.half_K = phases.arity;
  op.convention = Convention::Diagonal;
  op.entries = Eigen::MatrixXcd::Zero(dim, dim);
  for (long long a = 0; a < dim; ++a)
    op.entries(a, a) = std::polar(1.0, phases.phases[static_cast<size_t>(a)]);
  return op;
}

OperatorMatrix hexagonal_qubit_diagonal(double gamma, double delta) {
  OperatorMatrix op;
  op.N = 2;
  op.half_K = 3;
  op.convention = Convention::Diagonal;
  op.entries = Eigen::MatrixXcd::Zero(8, 8);
  for (int v1 = 0; v1 < 2; ++v1)
    for (int v2 = 0; v2 < 2; ++v2)
      for (int v3 = 0; v3 < 2; ++v3) {
        const double z1 = 1.0 - 2.0 * v1;
        const double z2 = 1.0 - 2.0 * v2;
        const double z3 = 1.0 - 2.0 * v3;
        const double phase = gamma * (z1 * z2 + z2 * z3 + z1 * z3) + delta * z1 * z2 * z3;
        const int idx = 4 * v1 + 2 * v2 + v3;
        op.entries(idx, idx) = std::polar(1.0, phase);
      }
  return op;
}

// --- qubit Cartan family ----------------------------------------------------------

OperatorMatrix cartan_dual_unitary(double phi, double alpha,
                                   const Eigen::Matrix2cd& s1, const Eigen::Matrix2cd& s2,
                                   const Eigen::Matrix2cd& s3, const Eigen::Matrix2cd& s4) {
  for (const Eigen::Matrix2cd* s : {&s1, &s2, &s3, &s4})
    if (!is_special_unitary_2(*s))
      throw std::invalid_argument("one-site factor is not a special unitary");
  Eigen::MatrixXcd core = Eigen::MatrixXcd::Zero(4, 4);
  core(0, 0) = std::polar(1.0, alpha);
  core(1, 1) = std::polar(1.0, -alpha);
  core(2, 2) = std::polar(1.0, -alpha);
  core(3, 3) = std::polar(1.0, alpha);
  OperatorMatrix op;
  op.N = 2;
  op.half_K = 2;
  op.convention = Convention::Diagonal;
  op.entries = std::polar(1.0, phi) * (kron(s1, s2) * core * kron(s3, s4)).eval();
  return op;
}

OperatorMatrix self_dual_family(const Eigen::Matrix2cd& v, double alpha, double phi) {
  const Eigen::Matrix2cd vt = v.transpose();
  return cartan_dual_unitary(phi, alpha, vt, vt, v, v);
}

OperatorMatrix kicked_ising_gate() {
  static const int signs[4][4] = {
      {1, -1, -1, -1}, {-1, -1, 1, -1}, {-1, 1, -1, -1}, {-1, -1, -1, 1}};
  OperatorMatrix op;
  op.N = 2;
  op.half_K = 2;
  op.convention = Convention::Edge;
  op.entries = Eigen::MatrixXcd::Zero(4, 4);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) op.entries(r, c) = Complex(0.0, 0.5 * signs[r][c]);
  return op;
}

// --- complex Hadamard constructions -----------------------------------------------

HadamardMatrix fourier_hadamard(int local_dim) {
  if (local_dim < 2) throw std::invalid_argument("Fourier matrix needs dimension at least 2");
  HadamardMatrix h;
  h.N = local_dim;
  h.entries = Eigen::MatrixXcd::Zero(local_dim, local_dim);
  for (int j = 0; j < local_dim; ++j)
    for (int k = 0; k < local_dim; ++k)
      h.entries(j, k) = root_of_unity(static_cast<long long>(j) * k, local_dim);
  return h;
}

bool is_complex_hadamard(const Eigen::MatrixXcd& matrix, double tol) {
  const long long n = matrix.rows();
  if (n == 0 || matrix.cols() != n) return false;
  for (long long r = 0; r < n; ++r)
    for (long long c = 0; c < n; ++c)
      if (std::abs(std::abs(matrix(r, c)) - 1.0) > tol) return false;
  return unitarity_deviation(matrix / std::sqrt(static_cast<double>(n))) <= tol;
}

bool hadamard_equivalent(const Eigen::MatrixXcd& lhs, const Eigen::MatrixXcd& rhs,
                         const Eigen::VectorXcd& d1, const Eigen::VectorXcd& d2,
                         const std::vector<int>& p1, const std::vector<int>& p2,
                         double tol) {
  const long long n = rhs.rows();
  if (rhs.cols() != n || lhs.rows() != n || lhs.cols() != n) return false;
  if (d1.size() != n || d2.size() != n) return false;
  if (static_cast<long long>(p1.size()) != n || static_cast<long long>(p2.size()) != n)
    return false;
  const Eigen::MatrixXcd transformed = permutation_matrix(p2) * d2.asDiagonal() * rhs *
                                       d1.asDiagonal() * permutation_matrix(p1);
  return (lhs - transformed).cwiseAbs().maxCoeff() <= tol;
}

OperatorMatrix hadamard_square(const HadamardMatrix& a, const HadamardMatrix& b,
                               const HadamardMatrix& c, const HadamardMatrix& e) {
  for (const HadamardMatrix* h : {&a, &b, &c, &e}) check_hadamard(*h);
  const int n = a.N;
  if (b.N != n || c.N != n || e.N != n)
    throw std::invalid_argument("all four Hadamard factors must have the same size");
  OperatorMatrix op;
  op.N = n;
  op.half_K = 2;
  op.convention = Convention::Edge;
  op.entries = Eigen::MatrixXcd::Zero(static_cast<long long>(n) * n,
                                      static_cast<long long>(n) * n);
  for (int va = 0; va < n; ++va)
    for (int vb = 0; vb < n; ++vb)
      for (int vc = 0; vc < n; ++vc)
        for (int vd = 0; vd < n; ++vd)
          op.entries(static_cast<long long>(vd) * n + vc,
                     static_cast<long long>(va) * n + vb) =
              a.entries(vb, va) * b.entries(vc, vb) * c.entries(vd, vc) *
              e.entries(va, vd) / static_cast<double>(n);
  return op;
}

OperatorMatrix hadamard_cube(const HadamardMatrix& a) {
  check_hadamard(a);
  if ((a.entries - a.entries.transpose()).cwiseAbs().maxCoeff() > kMatrixTol)
    throw std::invalid_argument("the cube construction needs a symmetric Hadamard matrix");
  const int n = a.N;
  const long long dim = pow_ll(n, 4);
  // Phase of the two-site diagonal factors taken around one four-site ring.
  Eigen::VectorXcd ring(dim);
  for (long long idx = 0; idx < dim; ++idx) {
    const std::vector<int> t = unpack_config(idx, n, 4);
    ring(idx) = a.entries(t[0], t[1]) * a.entries(t[1], t[2]) * a.entries(t[2], t[3]) *
                a.entries(t[3], t[0]);
  }
  OperatorMatrix op;
  op.N = n;
  op.half_K = 4;
  op.convention = Convention::Edge;
  op.entries = Eigen::MatrixXcd::Zero(dim, dim);
  const double norm = 1.0 / (static_cast<double>(n) * n);
  for (long long r = 0; r < dim; ++r) {
    const std::vector<int> rt = unpack_config(r, n, 4);
    for (long long c = 0; c < dim; ++c) {
      const std::vector<int> ct = unpack_config(c, n, 4);
      op.entries(r, c) = norm * ring(r) * ring(c) * a.entries(rt[0], ct[0]) *
                         a.entries(rt[1], ct[1]) * a.entries(rt[2], ct[2]) *
                         a.entries(rt[3], ct[3]);
    }
  }
  return op;
}

// --- graph states -------------------------------------------------------------------

PureState graph_state(const IncidenceGraph& incidence, int local_dim) {
  check_incidence(incidence);
  if (!is_prime(local_dim))
    throw std::invalid_argument("graph states need a prime local dimension");
  const int k = incidence.K;
  std::vector<std::vector<int>> labels(k, std::vector<int>(k));
  for (int j = 0; j < k; ++j)
    for (int l = 0; l < k; ++l) labels[j][l] = incidence.labels[j][l] % local_dim;
  std::vector<Complex> roots(static_cast<size_t>(local_dim));
  for (int e = 0; e < local_dim; ++e) roots[static_cast<size_t>(e)] = root_of_unity(e, local_dim);
  PureState state = PureState::zero(local_dim, k);
  const double modulus = std::pow(static_cast<double>(local_dim), -k / 2.0);
  for (long long idx = 0; idx < state.dimension(); ++idx) {
    const std::vector<int> values = unpack_config(idx, local_dim, k);
    long long exponent = 0;
    for (int j = 0; j < k; ++j)
      for (int l = j + 1; l < k; ++l) exponent += labels[j][l] * values[j] * values[l];
    state.amplitudes(idx) = modulus * roots[static_cast<size_t>(exponent % local_dim)];
  }
  return state;
}

IncidenceGraph symmetric_incidence(const Geometry& geometry, const std::vector<int>& parameters) {
  for (int p : parameters)
    if (p < 0) throw std::invalid_argument("incidence parameters must be non-negative");
  const auto expect_count = [&](size_t count) {
    if (parameters.size() != count)
      throw std::invalid_argument("wrong number of incidence parameters for this arrangement");
  };
  IncidenceGraph incidence;
  incidence.K = geometry.sites;
  incidence.labels.assign(geometry.sites, std::vector<int>(geometry.sites, 0));
  const auto set_pair = [&](int j, int k, int label) {
    incidence.labels[j][k] = label;
    incidence.labels[k][j] = label;
  };
  switch (geometry.kind) {
    case GeometryKind::Square: {
      expect_count(2);
      for (int j = 0; j < 4; ++j)
        for (int k = j + 1; k < 4; ++k) set_pair(j, k, (k - j == 2) ? parameters[1] : parameters[0]);
      break;
    }
    case GeometryKind::Hexagon: {
      expect_count(3);
      for (int j = 0; j < 6; ++j)
        for (int k = j + 1; k < 6; ++k) {
          const int dist = std::min(k - j, 6 - (k - j));
          set_pair(j, k, parameters[static_cast<size_t>(dist - 1)]);
        }
      break;
    }
    case GeometryKind::Cube: {
      expect_count(3);
      for (int j = 0; j < 8; ++j)
        for (int k = j + 1; k < 8; ++k) set_pair(j, k, parameters[1]);
      for (const auto& [j, k] : cube_edges()) set_pair(j, k, parameters[0]);
      for (int j = 0; j < 4; ++j) set_pair(j, j + 4, parameters[2]);
      break;
    }
    case GeometryKind::Octahedron: {
      expect_count(2);
      for (int j = 0; j < 6; ++j)
        for (int k = j + 1; k < 6; ++k) set_pair(j, k, (k - j == 3) ? parameters[1] : parameters[0]);
      break;
    }
    default:
      throw std::invalid_argument("no symmetric incidence parameter convention for this arrangement");
  }
  return incidence;
}

IncidenceDeterminant reduced_incidence_determinant(const IncidenceGraph& incidence, int local_dim) {
  check_incidence(incidence);
  if (!is_prime(local_dim))
    throw std::invalid_argument("the determinant criterion needs a prime local dimension");
  if (incidence.K % 2 != 0)
    throw std::invalid_argument("the determinant criterion needs an even number of sites");
  const int half = incidence.K / 2;
  std::vector<std::vector<long long>> block(half, std::vector<long long>(half));
  for (int j = 0; j < half; ++j)
    for (int k = 0; k < half; ++k) block[j][k] = incidence.labels[j][half + k];
  IncidenceDeterminant result;
  result.determinant = integer_determinant(block);
  result.residue = static_cast<int>(((result.determinant % local_dim) + local_dim) % local_dim);
  result.maximal = result.residue != 0;
  return result;
}

IncidenceDeterminant reduced_incidence_determinant(const Geometry& geometry,
                                                   const std::vector<int>& parameters,
                                                   int local_dim) {
  return reduced_incidence_determinant(symmetric_incidence(geometry, parameters), local_dim);
}

}  // namespace multidir
