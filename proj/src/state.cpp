#include "multidir/state.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace multidir {

namespace {

constexpr double kSupportEps = 1e-12;
constexpr double kPhaseSnapTol = 1e-6;  // slack when snapping a ratio to an N-th root of unity

void check_local_dim(int local_dim) {
  if (local_dim < 1) throw std::invalid_argument("local dimension must be positive");
}

std::vector<int> sorted_unique_sites(const std::vector<int>& subset, int site_count) {
  std::vector<int> sorted = subset;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("site subset contains duplicates");
  if (!sorted.empty() && (sorted.front() < 0 || sorted.back() >= site_count))
    throw std::invalid_argument("site subset out of range");
  return sorted;
}

std::vector<int> complement_sites(const std::vector<int>& sorted_subset, int site_count) {
  std::vector<char> taken(site_count, 0);
  for (int s : sorted_subset) taken[s] = 1;
  std::vector<int> rest;
  for (int j = 0; j < site_count; ++j)
    if (!taken[j]) rest.push_back(j);
  return rest;
}

// base[i] = contribution of the i-th configuration of `sites_sel` to the full
// amplitude index (the remaining digits set to 0).
std::vector<long long> index_bases(const std::vector<int>& sites_sel, int local_dim,
                                   int site_count) {
  const int m = static_cast<int>(sites_sel.size());
  const long long count = pow_ll(local_dim, m);
  std::vector<long long> weight(m);
  for (int t = 0; t < m; ++t) weight[t] = pow_ll(local_dim, site_count - 1 - sites_sel[t]);
  std::vector<long long> base(count, 0);
  std::vector<int> digits(m, 0);
  long long cur = 0;
  for (long long i = 0; i < count; ++i) {
    base[i] = cur;
    for (int t = m - 1; t >= 0; --t) {
      ++digits[t];
      cur += weight[t];
      if (digits[t] < local_dim) break;
      digits[t] = 0;
      cur -= weight[t] * local_dim;
    }
  }
  return base;
}

// Rows indexed by the configuration of `row_sites` (ascending site order),
// columns by the configuration of the remaining sites.
Eigen::MatrixXcd split_matrix(const PureState& state, const std::vector<int>& row_sites) {
  const std::vector<int> col_sites = complement_sites(row_sites, state.K);
  const std::vector<long long> row_base = index_bases(row_sites, state.N, state.K);
  const std::vector<long long> col_base = index_bases(col_sites, state.N, state.K);
  Eigen::MatrixXcd m(static_cast<long long>(row_base.size()),
                     static_cast<long long>(col_base.size()));
  for (long long r = 0; r < m.rows(); ++r)
    for (long long c = 0; c < m.cols(); ++c) m(r, c) = state.amplitudes(row_base[r] + col_base[c]);
  return m;
}

// Permutation of the output tensor factors linking the edge and diagonal
// conventions; self-inverse for all three supported arrangements.
std::vector<int> edge_factor_map(const Geometry& geometry) {
  switch (geometry.kind) {
    case GeometryKind::Square:
      return {1, 0};
    case GeometryKind::Hexagon:
      return {2, 1, 0};
    case GeometryKind::Cube:
      return {2, 3, 0, 1};
    default:
      throw std::invalid_argument(
          "edge convention is only defined for the square, hexagonal, and cubic arrangements");
  }
}

// Out.row(pack(t)) = m.row(pack(u)) with u[i] = t[source_of[i]].
Eigen::MatrixXcd permute_rows_by_factor(const Eigen::MatrixXcd& m, int local_dim, int arity,
                                        const std::vector<int>& source_of) {
  const long long dim = m.rows();
  Eigen::MatrixXcd out(dim, m.cols());
  std::vector<int> u(arity);
  for (long long row = 0; row < dim; ++row) {
    const std::vector<int> t = unpack_config(row, local_dim, arity);
    for (int i = 0; i < arity; ++i) u[i] = t[source_of[i]];
    out.row(row) = m.row(pack_config(u, local_dim));
  }
  return out;
}

void check_operator(const OperatorMatrix& op) {
  check_local_dim(op.N);
  if (op.half_K < 1) throw std::invalid_argument("operator needs at least one input site");
  const long long dim = pow_ll(op.N, op.half_K);
  if (op.entries.rows() != dim || op.entries.cols() != dim)
    throw std::invalid_argument("operator matrix has wrong dimensions");
}

void check_state(const PureState& state) {
  check_local_dim(state.N);
  if (state.K < 1) throw std::invalid_argument("state needs at least one site");
  if (state.dimension() != pow_ll(state.N, state.K))
    throw std::invalid_argument("amplitude vector has wrong length");
}

}  // namespace

long long pow_ll(int base, int exponent) {
  long long result = 1;
  for (int i = 0; i < exponent; ++i) result *= base;
  return result;
}

long long pack_config(const std::vector<int>& values, int local_dim) {
  long long index = 0;
  for (int v : values) {
    if (v < 0 || v >= local_dim) throw std::invalid_argument("site value out of range");
    index = index * local_dim + v;
  }
  return index;
}

std::vector<int> unpack_config(long long index, int local_dim, int site_count) {
  std::vector<int> values(site_count);
  for (int j = site_count - 1; j >= 0; --j) {
    values[j] = static_cast<int>(index % local_dim);
    index /= local_dim;
  }
  return values;
}

PureState PureState::zero(int local_dim, int site_count) {
  check_local_dim(local_dim);
  if (site_count < 1) throw std::invalid_argument("state needs at least one site");
  PureState state;
  state.N = local_dim;
  state.K = site_count;
  state.amplitudes = Eigen::VectorXcd::Zero(pow_ll(local_dim, site_count));
  return state;
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (long long i = 0; i < a.rows(); ++i)
    for (long long j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

double unitarity_deviation(const Eigen::MatrixXcd& m) {
  Eigen::MatrixXcd gram = m.adjoint() * m;
  gram.diagonal().array() -= 1.0;
  return gram.cwiseAbs().maxCoeff();
}

bool is_unitary(const Eigen::MatrixXcd& m, double tol) {
  return m.rows() == m.cols() && unitarity_deviation(m) <= tol;
}

Eigen::MatrixXcd haar_random_unitary(int dim, std::mt19937_64& rng) {
  if (dim < 1) throw std::invalid_argument("dimension must be positive");
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXcd ginibre(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) ginibre(i, j) = Complex(gauss(rng), gauss(rng));
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(ginibre);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < dim; ++i) {
    const Complex d = r(i, i);
    const double mag = std::abs(d);
    q.col(i) *= (mag > 0.0) ? d / mag : Complex(1.0, 0.0);
  }
  return q;
}

OperatorMatrix to_diagonal_convention(const OperatorMatrix& op, const Geometry& geometry) {
  check_operator(op);
  if (2 * op.half_K != geometry.sites)
    throw std::invalid_argument("operator arity does not match the geometry");
  if (op.convention == Convention::Diagonal) return op;
  OperatorMatrix out = op;
  out.convention = Convention::Diagonal;
  out.entries = permute_rows_by_factor(op.entries, op.N, op.half_K, edge_factor_map(geometry));
  return out;
}

OperatorMatrix to_edge_convention(const OperatorMatrix& op, const Geometry& geometry) {
  check_operator(op);
  if (2 * op.half_K != geometry.sites)
    throw std::invalid_argument("operator arity does not match the geometry");
  if (op.convention == Convention::Edge) return op;
  OperatorMatrix out = op;
  out.convention = Convention::Edge;
  out.entries = permute_rows_by_factor(op.entries, op.N, op.half_K, edge_factor_map(geometry));
  return out;
}

PureState state_from_operator(const OperatorMatrix& op, const Geometry& geometry) {
  check_operator(op);
  if (!geometry.has_diagonals())
    throw std::invalid_argument("operator-state correspondence requires a geometry with diagonals");
  if (2 * op.half_K != geometry.sites)
    throw std::invalid_argument("operator arity does not match the geometry");
  const OperatorMatrix diag = to_diagonal_convention(op, geometry);
  const long long half_dim = diag.entries.rows();
  PureState state = PureState::zero(op.N, geometry.sites);
  const double scale = std::pow(static_cast<double>(op.N), -geometry.sites / 4.0);
  for (long long a = 0; a < half_dim; ++a)
    for (long long b = 0; b < half_dim; ++b)
      state.amplitudes(a * half_dim + b) = scale * diag.entries(b, a);
  return state;
}

OperatorMatrix operator_from_state(const PureState& state, const Geometry& geometry,
                                   const std::vector<int>& bipartition, Convention convention) {
  check_state(state);
  if (state.K != geometry.sites)
    throw std::invalid_argument("state dimensions do not match the geometry");
  const std::vector<int> subset = sorted_unique_sites(bipartition, state.K);
  if (!is_allowed_bipartition(geometry, subset))
    throw std::invalid_argument("subset " + format_sites(subset) +
                                " is not an allowed bipartition of the " + geometry.name());
  const std::vector<int> rest = complement_sites(subset, state.K);
  OperatorMatrix op;
  op.N = state.N;
  op.half_K = static_cast<int>(subset.size());
  op.convention = Convention::Diagonal;
  const double scale = std::pow(static_cast<double>(state.N), state.K / 4.0);
  op.entries = scale * split_matrix(state, rest);
  if (convention == Convention::Edge) {
    std::vector<int> canonical(geometry.half());
    std::iota(canonical.begin(), canonical.end(), 0);
    if (subset != canonical)
      throw std::invalid_argument(
          "edge convention output is only defined for the canonical input subset");
    op = to_edge_convention(op, geometry);
  }
  return op;
}

DensityMatrix reduced_density_matrix(const PureState& state, const std::vector<int>& subset) {
  check_state(state);
  const std::vector<int> sorted = sorted_unique_sites(subset, state.K);
  if (sorted.empty() || static_cast<int>(sorted.size()) >= state.K)
    throw std::invalid_argument("subset must be nonempty and proper");
  const Eigen::MatrixXcd m = split_matrix(state, sorted);
  DensityMatrix rho;
  rho.N = state.N;
  rho.subset = sorted;
  rho.entries = m * m.adjoint();
  return rho;
}

double von_neumann_entropy(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho.entries, Eigen::EigenvaluesOnly);
  double entropy = 0.0;
  for (long long i = 0; i < solver.eigenvalues().size(); ++i) {
    const double lambda = solver.eigenvalues()(i);
    if (lambda > 0.0) entropy -= lambda * std::log(lambda);
  }
  return entropy;
}

double von_neumann_entropy(const PureState& state, const std::vector<int>& subset) {
  return von_neumann_entropy(reduced_density_matrix(state, subset));
}

double maximal_entanglement_deviation(const PureState& state, const std::vector<int>& subset) {
  check_state(state);
  const std::vector<int> sorted = sorted_unique_sites(subset, state.K);
  if (sorted.empty() || static_cast<int>(sorted.size()) >= state.K)
    throw std::invalid_argument("subset must be nonempty and proper");
  const Eigen::MatrixXcd m = split_matrix(state, sorted);
  Eigen::MatrixXcd rho = m * m.adjoint();
  rho.diagonal().array() -= 1.0 / static_cast<double>(pow_ll(state.N, sorted.size()));
  return rho.cwiseAbs().maxCoeff();
}

bool is_maximally_entangled(const PureState& state, const std::vector<int>& subset, double tol) {
  return maximal_entanglement_deviation(state, subset) <= tol;
}

MultidirectionalReport is_multidirectional_unitary(const PureState& state,
                                                   const Geometry& geometry, double tol) {
  check_state(state);
  if (state.K != geometry.sites)
    throw std::invalid_argument("state dimensions do not match the geometry");
  MultidirectionalReport report;
  report.multidirectional = true;
  for (const std::vector<int>& subset : geometry.bipartitions) {
    BipartitionCheck check;
    check.subset = subset;
    check.deviation = maximal_entanglement_deviation(state, subset);
    check.maximal = check.deviation <= tol;
    report.multidirectional = report.multidirectional && check.maximal;
    report.checks.push_back(std::move(check));
  }
  return report;
}

bool is_absolutely_maximally_entangled(const PureState& state, double tol) {
  check_state(state);
  const int half = state.K / 2;
  for (int m = 1; m <= half; ++m) {
    std::vector<int> subset(m);
    std::iota(subset.begin(), subset.end(), 0);
    while (true) {
      // For half-size subsets, checking those containing site 0 covers every
      // bipartition once (the complement carries the same spectrum).
      const bool skip = (2 * m == state.K) && subset[0] != 0;
      if (!skip && !is_maximally_entangled(state, subset, tol)) return false;
      int t = m - 1;
      while (t >= 0 && subset[t] == state.K - m + t) --t;
      if (t < 0) break;
      ++subset[t];
      for (int u = t + 1; u < m; ++u) subset[u] = subset[u - 1] + 1;
    }
  }
  return true;
}

OperatorMatrix reshuffle(const OperatorMatrix& op) {
  check_operator(op);
  if (op.half_K != 2) throw std::invalid_argument("reshuffle is defined for two-site operators");
  const int n = op.N;
  const auto realign = [n](const Eigen::MatrixXcd& m) {
    Eigen::MatrixXcd out(m.rows(), m.cols());
    for (int x1 = 0; x1 < n; ++x1)
      for (int x2 = 0; x2 < n; ++x2)
        for (int y1 = 0; y1 < n; ++y1)
          for (int y2 = 0; y2 < n; ++y2)
            out(x1 * n + x2, y1 * n + y2) = m(x1 * n + y1, x2 * n + y2);
    return out;
  };
  const std::vector<int> swap_factors{1, 0};
  OperatorMatrix out = op;
  if (op.convention == Convention::Edge) {
    out.entries = realign(op.entries);
  } else {
    const Eigen::MatrixXcd edge = permute_rows_by_factor(op.entries, n, 2, swap_factors);
    out.entries = permute_rows_by_factor(realign(edge), n, 2, swap_factors);
  }
  return out;
}

OperatorMatrix partial_transpose(const OperatorMatrix& op, const std::vector<int>& positions) {
  check_operator(op);
  std::vector<int> sorted = positions;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("transpose positions contain duplicates");
  if (!sorted.empty() && (sorted.front() < 0 || sorted.back() >= op.half_K))
    throw std::invalid_argument("transpose positions out of range");
  const long long dim = op.entries.rows();
  std::vector<std::vector<int>> digits(dim);
  for (long long i = 0; i < dim; ++i) digits[i] = unpack_config(i, op.N, op.half_K);
  OperatorMatrix out = op;
  for (long long r = 0; r < dim; ++r) {
    for (long long c = 0; c < dim; ++c) {
      std::vector<int> rd = digits[r];
      std::vector<int> cd = digits[c];
      for (int p : sorted) std::swap(rd[p], cd[p]);
      out.entries(pack_config(rd, op.N), pack_config(cd, op.N)) = op.entries(r, c);
    }
  }
  return out;
}

PureState apply_site_permutation(const PureState& state, const SitePermutation& perm) {
  check_state(state);
  if (perm.size() != state.K)
    throw std::invalid_argument("permutation size does not match the state");
  PureState out = PureState::zero(state.N, state.K);
  std::vector<int> image(state.K);
  for (long long idx = 0; idx < state.dimension(); ++idx) {
    const std::vector<int> config = unpack_config(idx, state.N, state.K);
    for (int j = 0; j < state.K; ++j) image[perm(j)] = config[j];
    out.amplitudes(pack_config(image, state.N)) = state.amplitudes(idx);
  }
  return out;
}

PureState apply_local_unitaries(const PureState& state,
                                const std::vector<Eigen::MatrixXcd>& factors) {
  check_state(state);
  if (static_cast<int>(factors.size()) != state.K)
    throw std::invalid_argument("need exactly one factor per site");
  for (const Eigen::MatrixXcd& factor : factors) {
    if (factor.rows() != state.N || factor.cols() != state.N)
      throw std::invalid_argument("local factor has wrong dimensions");
    if (unitarity_deviation(factor) > kMatrixTol)
      throw std::invalid_argument("local factor is not unitary");
  }
  PureState out = state;
  Eigen::VectorXcd in_block(state.N), out_block(state.N);
  for (int j = 0; j < state.K; ++j) {
    const long long block = pow_ll(state.N, state.K - 1 - j);
    const long long outer = pow_ll(state.N, j);
    for (long long p = 0; p < outer; ++p) {
      for (long long q = 0; q < block; ++q) {
        const long long base = p * state.N * block + q;
        for (int v = 0; v < state.N; ++v) in_block(v) = out.amplitudes(base + v * block);
        out_block.noalias() = factors[j] * in_block;
        for (int v = 0; v < state.N; ++v) out.amplitudes(base + v * block) = out_block(v);
      }
    }
  }
  return out;
}

double spatial_symmetry_deviation(const PureState& state, const Geometry& geometry) {
  check_state(state);
  if (state.K != geometry.sites)
    throw std::invalid_argument("state dimensions do not match the geometry");
  double deviation = 0.0;
  for (const SitePermutation& g : geometry.generators) {
    const PureState moved = apply_site_permutation(state, g);
    deviation = std::max(deviation, (moved.amplitudes - state.amplitudes).cwiseAbs().maxCoeff());
  }
  return deviation;
}

bool is_spatially_symmetric(const PureState& state, const Geometry& geometry, double tol) {
  return spatial_symmetry_deviation(state, geometry) <= tol;
}

double diagonal_entanglement(const PureState& state, const Geometry& geometry) {
  check_state(state);
  if (state.K != geometry.sites)
    throw std::invalid_argument("state dimensions do not match the geometry");
  if (!geometry.has_diagonals())
    throw std::invalid_argument("diagonal entanglement requires a geometry with diagonals");
  double max_entropy = 0.0;
  for (const std::pair<int, int>& diag : geometry.diagonals)
    max_entropy = std::max(max_entropy,
                           von_neumann_entropy(state, {diag.first, diag.second}));
  return max_entropy;
}

namespace {

int mod_norm(long long value, int modulus) {
  long long r = value % modulus;
  if (r < 0) r += modulus;
  return static_cast<int>(r);
}

// Inverse of a mod n, or -1 when gcd(a, n) != 1.
int mod_inverse(int a, int n) {
  int t = 0, new_t = 1;
  int r = n, new_r = mod_norm(a, n);
  while (new_r != 0) {
    const int q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (r != 1) return -1;
  return mod_norm(t, n);
}

struct ModEquation {
  std::vector<int> coeff;
  int rhs = 0;
};

// Any solution of the system mod n with free variables set to 0, or nullopt.
// Elimination only uses invertible pivots, so it is complete for prime n; the
// candidate is always re-verified against the original equations.
std::optional<std::vector<int>> solve_mod_linear(const std::vector<ModEquation>& equations,
                                                 int vars, int modulus) {
  std::vector<std::vector<int>> a;
  std::vector<int> b;
  for (const ModEquation& eq : equations) {
    a.push_back(eq.coeff);
    b.push_back(mod_norm(eq.rhs, modulus));
  }
  const int rows = static_cast<int>(a.size());
  std::vector<int> pivot_cols;
  int rank = 0;
  for (int col = 0; col < vars && rank < rows; ++col) {
    int sel = -1, inv = -1;
    for (int r = rank; r < rows; ++r) {
      const int value = mod_norm(a[r][col], modulus);
      if (value == 0) continue;
      const int candidate = mod_inverse(value, modulus);
      if (candidate >= 0) {
        sel = r;
        inv = candidate;
        break;
      }
    }
    if (sel < 0) continue;
    std::swap(a[rank], a[sel]);
    std::swap(b[rank], b[sel]);
    for (int c = 0; c < vars; ++c)
      a[rank][c] = mod_norm(static_cast<long long>(a[rank][c]) * inv, modulus);
    b[rank] = mod_norm(static_cast<long long>(b[rank]) * inv, modulus);
    for (int r = 0; r < rows; ++r) {
      if (r == rank) continue;
      const int factor = mod_norm(a[r][col], modulus);
      if (factor == 0) continue;
      for (int c = 0; c < vars; ++c)
        a[r][c] = mod_norm(a[r][c] - static_cast<long long>(factor) * a[rank][c], modulus);
      b[r] = mod_norm(b[r] - static_cast<long long>(factor) * b[rank], modulus);
    }
    pivot_cols.push_back(col);
    ++rank;
  }
  std::vector<int> x(vars, 0);
  for (int i = 0; i < rank; ++i) x[pivot_cols[i]] = b[i];
  for (const ModEquation& eq : equations) {
    long long sum = -eq.rhs;
    for (int v = 0; v < vars; ++v) sum += static_cast<long long>(eq.coeff[v]) * x[v];
    if (mod_norm(sum, modulus) != 0) return std::nullopt;
  }
  return x;
}

struct SupportEntry {
  long long index = 0;
  std::vector<int> digits;
  long long quantized_modulus = 0;
};

std::vector<SupportEntry> support_of(const PureState& state) {
  std::vector<SupportEntry> support;
  for (long long idx = 0; idx < state.dimension(); ++idx) {
    const double mag = std::abs(state.amplitudes(idx));
    if (mag > kSupportEps)
      support.push_back({idx, unpack_config(idx, state.N, state.K), std::llround(mag * 1e9)});
  }
  return support;
}

// Multiset of (first `depth` digits after mapping, |amplitude| bucket).
std::vector<std::pair<std::vector<int>, long long>> mapped_prefixes(
    const std::vector<SupportEntry>& support, const std::vector<std::vector<int>>& maps,
    int depth) {
  std::vector<std::pair<std::vector<int>, long long>> keys;
  keys.reserve(support.size());
  for (const SupportEntry& entry : support) {
    std::vector<int> prefix(depth);
    for (int j = 0; j < depth; ++j)
      prefix[j] = maps.empty() ? entry.digits[j] : maps[j][entry.digits[j]];
    keys.emplace_back(std::move(prefix), entry.quantized_modulus);
  }
  std::sort(keys.begin(), keys.end());
  return keys;
}

struct MonomialSearch {
  const PureState* state = nullptr;
  const PureState* target = nullptr;
  std::vector<SupportEntry> state_support;
  std::vector<SupportEntry> target_support;
  std::vector<std::vector<int>> maps;

  bool prefix_consistent(int depth) const {
    return mapped_prefixes(state_support, maps, depth) ==
           mapped_prefixes(target_support, {}, depth);
  }

  std::optional<InvarianceWitness> solve_phases() const {
    const int n = state->N;
    const int sites = state->K;
    const double step = 2.0 * M_PI / n;
    // Ratios target(image of c) / state(c), keyed by the image configuration.
    std::vector<std::pair<std::vector<int>, Complex>> ratios;
    for (const SupportEntry& entry : state_support) {
      std::vector<int> image(sites);
      for (int j = 0; j < sites; ++j) image[j] = maps[j][entry.digits[j]];
      const Complex target_amp = target->amplitudes(pack_config(image, n));
      ratios.emplace_back(std::move(image), target_amp / state->amplitudes(entry.index));
    }
    std::sort(ratios.begin(), ratios.end(),
              [](const auto& lhs, const auto& rhs) { return lhs.first < rhs.first; });
    const Complex phase = ratios.front().second;
    if (std::abs(std::abs(phase) - 1.0) > kPhaseSnapTol) return std::nullopt;
    std::vector<ModEquation> equations;
    for (const auto& [image, ratio] : ratios) {
      const Complex relative = ratio / phase;
      const double angle = std::arg(relative) / step;
      const int exponent = mod_norm(std::llround(angle), n);
      if (std::abs(relative - std::polar(1.0, exponent * step)) > kPhaseSnapTol)
        return std::nullopt;
      ModEquation eq;
      eq.coeff.assign(sites * n, 0);
      for (int j = 0; j < sites; ++j) eq.coeff[j * n + image[j]] += 1;
      eq.rhs = exponent;
      equations.push_back(std::move(eq));
    }
    const std::optional<std::vector<int>> solution = solve_mod_linear(equations, sites * n, n);
    if (!solution) return std::nullopt;
    InvarianceWitness witness;
    witness.phase = phase;
    witness.value_maps = maps;
    witness.phase_exponents.assign(sites, std::vector<int>(n, 0));
    for (int j = 0; j < sites; ++j)
      for (int v = 0; v < n; ++v) witness.phase_exponents[j][v] = (*solution)[j * n + v];
    // Full numeric confirmation over every amplitude.
    PureState transformed = PureState::zero(n, sites);
    for (long long idx = 0; idx < state->dimension(); ++idx) {
      const std::vector<int> config = unpack_config(idx, n, sites);
      std::vector<int> image(sites);
      long long exponent = 0;
      for (int j = 0; j < sites; ++j) {
        image[j] = maps[j][config[j]];
        exponent += witness.phase_exponents[j][image[j]];
      }
      transformed.amplitudes(pack_config(image, n)) =
          phase * std::polar(1.0, mod_norm(exponent, n) * step) * state->amplitudes(idx);
    }
    if ((transformed.amplitudes - target->amplitudes).cwiseAbs().maxCoeff() > kMatrixTol)
      return std::nullopt;
    return witness;
  }

  std::optional<InvarianceWitness> search(int depth) {
    if (depth == state->K) return solve_phases();
    std::vector<int> perm(state->N);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      maps.push_back(perm);
      if (prefix_consistent(depth + 1)) {
        std::optional<InvarianceWitness> found = search(depth + 1);
        if (found) return found;
      }
      maps.pop_back();
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
  }
};

}  // namespace

std::optional<InvarianceWitness> invariance_witness(const PureState& state,
                                                    const SitePermutation& perm,
                                                    WitnessSearch search) {
  check_state(state);
  if (perm.size() != state.K)
    throw std::invalid_argument("permutation size does not match the state");
  const PureState target = apply_site_permutation(state, perm);
  if (search == WitnessSearch::GlobalPhase) {
    long long anchor = 0;
    state.amplitudes.cwiseAbs().maxCoeff(&anchor);
    if (std::abs(state.amplitudes(anchor)) <= kSupportEps) return std::nullopt;
    Complex phase = target.amplitudes(anchor) / state.amplitudes(anchor);
    const double mag = std::abs(phase);
    if (mag <= kSupportEps) return std::nullopt;
    phase /= mag;
    if ((target.amplitudes - phase * state.amplitudes).cwiseAbs().maxCoeff() > kMatrixTol)
      return std::nullopt;
    InvarianceWitness witness;
    witness.phase = phase;
    std::vector<int> identity(state.N);
    std::iota(identity.begin(), identity.end(), 0);
    witness.value_maps.assign(state.K, identity);
    witness.phase_exponents.assign(state.K, std::vector<int>(state.N, 0));
    return witness;
  }
  MonomialSearch monomial;
  monomial.state = &state;
  monomial.target = &target;
  monomial.state_support = support_of(state);
  monomial.target_support = support_of(target);
  if (monomial.state_support.size() != monomial.target_support.size()) return std::nullopt;
  if (monomial.state_support.empty()) return std::nullopt;
  return monomial.search(0);
}

WeakInvarianceReport weak_spatial_invariance(const PureState& state, const Geometry& geometry,
                                             WitnessSearch search) {
  check_state(state);
  if (state.K != geometry.sites)
    throw std::invalid_argument("state dimensions do not match the geometry");
  WeakInvarianceReport report;
  report.invariant = true;
  for (const SitePermutation& g : geometry.generators) {
    GeneratorInvariance entry;
    entry.generator = g;
    entry.witness = invariance_witness(state, g, search);
    report.invariant = report.invariant && entry.witness.has_value();
    report.generators.push_back(std::move(entry));
  }
  return report;
}

PureState random_state(int local_dim, int site_count, std::mt19937_64& rng) {
  PureState state = PureState::zero(local_dim, site_count);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (long long i = 0; i < state.dimension(); ++i)
    state.amplitudes(i) = Complex(gauss(rng), gauss(rng));
  state.amplitudes /= state.amplitudes.norm();
  return state;
}

}  // namespace multidir
