// Acceptance suite: end-to-end checks of the library's headline results.
//
// Each criterion prints exactly one PASS/FAIL line (with its runtime); a FAIL
// line is followed by an indented reason.  The process exits nonzero if any
// criterion fails or overruns its pinned time budget.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "multidir/classical.hpp"
#include "multidir/constructions.hpp"
#include "multidir/geometry.hpp"
#include "multidir/state.hpp"

using namespace multidir;

namespace {

// --- pinned tolerances and budgets -------------------------------------------
constexpr double kExactTol = 1e-12;        // algebraic identities
constexpr double kCheckTol = kMatrixTol;   // verification verdicts (1e-9)
constexpr double kBudgetKickedIsing = 1.0;     // seconds
constexpr double kBudgetDeterminant = 120.0;   // seconds
constexpr double kBudgetClassifyOne = 600.0;   // seconds, per heavy classification
constexpr double kBudgetRandomSuite = 300.0;   // seconds

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure(what);
}

double max_abs_diff(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

std::string join_ints(const std::vector<int>& values) {
  std::ostringstream out;
  for (size_t i = 0; i < values.size(); ++i) out << (i ? "," : "") << values[i];
  return out.str();
}

// Digit-string configuration literals (values as printed, 1-based).
Configuration config_of(const std::string& digits) {
  Configuration config;
  for (char c : digits) config.values.push_back(c - '0');
  return config;
}

std::vector<Configuration> config_set(const std::vector<std::string>& strings) {
  std::vector<Configuration> result;
  result.reserve(strings.size());
  for (const std::string& s : strings) result.push_back(config_of(s));
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<int> zero_based(const Configuration& config) {
  std::vector<int> values = config.values;
  for (int& v : values) --v;
  return values;
}

std::vector<int> canonical_half(const Geometry& geometry) {
  std::vector<int> sites(geometry.half());
  for (int j = 0; j < geometry.half(); ++j) sites[j] = j;
  return sites;
}

double seconds_since(const std::chrono::steady_clock::time_point& start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// --- criterion 1: kicked Ising gate -------------------------------------------

void criterion_kicked_ising() {
  const Geometry square = build_geometry(GeometryKind::Square);
  const OperatorMatrix gate = kicked_ising_gate();
  require(gate.convention == Convention::Edge, "gate is produced in the edge convention");
  require(unitarity_deviation(gate.entries) <= kExactTol, "gate matrix is unitary");

  const OperatorMatrix realigned = reshuffle(gate);
  require(unitarity_deviation(realigned.entries) <= kExactTol,
          "realigned matrix is unitary (dual unitarity)");
  require(max_abs_diff(realigned.entries, gate.entries) <= kExactTol,
          "gate equals its own realignment");

  Eigen::MatrixXcd swap = Eigen::MatrixXcd::Zero(4, 4);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) swap(b * 2 + a, a * 2 + b) = 1.0;
  require(max_abs_diff(swap * gate.entries * swap, gate.entries) <= kExactTol,
          "gate commutes with the site swap");

  const PureState state = state_from_operator(gate, square);
  require(square.bipartitions.size() == 2, "the square has two allowed bipartitions");
  const double target = std::log(4.0);
  for (const std::vector<int>& subset : square.bipartitions) {
    const double entropy = von_neumann_entropy(state, subset);
    require(std::abs(entropy - target) <= kExactTol,
            "bipartition {" + join_ints(subset) + "} entropy equals ln 4");
  }
}

// --- criterion 2: four equal Hadamard factors reproduce the kicked Ising gate --

void criterion_hadamard_square() {
  HadamardMatrix h;
  h.N = 2;
  h.entries = Eigen::MatrixXcd(2, 2);
  h.entries << Complex(1.0, 0.0), Complex(0.0, 1.0), Complex(0.0, 1.0), Complex(1.0, 0.0);
  require(is_complex_hadamard(h.entries, kExactTol), "[[1,i],[i,1]] is a complex Hadamard matrix");

  const OperatorMatrix built = hadamard_square(h, h, h, h);
  const OperatorMatrix gate = kicked_ising_gate();
  require(built.convention == gate.convention, "both matrices use the edge convention");

  // Align the single global phase on a maximal-modulus reference entry.
  int row = 0, col = 0;
  double best = 0.0;
  for (int r = 0; r < gate.entries.rows(); ++r)
    for (int c = 0; c < gate.entries.cols(); ++c)
      if (std::abs(gate.entries(r, c)) > best) {
        best = std::abs(gate.entries(r, c));
        row = r;
        col = c;
      }
  const Complex phase = built.entries(row, col) / gate.entries(row, col);
  require(std::abs(std::abs(phase) - 1.0) <= kExactTol, "alignment phase has unit modulus");
  require(max_abs_diff(built.entries, phase * gate.entries) <= kExactTol,
          "matrices agree entrywise after the global-phase alignment");
}

// --- criterion 3: determinant criterion vs direct entanglement checks ----------

void criterion_determinant() {
  struct Sweep {
    GeometryKind kind;
    int parameter_count;
  };
  const std::vector<Sweep> sweeps = {{GeometryKind::Square, 2},
                                     {GeometryKind::Hexagon, 3},
                                     {GeometryKind::Cube, 3},
                                     {GeometryKind::Octahedron, 2}};
  const std::vector<int> dims = {2, 3, 5};

  long long cases = 0;
  for (const Sweep& sweep : sweeps) {
    const Geometry geometry = build_geometry(sweep.kind);
    const std::vector<int> subset = canonical_half(geometry);
    for (int local_dim : dims) {
      std::vector<int> tuple(sweep.parameter_count, 0);
      while (true) {
        const IncidenceDeterminant det =
            reduced_incidence_determinant(geometry, tuple, local_dim);
        const int residue =
            static_cast<int>(((det.determinant % local_dim) + local_dim) % local_dim);
        require(det.residue == residue && det.maximal == (residue != 0),
                "determinant fields are consistent for parameters {" + join_ints(tuple) + "}");

        const PureState state = graph_state(symmetric_incidence(geometry, tuple), local_dim);
        const bool direct = maximal_entanglement_deviation(state, subset) <= kCheckTol;
        if (det.maximal != direct) {
          std::ostringstream out;
          out << geometry.name() << " N=" << local_dim << " parameters {"
              << join_ints(tuple) << "}: determinant says " << (det.maximal ? "maximal" : "zero")
              << " but the direct check disagrees";
          throw Failure(out.str());
        }
        ++cases;

        int pos = sweep.parameter_count - 1;
        while (pos >= 0 && tuple[pos] == local_dim - 1) tuple[pos--] = 0;
        if (pos < 0) break;
        ++tuple[pos];
      }
    }
  }
  require(cases == 2 * (4 + 9 + 25) + 2 * (8 + 27 + 125), "sweep covered every parameter tuple");

  // Anchors.
  const Geometry square = build_geometry(GeometryKind::Square);
  require(reduced_incidence_determinant(square, {1, 2}, 5).maximal,
          "square labels (1,2) are maximal at N=5");
  require(!reduced_incidence_determinant(square, {1, 2}, 3).maximal,
          "square labels (1,2) degenerate at N=3");

  const Geometry hexagon = build_geometry(GeometryKind::Hexagon);
  require(reduced_incidence_determinant(hexagon, {0, 1, 1}, 2).maximal,
          "hexagon labels (0,1,1) are maximal at N=2");
  const PureState hex_state = graph_state(symmetric_incidence(hexagon, {0, 1, 1}), 2);
  require(is_absolutely_maximally_entangled(hex_state, kCheckTol),
          "hexagon labels (0,1,1) give an absolutely maximally entangled six-qubit state");

  const Geometry octahedron = build_geometry(GeometryKind::Octahedron);
  require(reduced_incidence_determinant(octahedron, {1, 0}, 3).maximal,
          "octahedron labels (1,0) are maximal at N=3");
  require(reduced_incidence_determinant(octahedron, {1, 0}, 5).maximal,
          "octahedron labels (1,0) are maximal at N=5");
}

// --- criterion 4: classification counts, lists, and the octahedral-hexagonal map

// For each compact-notation entry, the index of the class containing its
// expansion.  Requires the entries and the classes to be in bijection.
std::vector<int> matched_class_indices(const std::vector<SolutionClass>& classes,
                                       const std::vector<std::string>& entries,
                                       const Geometry& geometry, int local_dim,
                                       const std::string& context) {
  require(classes.size() == entries.size(),
          context + ": expected " + std::to_string(entries.size()) + " classes, found " +
              std::to_string(classes.size()));
  std::vector<int> indices;
  indices.reserve(entries.size());
  for (const std::string& entry : entries) {
    const ClassicalSolution solution = expand_compact_notation(entry, geometry, local_dim);
    int found = -1;
    for (size_t i = 0; i < classes.size(); ++i) {
      for (const ClassicalSolution& member : classes[i].members) {
        if (member == solution) {
          require(found == -1 || found == static_cast<int>(i),
                  context + ": entry " + entry + " appears in two classes");
          found = static_cast<int>(i);
        }
      }
    }
    require(found >= 0, context + ": listed solution " + entry + " is not in any class");
    indices.push_back(found);
  }
  const std::set<int> distinct(indices.begin(), indices.end());
  require(distinct.size() == classes.size(),
          context + ": the listed solutions do not hit every class exactly once");
  return indices;
}

void criterion_classification() {
  const int jobs = 4;

  // Square: 1 / 2 / 10 classes for N = 2 / 3 / 4.
  const Geometry square = build_geometry(GeometryKind::Square);
  matched_class_indices(classify(square, 2, jobs), {"Identity"}, square, 2, "square N=2");
  matched_class_indices(classify(square, 3, jobs), {"Identity", "[1122]"}, square, 3,
                        "square N=3");
  const auto square4_start = std::chrono::steady_clock::now();
  const std::vector<SolutionClass> square4 = classify(square, 4, jobs);
  const double square4_seconds = seconds_since(square4_start);
  require(square4_seconds <= kBudgetClassifyOne, "square N=4 classification finished in time");
  matched_class_indices(square4,
                        {"Identity", "[1234]", "[1122]", "[1424]", "[1424],[2343]",
                         "[1424],[2343],[1122]", "[1424],[2343],[1213]", "[1424],[2233]",
                         "[1424],[3344]", "[1424],[3344],[1232]"},
                        square, 4, "square N=4");

  // Hexagon: 1 class for N = 2, 10 classes for N = 3.
  const Geometry hexagon = build_geometry(GeometryKind::Hexagon);
  matched_class_indices(classify(hexagon, 2, jobs), {"Identity"}, hexagon, 2, "hexagon N=2");
  const auto hexagon3_start = std::chrono::steady_clock::now();
  const std::vector<SolutionClass> hexagon3 = classify(hexagon, 3, jobs);
  const double hexagon3_seconds = seconds_since(hexagon3_start);
  require(hexagon3_seconds <= kBudgetClassifyOne, "hexagon N=3 classification finished in time");
  const std::vector<std::string> hexagon3_list = {
      "Identity",
      "[122 322]",
      "[122 322],[133 233]",
      "[122 322],[133 233],[211 311]",
      "[222 333],[232 323]",
      "[122 133],[123 132]",
      "[122 133],[232 323],[212 333],[113 223],[131 313]",
      "[111 232],[222 313],[333 121]",
      "[122 213],[232 323],[123 332],[132 231]",
      "[111 222],[121 323],[212 333]"};
  const std::vector<int> hexagon3_indices =
      matched_class_indices(hexagon3, hexagon3_list, hexagon, 3, "hexagon N=3");

  // Cube, N = 2: two classes of two solutions each, with the stated members.
  const Geometry cube = build_geometry(GeometryKind::Cube);
  const std::vector<SolutionClass> cube2 = classify(cube, 2, jobs);
  require(cube2.size() == 2, "cube N=2 has two classes");
  const auto members_match = [&](const SolutionClass& cls,
                                 const std::vector<std::string>& expected) {
    if (cls.members.size() != expected.size()) return false;
    std::vector<ClassicalSolution> wanted;
    for (const std::string& entry : expected)
      wanted.push_back(expand_compact_notation(entry, cube, 2));
    std::vector<bool> used(wanted.size(), false);
    for (const ClassicalSolution& member : cls.members) {
      bool matched = false;
      for (size_t i = 0; i < wanted.size(); ++i) {
        if (!used[i] && wanted[i] == member) {
          used[i] = matched = true;
          break;
        }
      }
      if (!matched) return false;
    }
    return true;
  };
  const std::vector<std::string> cube_identity_members = {
      "Identity", "[1112 2221],[1122 2211],[1212 2121]"};
  const std::vector<std::string> cube_other_members = {"[1112 2221]",
                                                       "[1122 2211],[1212 2121]"};
  const bool first_is_identity = members_match(cube2[0], cube_identity_members);
  require((first_is_identity && members_match(cube2[1], cube_other_members)) ||
              (members_match(cube2[0], cube_other_members) &&
               members_match(cube2[1], cube_identity_members)),
          "cube N=2 classes have the stated two-solution memberships");

  // Octahedron: 1 class for N = 2, 6 classes for N = 3, mapped into the
  // hexagonal classes one-to-one.
  const Geometry octahedron = build_geometry(GeometryKind::Octahedron);
  matched_class_indices(classify(octahedron, 2, jobs), {"Identity"}, octahedron, 2,
                        "octahedron N=2");
  const std::vector<SolutionClass> octahedron3 = classify(octahedron, 3, jobs);
  const std::vector<std::string> octahedron3_list = {"Identity",
                                                     "[222 333]",
                                                     "[331 221]",
                                                     "[331 332]",
                                                     "[331 332],[221 223]",
                                                     "[331 332],[221 223],[112 113]"};
  const std::vector<int> octahedron3_indices = matched_class_indices(
      octahedron3, octahedron3_list, octahedron, 3, "octahedron N=3");

  const std::vector<int> map = octahedral_hexagonal_map(3, jobs);
  require(map.size() == octahedron3.size(), "one hexagonal target per octahedral class");
  // Listed octahedral solutions 1..6 land in the listed hexagonal solutions
  // 1, 5, 6, 2, 3, 4 respectively.
  const std::vector<int> paired_hexagonal_entry = {1, 5, 6, 2, 3, 4};
  for (size_t i = 0; i < octahedron3_list.size(); ++i) {
    const int expected = hexagon3_indices[paired_hexagonal_entry[i] - 1];
    if (map[octahedron3_indices[i]] != expected) {
      std::ostringstream out;
      out << "octahedral list entry " << (i + 1) << " should map to hexagonal list entry "
          << paired_hexagonal_entry[i] << " (class index " << expected << ") but maps to "
          << map[octahedron3_indices[i]];
      throw Failure(out.str());
    }
  }
}

// --- criterion 5: compact-notation expansions produce exact configuration sets -

void check_expansion(const std::string& labels, GeometryKind kind, int local_dim,
                     const std::vector<std::string>& expected_configs) {
  const Geometry geometry = build_geometry(kind);
  const ClassicalSolution solution = expand_compact_notation(labels, geometry, local_dim);
  const std::vector<Configuration> expected = config_set(expected_configs);
  if (solution.support != expected) {
    std::ostringstream out;
    out << geometry.name() << " expansion of " << labels << " has "
        << solution.support.size() << " configurations, expected " << expected.size()
        << " (or the sets differ)";
    throw Failure(out.str());
  }

  const PureState state = solution_to_state(solution);
  const double amplitude = std::pow(static_cast<double>(local_dim), -geometry.sites / 4.0);
  require(std::abs(state.at(zero_based(expected.front())) - amplitude) <= kExactTol,
          labels + ": every supported amplitude equals N^(-K/4)");
  require(is_multidirectional_unitary(state, geometry).multidirectional,
          labels + ": the expanded state is multidirectional unitary");
  require(is_spatially_symmetric(state, geometry),
          labels + ": the expanded state is spatially symmetric");
}

void criterion_expansions() {
  check_expansion("[111 222],[121 323],[212 333]", GeometryKind::Hexagon, 3,
                  {"111222", "112221", "122211", "222111", "221112", "211122",
                   "121323", "213231", "132312", "323121", "231213", "312132",
                   "212333", "123332", "233321", "333212", "332123", "321233",
                   "113113", "131131", "311311", "313313", "133133", "331331",
                   "232232", "322322", "223223"});

  check_expansion("[1112 2221]", GeometryKind::Cube, 2,
                  {"11122221", "11212212", "12112122", "21111222", "22211112", "22121121",
                   "21221211", "12222111", "11111111", "22222222", "12121212", "21212121",
                   "11221122", "12211221", "22112211", "21122112"});

  check_expansion("[331 332],[221 223],[112 113]", GeometryKind::Octahedron, 3,
                  {"331332", "332331", "313323", "323313", "133233", "233133",
                   "221223", "223221", "212232", "232212", "122322", "322122",
                   "112113", "113112", "121131", "131121", "211311", "311211",
                   "111111", "222222", "333333", "123123", "231231", "312312",
                   "321321", "213213", "132132"});
}

// --- criterion 6: weak spatial invariance examples ------------------------------

Eigen::MatrixXcd monomial_factor(int local_dim, const std::vector<int>& value_map,
                                 const std::vector<int>& exponents) {
  Eigen::MatrixXcd factor = Eigen::MatrixXcd::Zero(local_dim, local_dim);
  const double step = 2.0 * M_PI / local_dim;
  for (int v = 0; v < local_dim; ++v) {
    const int image = value_map[v];
    factor(image, v) = std::polar(1.0, step * exponents[image]);
  }
  return factor;
}

void criterion_weak_invariance() {
  const Geometry square = build_geometry(GeometryKind::Square);

  // Singlet pairs on the two diagonals of the square.
  PureState singlet = PureState::zero(2, 4);
  singlet.at({0, 0, 1, 1}) = Complex(0.5, 0.0);
  singlet.at({0, 1, 1, 0}) = Complex(-0.5, 0.0);
  singlet.at({1, 0, 0, 1}) = Complex(-0.5, 0.0);
  singlet.at({1, 1, 0, 0}) = Complex(0.5, 0.0);
  require(std::abs(singlet.norm() - 1.0) <= kExactTol, "singlet pair state is normalized");

  for (const std::vector<int>& subset : square.bipartitions)
    require(is_maximally_entangled(singlet, subset, kCheckTol),
            "singlet pair state is maximally entangled on bipartition {" + join_ints(subset) +
                "}");

  const SitePermutation reflection{{1, 0, 3, 2}};
  const PureState reflected = apply_site_permutation(singlet, reflection);
  require((reflected.amplitudes - singlet.amplitudes).cwiseAbs().maxCoeff() <= kExactTol,
          "edge reflection leaves the singlet pair state invariant");

  const SitePermutation rotation{{1, 2, 3, 0}};
  const PureState rotated = apply_site_permutation(singlet, rotation);
  require((rotated.amplitudes + singlet.amplitudes).cwiseAbs().maxCoeff() <= kExactTol,
          "a quarter rotation negates the singlet pair state");

  // Four-party three-level state |a, b, a+b, a-b> summed over a, b (mod 3).
  PureState ame = PureState::zero(3, 4);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      ame.at({a, b, (a + b) % 3, ((a - b) % 3 + 3) % 3}) = Complex(1.0 / 3.0, 0.0);
  require(std::abs(ame.norm() - 1.0) <= kExactTol, "three-level state is normalized");
  require(is_absolutely_maximally_entangled(ame, kCheckTol),
          "three-level state is absolutely maximally entangled");

  // Swapping the first two sites is undone by negating the values on the
  // last site: check the explicit witness, then the search.
  const SitePermutation swap_first_two{{1, 0, 2, 3}};
  const PureState swapped = apply_site_permutation(ame, swap_first_two);
  const std::vector<int> negation = {0, 2, 1};
  const std::vector<int> no_phases = {0, 0, 0};
  const Eigen::MatrixXcd identity3 = Eigen::MatrixXcd::Identity(3, 3);
  const PureState undone = apply_local_unitaries(
      ame, {identity3, identity3, identity3, monomial_factor(3, negation, no_phases)});
  require((swapped.amplitudes - undone.amplitudes).cwiseAbs().maxCoeff() <= kExactTol,
          "value negation on the last site undoes the swap of the first two sites");

  const std::optional<InvarianceWitness> witness =
      invariance_witness(ame, swap_first_two, WitnessSearch::Monomial);
  require(witness.has_value(), "the monomial search finds a witness for the site swap");
  std::vector<Eigen::MatrixXcd> factors;
  for (int j = 0; j < 4; ++j)
    factors.push_back(monomial_factor(3, witness->value_maps[j], witness->phase_exponents[j]));
  PureState rebuilt = apply_local_unitaries(ame, factors);
  rebuilt.amplitudes *= witness->phase;
  require((swapped.amplitudes - rebuilt.amplitudes).cwiseAbs().maxCoeff() <= kExactTol,
          "the found witness reproduces the swapped state");

  require(weak_spatial_invariance(ame, square, WitnessSearch::Monomial).invariant,
          "every square symmetry generator admits a monomial witness");
}

// --- criterion 7: randomized equivalences and enumerated solutions --------------

// For every allowed bipartition: the partially transposed canonical matrix is
// unitary exactly when that bipartition is maximally entangled.
void check_transpose_equivalence(const Geometry& geometry, const OperatorMatrix& op,
                                 const PureState& state) {
  for (const std::vector<int>& subset : geometry.bipartitions) {
    const std::vector<int> positions = transposed_positions(geometry, subset);
    const double transpose_deviation =
        unitarity_deviation(partial_transpose(op, positions).entries);
    const double entanglement_deviation = maximal_entanglement_deviation(state, subset);
    if ((transpose_deviation <= kCheckTol) != (entanglement_deviation <= kCheckTol)) {
      std::ostringstream out;
      out << geometry.name() << " bipartition {" << join_ints(subset)
          << "}: transpose unitarity deviation " << transpose_deviation
          << " vs entanglement deviation " << entanglement_deviation;
      throw Failure(out.str());
    }
  }
}

void criterion_random_suite() {
  std::mt19937_64 rng(20260819ULL);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * M_PI);
  const std::vector<GeometryKind> kinds = {GeometryKind::Square, GeometryKind::Hexagon,
                                           GeometryKind::Cube, GeometryKind::Octahedron};
  for (GeometryKind kind : kinds) {
    const Geometry geometry = build_geometry(kind);
    const std::vector<int> canonical = canonical_half(geometry);

    // Random diagonal-phase gates: always multidirectional, and the transpose
    // equivalence holds with both sides true on every bipartition.
    for (int i = 0; i < 100; ++i) {
      PhaseTable table = PhaseTable::zeros(2, geometry.half());
      for (double& p : table.phases) p = phase(rng);
      const OperatorMatrix gate = diagonal_gate(geometry, table);
      const PureState state = state_from_operator(gate, geometry);
      require(is_multidirectional_unitary(state, geometry).multidirectional,
              geometry.name() +
                  ": a random diagonal-phase gate is multidirectional unitary");
      check_transpose_equivalence(geometry, gate, state);
    }

    // Random unitary gates: the canonical bipartition is maximal by
    // construction; the equivalence must hold on every bipartition.
    for (int i = 0; i < 100; ++i) {
      OperatorMatrix gate;
      gate.N = 2;
      gate.half_K = geometry.half();
      gate.convention = Convention::Diagonal;
      gate.entries = haar_random_unitary(1 << geometry.half(), rng);
      const PureState state = state_from_operator(gate, geometry);
      require(is_maximally_entangled(state, canonical, kCheckTol),
              geometry.name() +
                  ": a random unitary gate fills the canonical bipartition");
      check_transpose_equivalence(geometry, gate, state);
    }

    // Random pure states (generically non-unitary in every direction).
    for (int i = 0; i < 20; ++i) {
      const PureState state = random_state(2, geometry.sites, rng);
      const OperatorMatrix op =
          operator_from_state(state, geometry, canonical, Convention::Diagonal);
      check_transpose_equivalence(geometry, op, state);
    }

    // Every enumerated deterministic solution verifies.
    const std::vector<ClassicalSolution> solutions = enumerate_solutions(geometry, 2);
    require(!solutions.empty(),
            geometry.name() + ": enumeration finds at least one solution");
    for (const ClassicalSolution& solution : solutions) {
      const PureState state = solution_to_state(solution);
      require(is_multidirectional_unitary(state, geometry).multidirectional,
              solution.compact_notation() + " is multidirectional unitary");
      require(is_spatially_symmetric(state, geometry),
              solution.compact_notation() + " is spatially symmetric");
    }
  }
}

// --- criterion 8: cubic Hadamard gate -------------------------------------------

void criterion_cubic_hadamard() {
  const Geometry cube = build_geometry(GeometryKind::Cube);
  const OperatorMatrix gate = hadamard_cube(fourier_hadamard(2));
  const PureState state = state_from_operator(gate, cube);

  require(cube.bipartitions.size() == 3, "the cube has three allowed bipartitions");
  const MultidirectionalReport report = is_multidirectional_unitary(state, cube);
  require(report.checks.size() == 3, "one check per cubic bipartition");
  for (const BipartitionCheck& check : report.checks)
    require(check.maximal,
            "bipartition {" + join_ints(check.subset) + "} is maximally entangled");
  require(report.multidirectional, "the gate is multidirectional unitary");
  require(is_spatially_symmetric(state, cube), "the state is spatially symmetric");

  // All entries share the modulus 1/4, so 4 times the matrix has unit-modulus
  // entries and is a 16 x 16 complex Hadamard matrix.
  for (int r = 0; r < gate.entries.rows(); ++r)
    for (int c = 0; c < gate.entries.cols(); ++c)
      require(std::abs(std::abs(gate.entries(r, c)) - 0.25) <= kExactTol,
              "every entry has modulus 1/4");
  require(gate.entries.rows() == 16 && gate.entries.cols() == 16, "the matrix is 16 x 16");
  require(is_complex_hadamard(4.0 * gate.entries, kExactTol),
          "4 times the matrix is a complex Hadamard matrix");
}

// --- harness --------------------------------------------------------------------

struct Criterion {
  int number;
  const char* label;
  std::function<void()> run;
  double budget_seconds;  // 0 = no pinned budget
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "kicked Ising gate: unitary, dual unitary, self-dual, ln 4 entropies",
       criterion_kicked_ising, kBudgetKickedIsing},
      {2, "four equal Hadamard factors reproduce the kicked Ising gate",
       criterion_hadamard_square, 0.0},
      {3, "incidence determinant criterion agrees with direct entanglement checks",
       criterion_determinant, kBudgetDeterminant},
      {4, "classification counts, representative lists, octahedral-hexagonal map",
       criterion_classification, 0.0},
      {5, "compact-notation expansions produce the exact configuration sets",
       criterion_expansions, 0.0},
      {6, "weak spatial invariance: singlet pairs and the three-level four-party state",
       criterion_weak_invariance, 0.0},
      {7, "randomized transpose-unitarity equivalence and enumerated solutions",
       criterion_random_suite, kBudgetRandomSuite},
      {8, "cubic Hadamard gate: bipartitions, symmetry, rescaled Hadamard matrix",
       criterion_cubic_hadamard, 0.0},
  };

  int failures = 0;
  for (const Criterion& criterion : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string reason;
    try {
      criterion.run();
    } catch (const std::exception& error) {
      reason = error.what();
    }
    const double elapsed = seconds_since(start);
    if (reason.empty() && criterion.budget_seconds > 0.0 &&
        elapsed > criterion.budget_seconds) {
      std::ostringstream out;
      out << "exceeded the " << criterion.budget_seconds << " s budget";
      reason = out.str();
    }
    std::printf("criterion %d: %s  (%.2f s)  %s\n", criterion.number,
                reason.empty() ? "PASS" : "FAIL", elapsed, criterion.label);
    if (!reason.empty()) {
      std::printf("    reason: %s\n", reason.c_str());
      ++failures;
    }
  }
  if (failures == 0) {
    std::printf("all %zu criteria passed\n", criteria.size());
  } else {
    std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  }
  return failures == 0 ? 0 : 1;
}
