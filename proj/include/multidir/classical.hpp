#pragma once

#include <optional>
#include <string>
#include <vector>

#include "multidir/geometry.hpp"
#include "multidir/state.hpp"

namespace multidir {

// Deterministic (permutation-matrix) solutions: orbits of basis configurations
// under the arrangement's symmetry group, overlap/completeness tests on the
// input half, completion with diagonally identical orbits, exhaustive
// enumeration as an exact cover of the input tuples, and classification under
// per-site or global value relabelings. Everything in this header is exact
// integer/set arithmetic; the only floating-point output is the uniform state
// built by solution_to_state.

// --- configurations ----------------------------------------------------------

// Assignment of a value in {1..N} to every site. Sites 0..K/2-1 carry the
// input half; the output paired with input site j sits on its antipode
// j + K/2. Comparison is lexicographic by site.
struct Configuration {
  std::vector<int> values;  // values[j] = value at site j (1-based values)

  int site_count() const { return static_cast<int>(values.size()); }
  int half() const { return site_count() / 2; }
  std::vector<int> input_half() const;
  std::vector<int> output_half() const;
  // True when every output repeats the input on its diagonal (b_j == a_j).
  bool diagonally_identical() const;

  auto operator<=>(const Configuration&) const = default;
};

// Bracket notation for one configuration: "[1424]" for four sites, halves of
// three or more sites separated by one space ("[122 322]", "[1112 2221]").
// Values above 9 are comma-separated within each half.
std::string render_compact_label(const Configuration& config);

// Inverse of render_compact_label. Validates the site count against the
// geometry and the value range against local_dim; throws std::invalid_argument
// on malformed input.
Configuration parse_compact_label(const std::string& label, const Geometry& geometry,
                                  int local_dim);

// --- orbits -------------------------------------------------------------------

// All distinct images of one configuration under the symmetry group, each
// listed once, sorted ascending.
struct Orbit {
  std::vector<Configuration> members;  // sorted, duplicate-free
  std::string label;                   // compact label of the least member
  bool diagonally_identical = false;   // the flag is uniform across members

  int size() const { return static_cast<int>(members.size()); }
};

// Orbit of `config` under the geometry's full symmetry group. Requires an
// arrangement with diagonals (every kind except the tetrahedron).
Orbit orbit_of(const Configuration& config, const Geometry& geometry);

// True iff no two members share the same input-half tuple. Solutions can only
// contain orbits with this property; diagonally identical orbits always have it.
bool is_non_overlapping(const Orbit& orbit);

// True iff the input-tuple sets of the two orbits are disjoint.
bool mutually_non_overlapping(const Orbit& first, const Orbit& second);

// True iff every input tuple in {1..N}^(K/2) occurs in some member of some
// orbit. Callers pass orbits that are pairwise mutually non-overlapping.
bool is_complete(const std::vector<Orbit>& orbits, const Geometry& geometry, int local_dim);

// --- solutions ----------------------------------------------------------------

// A spatially symmetric deterministic solution: a union of orbits whose member
// configurations realize every input tuple exactly once and every output tuple
// exactly once (the permutation-operator property in all directions).
struct ClassicalSolution {
  GeometryKind kind = GeometryKind::Square;
  int sites = 0;  // K
  int N = 0;      // local dimension
  // Orbits that are not diagonally identical (sorted by label) followed by the
  // diagonally identical ones (sorted by label).
  std::vector<Orbit> orbits;
  std::vector<Configuration> support;  // sorted union of all members

  Geometry geometry() const { return build_geometry(kind, sites); }
  int non_diagonal_orbit_count() const;
  // Comma-joined labels of the orbits that are not diagonally identical
  // ("[1424],[3344]"), or "Identity" when every orbit is diagonally identical.
  std::string compact_notation() const;

  bool operator==(const ClassicalSolution& other) const {
    return kind == other.kind && sites == other.sites && N == other.N &&
           support == other.support;
  }
};

// Validates an orbit list (each non-overlapping, pairwise mutually
// non-overlapping, both bijections satisfied) and assembles the solution.
// Throws std::invalid_argument on any violation.
ClassicalSolution make_classical_solution(std::vector<Orbit> orbits, const Geometry& geometry,
                                          int local_dim);

// Walks the input tuples in ascending order and adds the diagonally identical
// orbit of every tuple not yet covered by the given orbits. Throws
// std::invalid_argument if the result violates either bijection.
ClassicalSolution complete_with_diagonal_orbits(const std::vector<Orbit>& orbits,
                                                const Geometry& geometry, int local_dim);

// Expands bracket labels (the orbits that are not diagonally identical) into a
// full solution: orbit_of each label, then complete_with_diagonal_orbits.
// Throws std::invalid_argument on parse failure or overlapping labels.
ClassicalSolution expand_compact_notation(const std::vector<std::string>& labels,
                                          const Geometry& geometry, int local_dim);
// Convenience overload: splits "[1424],[3344]" on the commas between brackets.
// An empty string or "Identity" denotes the empty label list.
ClassicalSolution expand_compact_notation(const std::string& labels, const Geometry& geometry,
                                          int local_dim);

// Uniform superposition of the support with amplitude N^(-K/4) per member;
// normalized, multi-directional unitary, and exactly spatially symmetric.
PureState solution_to_state(const ClassicalSolution& solution);

// Re-derives the orbit decomposition of the same configuration set in another
// arrangement with the same site count (e.g. reading an octahedral solution as
// a hexagonal one). Throws std::invalid_argument if the support is not closed
// under the target group or violates a bijection there.
ClassicalSolution solution_in_geometry(const ClassicalSolution& solution,
                                       const Geometry& target);

// All spatially symmetric deterministic solutions, found as exact covers of
// the input-tuple set by non-overlapping orbits (chosen orbits pairwise
// disjoint on inputs, every tuple covered) and filtered by the output-side
// bijection. Deterministic canonical order: fewest non-diagonal orbits first,
// then lexicographic compact notation. `jobs` > 1 splits the search across
// threads without affecting the result. Guard: N^(K/2) must not exceed 4096.
std::vector<ClassicalSolution> enumerate_solutions(const Geometry& geometry, int local_dim,
                                                   int jobs = 1);

// --- equivalence and classification --------------------------------------------

// Searches for per-site value permutations (pi_0, ..., pi_{K-1}) mapping the
// support of `from` exactly onto the support of `to`. Returned witness:
// site_maps[j][v-1] is the image of value v at site j (1-based). Backtracks
// site by site, pruning with per-site value-frequency profiles and prefix
// multisets of the partially mapped support.
std::optional<std::vector<std::vector<int>>> strong_equivalence(const ClassicalSolution& from,
                                                                const ClassicalSolution& to);

// Searches for one value permutation V applied at every site; map[v-1] is the
// image of value v. Any witness here also yields a strong-equivalence witness
// (the same permutation at every site).
std::optional<std::vector<int>> weak_equivalence(const ClassicalSolution& from,
                                                 const ClassicalSolution& to);

// One equivalence class under per-site relabelings.
struct SolutionClass {
  // Member with the fewest non-diagonal orbits (ties: lexicographically least
  // compact notation); the member "closest to the identity".
  ClassicalSolution representative;
  std::vector<ClassicalSolution> members;  // canonical order
};

// Groups every enumerated solution into per-site-relabeling classes. Classes
// are sorted by their representative's canonical key; the partition and the
// ordering are independent of `jobs`.
std::vector<SolutionClass> classify(const Geometry& geometry, int local_dim, int jobs = 1);

// For each octahedral class (by classify order), the index of the hexagonal
// class that contains its solutions when the six sites are read as a hexagon.
// Throws std::runtime_error if a class fails to match exactly one target.
std::vector<int> octahedral_hexagonal_map(int local_dim, int jobs = 1);

}  // namespace multidir
