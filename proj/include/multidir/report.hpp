#pragma once
// Verification reports: per-bipartition maximal-entanglement verdicts with
// deviations and entropies, the spatial-symmetry verdict, the diagonal
// entanglement value, and an optional absolute-maximal-entanglement verdict,
// rendered either as an aligned text table or as byte-stable JSON.

#include <string>
#include <vector>

#include <multidir/geometry.hpp>
#include <multidir/state.hpp>

namespace multidir {

struct BipartitionRow {
  std::vector<int> sites;  // 0-based ascending
  double deviation = 0.0;  // max-norm distance of the reduced density matrix from I / N^{K/2}
  bool maximal = false;    // deviation <= tolerance
  double entropy = 0.0;    // von Neumann entropy in nats
};

struct VerificationReport {
  std::string geometry;
  int N = 0;
  int K = 0;
  double tolerance = kMatrixTol;
  double norm = 0.0;

  std::vector<BipartitionRow> bipartitions;  // one row per allowed bipartition
  bool multidirectional = false;             // every row maximal

  double symmetry_deviation = 0.0;
  bool spatially_symmetric = false;

  bool has_diagonal_entanglement = false;  // false for arrangements without diagonals
  double diagonal_entanglement = 0.0;      // largest entropy of a single diagonal pair

  bool ame_checked = false;  // true when the absolute check was requested
  bool ame = false;          // every subset of at most K/2 sites maximally entangled

  // Every bipartition verdict holds, and the absolute check holds if requested.
  bool all_pass() const;
};

// Runs all checks against the given tolerance.  The spatial-symmetry and
// diagonal-entanglement values are informational; only the bipartition
// verdicts (and the optional absolute check) enter all_pass().
VerificationReport verify_state(const PureState& state, const Geometry& geometry,
                                double tolerance = kMatrixTol, bool check_ame = false);

std::string report_to_text(const VerificationReport& report);
std::string report_to_json(const VerificationReport& report);

}  // namespace multidir
