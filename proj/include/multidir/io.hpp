#pragma once
// File formats: JSON serialization of states, operators, incidence graphs and
// phase tables, plus plain-text solution lists.  Serialization is byte-stable:
// object keys are emitted in sorted order, amplitude/entry lists in ascending
// configuration order, and floating-point numbers use the shortest decimal
// representation that parses back to the identical double.

#include <stdexcept>
#include <string>
#include <vector>

#include <multidir/classical.hpp>
#include <multidir/constructions.hpp>
#include <multidir/geometry.hpp>
#include <multidir/state.hpp>

namespace multidir {

// Raised for unreadable files, malformed JSON, missing or ill-typed fields,
// and values inconsistent with the declared geometry or local dimension.
class FileFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// --- states -------------------------------------------------------------------
// {"K": k, "N": n, "amplitudes": [{"config": [..], "im": y, "re": x}, ..],
//  "geometry": "square"} with 1-based site values, listing only nonzero
// amplitudes in ascending configuration order.
std::string state_to_json(const PureState& state, const Geometry& geometry);

struct LoadedState {
  PureState state;
  Geometry geometry;
};
LoadedState state_from_json(const std::string& text);

// --- operators ------------------------------------------------------------------
// {"K": k, "N": n, "convention": "diagonal" | "edge", "entries": [{"col": [..],
//  "im": y, "re": x, "row": [..]}, ..], "geometry": "square"} with 1-based
// values, listing only nonzero entries sorted by row tuple, then column tuple.
std::string operator_to_json(const OperatorMatrix& op, const Geometry& geometry);

struct LoadedOperator {
  OperatorMatrix op;
  Geometry geometry;
};
LoadedOperator operator_from_json(const std::string& text);

// Reads a state or an operator file (detected by the "amplitudes" vs the
// "entries" key); operator files are converted to the corresponding state.
LoadedState load_state_file(const std::string& path);

// --- construction inputs ----------------------------------------------------------
// {"K": k, "labels": [[..], ..]} — symmetric integer matrix, zero diagonal.
std::string incidence_to_json(const IncidenceGraph& incidence);
IncidenceGraph incidence_from_json(const std::string& text);

// {"N": n, "arity": a, "phases": [..]} — N^arity phases in ascending tuple order.
std::string phase_table_to_json(const PhaseTable& table);
PhaseTable phase_table_from_json(const std::string& text);

// --- solution lists ----------------------------------------------------------------
// One solution per line in compact bracket notation.  Reading skips blank
// lines and lines starting with '#'.
std::string solutions_to_text(const std::vector<ClassicalSolution>& solutions);
std::vector<ClassicalSolution> solutions_from_text(const std::string& text,
                                                   const Geometry& geometry, int local_dim);

// --- raw file helpers ------------------------------------------------------------
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace multidir
