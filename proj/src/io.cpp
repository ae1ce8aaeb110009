#include "multidir/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace multidir {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw FileFormatError(std::string("malformed JSON: ") + e.what());
  }
}

const json& require_field(const json& obj, const char* key) {
  if (!obj.is_object()) throw FileFormatError("expected a JSON object");
  auto it = obj.find(key);
  if (it == obj.end()) throw FileFormatError(std::string("missing field \"") + key + "\"");
  return *it;
}

int require_int(const json& obj, const char* key) {
  const json& value = require_field(obj, key);
  if (!value.is_number_integer()) {
    throw FileFormatError(std::string("field \"") + key + "\" must be an integer");
  }
  return value.get<int>();
}

double require_number(const json& obj, const char* key) {
  const json& value = require_field(obj, key);
  if (!value.is_number()) {
    throw FileFormatError(std::string("field \"") + key + "\" must be a number");
  }
  return value.get<double>();
}

std::string require_string(const json& obj, const char* key) {
  const json& value = require_field(obj, key);
  if (!value.is_string()) {
    throw FileFormatError(std::string("field \"") + key + "\" must be a string");
  }
  return value.get<std::string>();
}

const json& require_array(const json& obj, const char* key) {
  const json& value = require_field(obj, key);
  if (!value.is_array()) {
    throw FileFormatError(std::string("field \"") + key + "\" must be an array");
  }
  return value;
}

Geometry geometry_from_field(const json& obj) {
  const std::string name = require_string(obj, "geometry");
  try {
    return build_geometry(name);
  } catch (const std::exception&) {
    throw FileFormatError("unknown geometry \"" + name + "\"");
  }
}

// Reads a 1-based value tuple and returns it 0-based.
std::vector<int> parse_value_tuple(const json& arr, int expected_size, int local_dim,
                                   const char* what) {
  if (!arr.is_array() || static_cast<int>(arr.size()) != expected_size) {
    throw FileFormatError(std::string(what) + " must be an array of " +
                          std::to_string(expected_size) + " site values");
  }
  std::vector<int> values;
  values.reserve(expected_size);
  for (const json& entry : arr) {
    if (!entry.is_number_integer()) {
      throw FileFormatError(std::string(what) + " entries must be integers");
    }
    const int v = entry.get<int>();
    if (v < 1 || v > local_dim) {
      throw FileFormatError(std::string(what) + " value " + std::to_string(v) +
                            " outside 1.." + std::to_string(local_dim));
    }
    values.push_back(v - 1);
  }
  return values;
}

json value_tuple_to_json(const std::vector<int>& zero_based) {
  json arr = json::array();
  for (int v : zero_based) arr.push_back(v + 1);
  return arr;
}

std::string dump_document(const json& doc) { return doc.dump(2) + "\n"; }

int checked_site_count(const json& doc, const Geometry& geometry) {
  const int sites = require_int(doc, "K");
  if (sites != geometry.sites) {
    throw FileFormatError("field \"K\" = " + std::to_string(sites) + " does not match the " +
                          geometry.name() + " arrangement (" + std::to_string(geometry.sites) +
                          " sites)");
  }
  return sites;
}

int checked_local_dim(const json& doc) {
  const int local_dim = require_int(doc, "N");
  if (local_dim < 1) throw FileFormatError("field \"N\" must be a positive integer");
  return local_dim;
}

}  // namespace

// --- states -------------------------------------------------------------------

std::string state_to_json(const PureState& state, const Geometry& geometry) {
  if (state.K != geometry.sites) {
    throw std::invalid_argument("state does not live on the given arrangement");
  }
  if (state.dimension() != pow_ll(state.N, state.K)) {
    throw std::invalid_argument("amplitude vector has the wrong length");
  }
  json amplitudes = json::array();
  for (long long index = 0; index < state.dimension(); ++index) {
    const Complex amp = state.amplitudes(index);
    if (amp == Complex(0.0, 0.0)) continue;
    amplitudes.push_back(json{{"config", value_tuple_to_json(unpack_config(index, state.N, state.K))},
                              {"im", amp.imag()},
                              {"re", amp.real()}});
  }
  const json doc{
      {"K", state.K}, {"N", state.N}, {"amplitudes", amplitudes}, {"geometry", geometry.name()}};
  return dump_document(doc);
}

LoadedState state_from_json(const std::string& text) {
  const json doc = parse_json(text);
  Geometry geometry = geometry_from_field(doc);
  const int local_dim = checked_local_dim(doc);
  const int sites = checked_site_count(doc, geometry);

  PureState state = PureState::zero(local_dim, sites);
  std::set<long long> seen;
  for (const json& entry : require_array(doc, "amplitudes")) {
    const std::vector<int> values =
        parse_value_tuple(require_field(entry, "config"), sites, local_dim, "\"config\"");
    const long long index = pack_config(values, local_dim);
    if (!seen.insert(index).second) {
      throw FileFormatError("duplicate configuration in \"amplitudes\"");
    }
    state.amplitudes(index) = Complex(require_number(entry, "re"), require_number(entry, "im"));
  }
  return LoadedState{std::move(state), std::move(geometry)};
}

// --- operators ------------------------------------------------------------------

std::string operator_to_json(const OperatorMatrix& op, const Geometry& geometry) {
  if (2 * op.half_K != geometry.sites) {
    throw std::invalid_argument("operator does not act on half of the arrangement");
  }
  const long long dim = pow_ll(op.N, op.half_K);
  if (op.entries.rows() != dim || op.entries.cols() != dim) {
    throw std::invalid_argument("operator matrix has the wrong size");
  }
  json entries = json::array();
  for (long long row = 0; row < dim; ++row) {
    for (long long col = 0; col < dim; ++col) {
      const Complex value = op.entries(row, col);
      if (value == Complex(0.0, 0.0)) continue;
      entries.push_back(json{{"col", value_tuple_to_json(unpack_config(col, op.N, op.half_K))},
                             {"im", value.imag()},
                             {"re", value.real()},
                             {"row", value_tuple_to_json(unpack_config(row, op.N, op.half_K))}});
    }
  }
  const json doc{{"K", 2 * op.half_K},
                 {"N", op.N},
                 {"convention", op.convention == Convention::Diagonal ? "diagonal" : "edge"},
                 {"entries", entries},
                 {"geometry", geometry.name()}};
  return dump_document(doc);
}

LoadedOperator operator_from_json(const std::string& text) {
  const json doc = parse_json(text);
  Geometry geometry = geometry_from_field(doc);
  const int local_dim = checked_local_dim(doc);
  const int sites = checked_site_count(doc, geometry);

  const std::string convention = require_string(doc, "convention");
  OperatorMatrix op;
  op.N = local_dim;
  op.half_K = sites / 2;
  if (convention == "diagonal") {
    op.convention = Convention::Diagonal;
  } else if (convention == "edge") {
    op.convention = Convention::Edge;
    if (geometry.kind != GeometryKind::Square && geometry.kind != GeometryKind::Hexagon &&
        geometry.kind != GeometryKind::Cube) {
      throw FileFormatError("the edge convention is only defined for the square, hexagon and cube");
    }
  } else {
    throw FileFormatError("field \"convention\" must be \"diagonal\" or \"edge\"");
  }

  const long long dim = pow_ll(local_dim, op.half_K);
  op.entries = Eigen::MatrixXcd::Zero(dim, dim);
  std::set<std::pair<long long, long long>> seen;
  for (const json& entry : require_array(doc, "entries")) {
    const std::vector<int> row =
        parse_value_tuple(require_field(entry, "row"), op.half_K, local_dim, "\"row\"");
    const std::vector<int> col =
        parse_value_tuple(require_field(entry, "col"), op.half_K, local_dim, "\"col\"");
    const auto key = std::make_pair(pack_config(row, local_dim), pack_config(col, local_dim));
    if (!seen.insert(key).second) throw FileFormatError("duplicate (row, col) pair in \"entries\"");
    op.entries(key.first, key.second) =
        Complex(require_number(entry, "re"), require_number(entry, "im"));
  }
  return LoadedOperator{std::move(op), std::move(geometry)};
}

LoadedState load_state_file(const std::string& path) {
  const std::string text = read_text_file(path);
  const json doc = parse_json(text);
  if (!doc.is_object()) throw FileFormatError("expected a JSON object");
  if (doc.contains("amplitudes")) return state_from_json(text);
  if (doc.contains("entries")) {
    LoadedOperator loaded = operator_from_json(text);
    try {
      PureState state = state_from_operator(loaded.op, loaded.geometry);
      return LoadedState{std::move(state), std::move(loaded.geometry)};
    } catch (const std::invalid_argument& e) {
      throw FileFormatError(std::string("cannot interpret the operator as a state: ") + e.what());
    }
  }
  throw FileFormatError("expected an \"amplitudes\" (state) or \"entries\" (operator) field");
}

// --- construction inputs ----------------------------------------------------------

std::string incidence_to_json(const IncidenceGraph& incidence) {
  json labels = json::array();
  for (const auto& row : incidence.labels) {
    if (static_cast<int>(row.size()) != incidence.K) {
      throw std::invalid_argument("incidence label matrix is not square");
    }
    labels.push_back(json(row));
  }
  if (static_cast<int>(incidence.labels.size()) != incidence.K) {
    throw std::invalid_argument("incidence label matrix is not square");
  }
  const json doc{{"K", incidence.K}, {"labels", labels}};
  return dump_document(doc);
}

IncidenceGraph incidence_from_json(const std::string& text) {
  const json doc = parse_json(text);
  const int sites = require_int(doc, "K");
  if (sites < 2) throw FileFormatError("field \"K\" must be at least 2");
  const json& labels = require_array(doc, "labels");
  if (static_cast<int>(labels.size()) != sites) {
    throw FileFormatError("field \"labels\" must have K rows");
  }
  IncidenceGraph incidence;
  incidence.K = sites;
  incidence.labels.assign(sites, std::vector<int>(sites, 0));
  for (int j = 0; j < sites; ++j) {
    const json& row = labels[j];
    if (!row.is_array() || static_cast<int>(row.size()) != sites) {
      throw FileFormatError("every \"labels\" row must have K integer entries");
    }
    for (int k = 0; k < sites; ++k) {
      if (!row[k].is_number_integer()) {
        throw FileFormatError("every \"labels\" row must have K integer entries");
      }
      incidence.labels[j][k] = row[k].get<int>();
    }
  }
  for (int j = 0; j < sites; ++j) {
    if (incidence.labels[j][j] != 0) throw FileFormatError("\"labels\" diagonal must be zero");
    for (int k = 0; k < sites; ++k) {
      if (incidence.labels[j][k] != incidence.labels[k][j]) {
        throw FileFormatError("\"labels\" must be a symmetric matrix");
      }
    }
  }
  return incidence;
}

std::string phase_table_to_json(const PhaseTable& table) {
  if (static_cast<long long>(table.phases.size()) != pow_ll(table.N, table.arity)) {
    throw std::invalid_argument("phase table has the wrong length");
  }
  const json doc{{"N", table.N}, {"arity", table.arity}, {"phases", json(table.phases)}};
  return dump_document(doc);
}

PhaseTable phase_table_from_json(const std::string& text) {
  const json doc = parse_json(text);
  PhaseTable table;
  table.N = checked_local_dim(doc);
  table.arity = require_int(doc, "arity");
  if (table.arity < 1) throw FileFormatError("field \"arity\" must be a positive integer");
  const json& phases = require_array(doc, "phases");
  const long long expected = pow_ll(table.N, table.arity);
  if (static_cast<long long>(phases.size()) != expected) {
    throw FileFormatError("field \"phases\" must list N^arity = " + std::to_string(expected) +
                          " values");
  }
  table.phases.reserve(phases.size());
  for (const json& value : phases) {
    if (!value.is_number()) throw FileFormatError("\"phases\" entries must be numbers");
    table.phases.push_back(value.get<double>());
  }
  return table;
}

// --- solution lists ----------------------------------------------------------------

std::string solutions_to_text(const std::vector<ClassicalSolution>& solutions) {
  std::string out;
  for (const ClassicalSolution& solution : solutions) {
    out += solution.compact_notation();
    out += '\n';
  }
  return out;
}

std::vector<ClassicalSolution> solutions_from_text(const std::string& text,
                                                   const Geometry& geometry, int local_dim) {
  std::vector<ClassicalSolution> solutions;
  std::istringstream stream(text);
  std::string line;
  int line_number = 0;
  while (std::getline(stream, line)) {
    ++line_number;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
      line.pop_back();
    }
    std::size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos || line[start] == '#') continue;
    try {
      solutions.push_back(expand_compact_notation(line.substr(start), geometry, local_dim));
    } catch (const std::invalid_argument& e) {
      throw FileFormatError("line " + std::to_string(line_number) + ": " + e.what());
    }
  }
  return solutions;
}

// --- raw file helpers ------------------------------------------------------------

std::string read_text_file(const std::string& path) {
  std::ifstream stream(path, std::ios::binary);
  if (!stream) throw FileFormatError("cannot read file: " + path);
  std::ostringstream buffer;
  buffer << stream.rdbuf();
  if (stream.bad()) throw FileFormatError("cannot read file: " + path);
  return buffer.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream stream(path, std::ios::binary);
  if (!stream) throw FileFormatError("cannot write file: " + path);
  stream << content;
  stream.flush();
  if (!stream) throw FileFormatError("cannot write file: " + path);
}

}  // namespace multidir
