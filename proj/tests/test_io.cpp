#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "multidir/classical.hpp"
#include "multidir/constructions.hpp"
#include "multidir/io.hpp"
#include "multidir/report.hpp"
#include "multidir/state.hpp"

using namespace multidir;

namespace {

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / name;
}

bool identical_amplitudes(const PureState& a, const PureState& b) {
  if (a.N != b.N || a.K != b.K || a.dimension() != b.dimension()) return false;
  for (long long i = 0; i < a.dimension(); ++i) {
    if (a.amplitudes(i) != b.amplitudes(i)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("state JSON round trip is exact") {
  const Geometry square = build_geometry(GeometryKind::Square);

  SUBCASE("kicked Ising state") {
    const PureState state = state_from_operator(kicked_ising_gate(), square);
    const std::string text = state_to_json(state, square);
    const LoadedState loaded = state_from_json(text);
    CHECK(loaded.geometry.kind == GeometryKind::Square);
    CHECK(loaded.state.N == 2);
    CHECK(loaded.state.K == 4);
    CHECK(identical_amplitudes(loaded.state, state));
    // Canonical form: serializing the parsed state reproduces the bytes.
    CHECK(state_to_json(loaded.state, loaded.geometry) == text);
    // Deterministic: a second serialization is identical.
    CHECK(state_to_json(state, square) == text);
  }

  SUBCASE("random amplitudes survive the decimal round trip bit-exactly") {
    std::mt19937_64 rng(411);
    const PureState state = random_state(3, 4, rng);
    const LoadedState loaded = state_from_json(state_to_json(state, square));
    CHECK(identical_amplitudes(loaded.state, state));
  }

  SUBCASE("every geometry name round-trips") {
    for (const std::string name :
         {"square", "hexagon", "polygon:8", "cube", "octahedron", "tetrahedron"}) {
      const Geometry geometry = build_geometry(name);
      PureState state = PureState::zero(2, geometry.sites);
      state.amplitudes(0) = 1.0;
      const LoadedState loaded = state_from_json(state_to_json(state, geometry));
      CHECK(loaded.geometry.name() == name);
      CHECK(loaded.state.K == geometry.sites);
    }
  }
}

TEST_CASE("state JSON lists only nonzero amplitudes in ascending order") {
  const Geometry square = build_geometry(GeometryKind::Square);
  PureState state = PureState::zero(2, 4);
  state.at({1, 0, 1, 0}) = Complex(0.5, 0.0);
  state.at({0, 0, 0, 1}) = Complex(0.0, -0.5);

  const nlohmann::json doc = nlohmann::json::parse(state_to_json(state, square));
  REQUIRE(doc.at("amplitudes").size() == 2);
  // Ascending configuration order: (0,0,0,1) packs below (1,0,1,0).
  CHECK(doc.at("amplitudes")[0].at("config") == nlohmann::json({1, 1, 1, 2}));
  CHECK(doc.at("amplitudes")[0].at("im").get<double>() == -0.5);
  CHECK(doc.at("amplitudes")[1].at("config") == nlohmann::json({2, 1, 2, 1}));
  CHECK(doc.at("amplitudes")[1].at("re").get<double>() == 0.5);
  // Keys are emitted in sorted order.
  const std::string text = state_to_json(state, square);
  CHECK(text.find("\"K\"") < text.find("\"N\""));
  CHECK(text.find("\"N\"") < text.find("\"amplitudes\""));
  CHECK(text.find("\"amplitudes\"") < text.find("\"geometry\""));
}

TEST_CASE("state JSON validation rejects malformed input") {
  const std::string good =
      R"({"K":4,"N":2,"amplitudes":[{"config":[1,1,1,1],"im":0.0,"re":1.0}],"geometry":"square"})";
  CHECK_NOTHROW(state_from_json(good));

  CHECK_THROWS_AS(state_from_json("not json"), FileFormatError);
  CHECK_THROWS_AS(state_from_json("[1,2,3]"), FileFormatError);
  // Missing / mistyped fields.
  CHECK_THROWS_AS(state_from_json(R"({"K":4,"N":2,"amplitudes":[]})"), FileFormatError);
  CHECK_THROWS_AS(
      state_from_json(R"({"K":4,"N":2,"amplitudes":[],"geometry":"pentagon"})"),
      FileFormatError);
  CHECK_THROWS_AS(state_from_json(R"({"K":4,"N":2,"amplitudes":7,"geometry":"square"})"),
                  FileFormatError);
  CHECK_THROWS_AS(state_from_json(R"({"K":4,"N":0,"amplitudes":[],"geometry":"square"})"),
                  FileFormatError);
  // Site count inconsistent with the arrangement.
  CHECK_THROWS_AS(state_from_json(R"({"K":6,"N":2,"amplitudes":[],"geometry":"square"})"),
                  FileFormatError);
  // Configuration errors: wrong length, value out of range, duplicates.
  CHECK_THROWS_AS(
      state_from_json(
          R"({"K":4,"N":2,"amplitudes":[{"config":[1,1,1],"im":0.0,"re":1.0}],"geometry":"square"})"),
      FileFormatError);
  CHECK_THROWS_AS(
      state_from_json(
          R"({"K":4,"N":2,"amplitudes":[{"config":[1,1,1,3],"im":0.0,"re":1.0}],"geometry":"square"})"),
      FileFormatError);
  CHECK_THROWS_AS(
      state_from_json(
          R"({"K":4,"N":2,"amplitudes":[{"config":[1,1,1,0],"im":0.0,"re":1.0}],"geometry":"square"})"),
      FileFormatError);
  CHECK_THROWS_AS(
      state_from_json(
          R"({"K":4,"N":2,"amplitudes":[{"config":[1,1,1,1],"im":0.0,"re":1.0},)"
          R"({"config":[1,1,1,1],"im":0.0,"re":0.5}],"geometry":"square"})"),
      FileFormatError);
  CHECK_THROWS_AS(
      state_from_json(
          R"({"K":4,"N":2,"amplitudes":[{"config":[1,1,1,1],"im":0.0,"re":"x"}],"geometry":"square"})"),
      FileFormatError);
}

TEST_CASE("operator JSON round trip keeps the convention and the entries") {
  const Geometry square = build_geometry(GeometryKind::Square);

  SUBCASE("edge-convention gate") {
    const OperatorMatrix gate = kicked_ising_gate();
    const std::string text = operator_to_json(gate, square);
    CHECK(text.find("\"convention\": \"edge\"") != std::string::npos);
    const LoadedOperator loaded = operator_from_json(text);
    CHECK(loaded.op.convention == Convention::Edge);
    CHECK(loaded.op.half_K == 2);
    CHECK(loaded.op.entries == gate.entries);
    CHECK(operator_to_json(loaded.op, loaded.geometry) == text);
  }

  SUBCASE("diagonal-convention gate") {
    const OperatorMatrix gate = hexagonal_qubit_diagonal(0.3, 0.7);
    const Geometry hexagon = build_geometry(GeometryKind::Hexagon);
    const std::string text = operator_to_json(gate, hexagon);
    CHECK(text.find("\"convention\": \"diagonal\"") != std::string::npos);
    const LoadedOperator loaded = operator_from_json(text);
    CHECK(loaded.op.convention == Convention::Diagonal);
    CHECK(loaded.geometry.kind == GeometryKind::Hexagon);
    CHECK(loaded.op.entries == gate.entries);
  }

  SUBCASE("edge convention is rejected for arrangements without one") {
    const std::string text =
        R"({"K":6,"N":2,"convention":"edge","entries":[],"geometry":"octahedron"})";
    CHECK_THROWS_AS(operator_from_json(text), FileFormatError);
    const std::string diagonal =
        R"({"K":6,"N":2,"convention":"diagonal","entries":[],"geometry":"octahedron"})";
    CHECK_NOTHROW(operator_from_json(diagonal));
    const std::string unknown =
        R"({"K":4,"N":2,"convention":"rows","entries":[],"geometry":"square"})";
    CHECK_THROWS_AS(operator_from_json(unknown), FileFormatError);
  }

  SUBCASE("duplicate entries are rejected") {
    const std::string text =
        R"({"K":4,"N":2,"convention":"diagonal","entries":[)"
        R"({"col":[1,1],"im":0.0,"re":1.0,"row":[1,1]},)"
        R"({"col":[1,1],"im":0.0,"re":0.5,"row":[1,1]}],"geometry":"square"})";
    CHECK_THROWS_AS(operator_from_json(text), FileFormatError);
  }
}

TEST_CASE("load_state_file reads states and converts operators") {
  const Geometry square = build_geometry(GeometryKind::Square);
  const OperatorMatrix gate = kicked_ising_gate();
  const PureState expected = state_from_operator(gate, square);

  const auto operator_path = temp_file("multidir_io_operator.json");
  write_text_file(operator_path.string(), operator_to_json(gate, square));
  const LoadedState from_operator = load_state_file(operator_path.string());
  CHECK(identical_amplitudes(from_operator.state, expected));

  const auto state_path = temp_file("multidir_io_state.json");
  write_text_file(state_path.string(), state_to_json(expected, square));
  const LoadedState from_state = load_state_file(state_path.string());
  CHECK(identical_amplitudes(from_state.state, expected));

  const auto junk_path = temp_file("multidir_io_junk.json");
  write_text_file(junk_path.string(), R"({"K":4,"N":2,"geometry":"square"})");
  CHECK_THROWS_AS(load_state_file(junk_path.string()), FileFormatError);
  CHECK_THROWS_AS(load_state_file((temp_file("multidir_does_not_exist.json")).string()),
                  FileFormatError);

  std::filesystem::remove(operator_path);
  std::filesystem::remove(state_path);
  std::filesystem::remove(junk_path);
}

TEST_CASE("incidence and phase-table files round trip with validation") {
  SUBCASE("incidence") {
    const Geometry square = build_geometry(GeometryKind::Square);
    const IncidenceGraph incidence = symmetric_incidence(square, {1, 2});
    const IncidenceGraph loaded = incidence_from_json(incidence_to_json(incidence));
    CHECK(loaded.K == 4);
    CHECK(loaded.labels == incidence.labels);

    CHECK_THROWS_AS(incidence_from_json(R"({"K":2,"labels":[[0,1],[2,0]]})"), FileFormatError);
    CHECK_THROWS_AS(incidence_from_json(R"({"K":2,"labels":[[1,1],[1,0]]})"), FileFormatError);
    CHECK_THROWS_AS(incidence_from_json(R"({"K":2,"labels":[[0,1]]})"), FileFormatError);
    CHECK_THROWS_AS(incidence_from_json(R"({"K":2,"labels":[[0,1],[1]]})"), FileFormatError);
    CHECK_THROWS_AS(incidence_from_json(R"({"K":2,"labels":[[0,1.5],[1.5,0]]})"),
                    FileFormatError);
  }

  SUBCASE("phase table") {
    PhaseTable table = PhaseTable::zeros(2, 2);
    table.at({0, 1}) = 0.25;
    table.at({1, 1}) = -1.75;
    const PhaseTable loaded = phase_table_from_json(phase_table_to_json(table));
    CHECK(loaded.N == 2);
    CHECK(loaded.arity == 2);
    CHECK(loaded.phases == table.phases);

    CHECK_THROWS_AS(phase_table_from_json(R"({"N":2,"arity":2,"phases":[0,0,0]})"),
                    FileFormatError);
    CHECK_THROWS_AS(phase_table_from_json(R"({"N":2,"arity":0,"phases":[]})"), FileFormatError);
    CHECK_THROWS_AS(phase_table_from_json(R"({"N":2,"phases":[0,0,0,0]})"), FileFormatError);
  }
}

TEST_CASE("solution lists round trip through plain text") {
  const Geometry square = build_geometry(GeometryKind::Square);
  const std::vector<ClassicalSolution> solutions = enumerate_solutions(square, 3);
  REQUIRE(solutions.size() == 10);

  const std::string text = solutions_to_text(solutions);
  CHECK(std::count(text.begin(), text.end(), '\n') == 10);
  const std::vector<ClassicalSolution> loaded = solutions_from_text(text, square, 3);
  REQUIRE(loaded.size() == solutions.size());
  for (std::size_t i = 0; i < loaded.size(); ++i) CHECK(loaded[i] == solutions[i]);

  const std::string annotated = "# comment\n\n  [1122]\nIdentity\r\n";
  const std::vector<ClassicalSolution> parsed = solutions_from_text(annotated, square, 3);
  REQUIRE(parsed.size() == 2);
  CHECK(parsed[0].compact_notation() == "[1122]");
  CHECK(parsed[1].compact_notation() == "Identity");

  CHECK_THROWS_WITH_AS(solutions_from_text("Identity\n[99]\n", square, 3),
                       doctest::Contains("line 2"), FileFormatError);
}

TEST_CASE("verification reports carry verdicts, deviations and entropies") {
  const Geometry square = build_geometry(GeometryKind::Square);

  SUBCASE("identity state passes everything") {
    const PureState state = identity_state(square, 2);
    const VerificationReport report = verify_state(state, square);
    CHECK(report.geometry == "square");
    CHECK(report.N == 2);
    CHECK(report.K == 4);
    CHECK(report.norm == doctest::Approx(1.0));
    REQUIRE(report.bipartitions.size() == 2);
    for (const BipartitionRow& row : report.bipartitions) {
      CHECK(row.maximal);
      CHECK(row.deviation <= report.tolerance);
      CHECK(row.entropy == doctest::Approx(std::log(4.0)).epsilon(1e-10));
    }
    CHECK(report.multidirectional);
    CHECK(report.spatially_symmetric);
    CHECK(report.has_diagonal_entanglement);
    CHECK(report.diagonal_entanglement == doctest::Approx(0.0));
    CHECK(report.all_pass());
    CHECK_FALSE(report.ame_checked);
  }

  SUBCASE("a product state fails with deviation 0.75") {
    PureState state = PureState::zero(2, 4);
    state.at({0, 0, 0, 0}) = 1.0;
    const VerificationReport report = verify_state(state, square);
    REQUIRE(report.bipartitions.size() == 2);
    for (const BipartitionRow& row : report.bipartitions) {
      CHECK(row.deviation == doctest::Approx(0.75));
      CHECK_FALSE(row.maximal);
      CHECK(row.entropy == doctest::Approx(0.0));
    }
    CHECK_FALSE(report.multidirectional);
    CHECK_FALSE(report.all_pass());
    // The verdict tracks the tolerance: at tol = 0.75 the same rows pass.
    const VerificationReport lenient = verify_state(state, square, 0.75);
    CHECK(lenient.multidirectional);
    CHECK(lenient.all_pass());
  }

  SUBCASE("absolute maximal entanglement verdict") {
    const Geometry hexagon = build_geometry(GeometryKind::Hexagon);
    const PureState state = graph_state(symmetric_incidence(hexagon, {0, 1, 1}), 2);
    const VerificationReport report = verify_state(state, hexagon, kMatrixTol, true);
    CHECK(report.ame_checked);
    CHECK(report.ame);
    CHECK(report.multidirectional);
    CHECK(report.all_pass());

    PureState product = PureState::zero(2, 6);
    product.at({0, 0, 0, 0, 0, 0}) = 1.0;
    const VerificationReport failing = verify_state(product, hexagon, kMatrixTol, true);
    CHECK(failing.ame_checked);
    CHECK_FALSE(failing.ame);
    CHECK_FALSE(failing.all_pass());
  }

  SUBCASE("symmetry is reported but does not gate the verdict") {
    // A diagonal gate with asymmetric phases stays multi-directional unitary.
    PhaseTable table = PhaseTable::zeros(2, 2);
    table.at({0, 1}) = 0.3;
    const PureState state = state_from_operator(diagonal_gate(square, table), square);
    const VerificationReport report = verify_state(state, square);
    CHECK(report.multidirectional);
    CHECK_FALSE(report.spatially_symmetric);
    CHECK(report.symmetry_deviation > 0.1);
    CHECK(report.all_pass());
  }
}

TEST_CASE("report renderings") {
  const Geometry square = build_geometry(GeometryKind::Square);
  const PureState state = identity_state(square, 2);
  const VerificationReport report = verify_state(state, square);

  SUBCASE("text table") {
    const std::string text = report_to_text(report);
    CHECK(text.find("geometry: square (K = 4, N = 2)") != std::string::npos);
    CHECK(text.find("bipartition") != std::string::npos);
    CHECK(text.find("{1,2}") != std::string::npos);
    CHECK(text.find("{1,4}") != std::string::npos);
    CHECK(text.find("multidirectional unitary: pass") != std::string::npos);
    CHECK(text.find("spatial symmetry: pass") != std::string::npos);
    CHECK(text.find("diagonal entanglement:") != std::string::npos);
    CHECK(text.find("fail") == std::string::npos);
  }

  SUBCASE("JSON rendering is parseable and complete") {
    const nlohmann::json doc = nlohmann::json::parse(report_to_json(report));
    CHECK(doc.at("geometry") == "square");
    CHECK(doc.at("K") == 4);
    CHECK(doc.at("N") == 2);
    CHECK(doc.at("multidirectional") == true);
    CHECK(doc.at("spatially_symmetric") == true);
    CHECK(doc.at("tolerance").get<double>() == kMatrixTol);
    REQUIRE(doc.at("bipartitions").size() == 2);
    CHECK(doc.at("bipartitions")[0].at("sites") == nlohmann::json({1, 2}));
    CHECK(doc.at("bipartitions")[0].at("maximal") == true);
    CHECK(doc.contains("diagonal_entanglement"));
    CHECK_FALSE(doc.contains("ame"));
    // Deterministic bytes.
    CHECK(report_to_json(report) == report_to_json(report));
  }

  SUBCASE("AME verdict appears when requested") {
    const VerificationReport with_ame = verify_state(state, square, kMatrixTol, true);
    const std::string text = report_to_text(with_ame);
    CHECK(text.find("absolutely maximally entangled:") != std::string::npos);
    const nlohmann::json doc = nlohmann::json::parse(report_to_json(with_ame));
    CHECK(doc.contains("ame"));
  }
}
