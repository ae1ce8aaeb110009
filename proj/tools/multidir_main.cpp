// Command-line front end: construct the explicit gate and state families,
// verify state or operator files, enumerate and classify the permutation-type
// solutions, and expand compact orbit notation into state files.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <multidir/classical.hpp>
#include <multidir/constructions.hpp>
#include <multidir/geometry.hpp>
#include <multidir/io.hpp>
#include <multidir/report.hpp>
#include <multidir/state.hpp>

namespace {

using namespace multidir;

std::vector<double> parse_number_list(const std::string& text) {
  std::vector<double> values;
  std::string token;
  auto flush = [&values, &token] {
    if (token.empty()) return;
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(token, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("invalid number in --params: \"" + token + "\"");
    }
    if (used != token.size()) {
      throw std::invalid_argument("invalid number in --params: \"" + token + "\"");
    }
    values.push_back(value);
    token.clear();
  };
  for (char c : text) {
    if (c == ',' || c == ' ' || c == '\t') {
      flush();
    } else {
      token += c;
    }
  }
  flush();
  return values;
}

std::vector<int> to_int_list(const std::vector<double>& values) {
  std::vector<int> out;
  out.reserve(values.size());
  for (double value : values) {
    const double rounded = std::round(value);
    if (std::abs(value - rounded) > 1e-9) {
      throw std::invalid_argument("--params must be integers for this construction");
    }
    out.push_back(static_cast<int>(rounded));
  }
  return out;
}

// Special unitary from Euler angles: Rz(phi) Ry(theta) Rz(lambda).
Eigen::Matrix2cd su2_euler(double theta, double phi, double lambda) {
  const Complex i(0.0, 1.0);
  Eigen::Matrix2cd rz_phi = Eigen::Matrix2cd::Zero();
  rz_phi(0, 0) = std::exp(-i * (phi / 2.0));
  rz_phi(1, 1) = std::exp(i * (phi / 2.0));
  Eigen::Matrix2cd ry;
  ry << std::cos(theta / 2.0), -std::sin(theta / 2.0), std::sin(theta / 2.0),
      std::cos(theta / 2.0);
  Eigen::Matrix2cd rz_lambda = Eigen::Matrix2cd::Zero();
  rz_lambda(0, 0) = std::exp(-i * (lambda / 2.0));
  rz_lambda(1, 1) = std::exp(i * (lambda / 2.0));
  return rz_phi * ry.cast<Complex>() * rz_lambda;
}

void emit(const std::string& content, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << content;
  } else {
    write_text_file(output_path, content);
  }
}

void require_kind(const Geometry& geometry, GeometryKind kind, const std::string& type) {
  if (geometry.kind != kind) {
    throw std::invalid_argument("--type " + type + " is only defined on the " +
                                build_geometry(kind).name() + " arrangement");
  }
}

struct ConstructArgs {
  std::string type;
  std::string geometry;
  int local_dim = 2;
  std::string params;
  std::string phases_path;
  std::string graph_path;
  std::string output;
};

int run_construct(const ConstructArgs& args) {
  std::string geometry_name = args.geometry;
  if (geometry_name.empty()) {
    if (args.type == "cartan" || args.type == "kicked-ising" || args.type == "hadamard-square") {
      geometry_name = "square";
    } else if (args.type == "hadamard-cube") {
      geometry_name = "cube";
    } else {
      throw std::invalid_argument("--geometry is required for --type " + args.type);
    }
  }
  const Geometry geometry = build_geometry(geometry_name);
  const std::vector<double> params = parse_number_list(args.params);
  const int local_dim = args.local_dim;
  if (local_dim < 1) throw std::invalid_argument("--n must be a positive integer");

  if (args.type == "identity") {
    emit(state_to_json(identity_state(geometry, local_dim), geometry), args.output);
  } else if (args.type == "diagonal") {
    PhaseTable table;
    if (!args.phases_path.empty()) {
      table = phase_table_from_json(read_text_file(args.phases_path));
    } else if (!params.empty()) {
      table.N = local_dim;
      table.arity = geometry.half();
      table.phases = params;
    } else {
      throw std::invalid_argument(
          "--type diagonal needs --phases file.json or --params with one phase per input tuple");
    }
    if (table.N != local_dim) {
      throw std::invalid_argument("phase table local dimension does not match --n");
    }
    if (table.arity != geometry.half() ||
        static_cast<long long>(table.phases.size()) != pow_ll(table.N, table.arity)) {
      throw std::invalid_argument("the phase table must list N^{K/2} = " +
                                  std::to_string(pow_ll(local_dim, geometry.half())) +
                                  " phases for this arrangement");
    }
    emit(operator_to_json(diagonal_gate(geometry, table), geometry), args.output);
  } else if (args.type == "cartan") {
    require_kind(geometry, GeometryKind::Square, args.type);
    if (local_dim != 2) throw std::invalid_argument("--type cartan is a qubit family (--n 2)");
    OperatorMatrix op;
    const Eigen::Matrix2cd one = Eigen::Matrix2cd::Identity();
    if (params.size() == 2) {
      op = cartan_dual_unitary(params[1], params[0], one, one, one, one);
    } else if (params.size() == 5) {
      op = self_dual_family(su2_euler(params[2], params[3], params[4]), params[0], params[1]);
    } else if (params.size() == 14) {
      Eigen::Matrix2cd factors[4];
      for (int j = 0; j < 4; ++j) {
        factors[j] = su2_euler(params[2 + 3 * j], params[3 + 3 * j], params[4 + 3 * j]);
      }
      op = cartan_dual_unitary(params[1], params[0], factors[0], factors[1], factors[2],
                               factors[3]);
    } else {
      throw std::invalid_argument(
          "--type cartan takes --params alpha,phi, optionally followed by one (self-dual) or "
          "four Euler-angle triples theta,phi,lambda");
    }
    emit(operator_to_json(op, geometry), args.output);
  } else if (args.type == "kicked-ising") {
    require_kind(geometry, GeometryKind::Square, args.type);
    if (local_dim != 2) throw std::invalid_argument("--type kicked-ising is a qubit gate (--n 2)");
    emit(operator_to_json(kicked_ising_gate(), geometry), args.output);
  } else if (args.type == "hadamard-square") {
    require_kind(geometry, GeometryKind::Square, args.type);
    const HadamardMatrix fourier = fourier_hadamard(local_dim);
    emit(operator_to_json(hadamard_square(fourier, fourier, fourier, fourier), geometry),
         args.output);
  } else if (args.type == "hadamard-cube") {
    require_kind(geometry, GeometryKind::Cube, args.type);
    emit(operator_to_json(hadamard_cube(fourier_hadamard(local_dim)), geometry), args.output);
  } else if (args.type == "graph") {
    IncidenceGraph incidence;
    if (!args.graph_path.empty()) {
      incidence = incidence_from_json(read_text_file(args.graph_path));
      if (incidence.K != geometry.sites) {
        throw std::invalid_argument("the incidence graph does not match the arrangement size");
      }
    } else if (!params.empty()) {
      incidence = symmetric_incidence(geometry, to_int_list(params));
    } else {
      throw std::invalid_argument(
          "--type graph needs --params with the symmetric edge labels or --graph file.json");
    }
    emit(state_to_json(graph_state(incidence, local_dim), geometry), args.output);
  } else {
    throw std::invalid_argument("unknown --type \"" + args.type + "\"");
  }
  return 0;
}

struct VerifyArgs {
  std::string file;
  std::string geometry;
  int local_dim = 0;  // 0: take from the file
  double tolerance = kMatrixTol;
  std::string format = "text";
  bool check_ame = false;
};

int run_verify(const VerifyArgs& args) {
  const LoadedState loaded = load_state_file(args.file);
  if (!args.geometry.empty()) {
    const Geometry requested = build_geometry(args.geometry);
    if (requested.kind != loaded.geometry.kind || requested.sites != loaded.geometry.sites) {
      throw FileFormatError("the file holds a " + loaded.geometry.name() + " state, not " +
                            requested.name());
    }
  }
  if (args.local_dim > 0 && args.local_dim != loaded.state.N) {
    throw FileFormatError("the file has local dimension N = " + std::to_string(loaded.state.N) +
                          ", not " + std::to_string(args.local_dim));
  }
  const VerificationReport report =
      verify_state(loaded.state, loaded.geometry, args.tolerance, args.check_ame);
  std::cout << (args.format == "json" ? report_to_json(report) : report_to_text(report));
  return report.all_pass() ? 0 : 1;
}

std::string classes_to_text(const std::vector<SolutionClass>& classes) {
  std::string out;
  for (std::size_t index = 0; index < classes.size(); ++index) {
    out += std::to_string(index + 1) + ": " + classes[index].representative.compact_notation() +
           " (" + std::to_string(classes[index].members.size()) + " solutions)\n";
  }
  return out;
}

std::string hexagonal_map_to_text(const std::vector<int>& map) {
  std::string out = "hexagonal class map: ";
  for (std::size_t index = 0; index < map.size(); ++index) {
    if (index > 0) out += ", ";
    out += std::to_string(index + 1) + ":" + std::to_string(map[index] + 1);
  }
  out += '\n';
  return out;
}

struct ClassifyArgs {
  std::string geometry;
  int local_dim = 2;
  int jobs = 1;
  bool map_hexagonal = false;
  std::string format = "text";
  std::string output;
};

int run_classify(const ClassifyArgs& args) {
  const Geometry geometry = build_geometry(args.geometry);
  if (args.map_hexagonal && geometry.kind != GeometryKind::Octahedron) {
    throw std::invalid_argument("--map-hexagonal requires --geometry octahedron");
  }
  const std::vector<SolutionClass> classes = classify(geometry, args.local_dim, args.jobs);
  std::vector<int> hexagonal_map;
  if (args.map_hexagonal) hexagonal_map = octahedral_hexagonal_map(args.local_dim, args.jobs);

  std::string content;
  if (args.format == "json") {
    nlohmann::json class_list = nlohmann::json::array();
    for (const SolutionClass& cls : classes) {
      nlohmann::json members = nlohmann::json::array();
      for (const ClassicalSolution& member : cls.members) {
        members.push_back(member.compact_notation());
      }
      class_list.push_back(nlohmann::json{{"members", members},
                                          {"representative", cls.representative.compact_notation()}});
    }
    nlohmann::json doc{
        {"classes", class_list}, {"geometry", geometry.name()}, {"n", args.local_dim}};
    if (args.map_hexagonal) {
      nlohmann::json map_list = nlohmann::json::array();
      for (int target : hexagonal_map) map_list.push_back(target + 1);
      doc["hexagonal_map"] = map_list;
    }
    content = doc.dump(2) + "\n";
  } else {
    content = classes_to_text(classes);
    if (args.map_hexagonal) content += hexagonal_map_to_text(hexagonal_map);
  }
  emit(content, args.output);
  return 0;
}

struct EnumerateArgs {
  std::string geometry;
  int local_dim = 2;
  int jobs = 1;
  bool classify = false;
  bool full = false;
  std::string format = "text";
  std::string output;
};

int run_enumerate(const EnumerateArgs& args) {
  const Geometry geometry = build_geometry(args.geometry);
  if (args.classify) {
    ClassifyArgs classify_args;
    classify_args.geometry = args.geometry;
    classify_args.local_dim = args.local_dim;
    classify_args.jobs = args.jobs;
    classify_args.format = args.format;
    classify_args.output = args.output;
    return run_classify(classify_args);
  }
  const std::vector<ClassicalSolution> solutions =
      enumerate_solutions(geometry, args.local_dim, args.jobs);

  if (args.full) {
    if (args.output.empty()) {
      throw std::invalid_argument("--full needs -o DIR to hold one state file per solution");
    }
    std::filesystem::create_directories(args.output);
    write_text_file(args.output + "/solutions.txt", solutions_to_text(solutions));
    for (std::size_t index = 0; index < solutions.size(); ++index) {
      char name[32];
      std::snprintf(name, sizeof(name), "/solution_%03zu.json", index + 1);
      write_text_file(args.output + name,
                      state_to_json(solution_to_state(solutions[index]), geometry));
    }
    std::cout << "wrote " << solutions.size() << " solutions to " << args.output << "\n";
    return 0;
  }

  std::string content;
  if (args.format == "json") {
    nlohmann::json list = nlohmann::json::array();
    for (const ClassicalSolution& solution : solutions) list.push_back(solution.compact_notation());
    const nlohmann::json doc{
        {"geometry", geometry.name()}, {"n", args.local_dim}, {"solutions", list}};
    content = doc.dump(2) + "\n";
  } else {
    content = solutions_to_text(solutions);
  }
  emit(content, args.output);
  return 0;
}

struct ExpandArgs {
  std::string geometry;
  int local_dim = 2;
  std::string notation;
  std::string format = "text";
  std::string output;
};

int run_expand(const ExpandArgs& args) {
  const Geometry geometry = build_geometry(args.geometry);
  const ClassicalSolution solution =
      expand_compact_notation(args.notation, geometry, args.local_dim);
  const std::string state_json = state_to_json(solution_to_state(solution), geometry);
  if (!args.output.empty()) write_text_file(args.output, state_json);

  if (args.format == "json") {
    if (args.output.empty()) std::cout << state_json;
  } else {
    std::string out = "solution: " + solution.compact_notation() + "\n";
    out += "orbits:\n";
    for (const Orbit& orbit : solution.orbits) {
      out += "  " + orbit.label + " (" + std::to_string(orbit.size()) +
             (orbit.size() == 1 ? " configuration" : " configurations") +
             (orbit.diagonally_identical ? ", diagonal" : "") + ")\n";
    }
    char amplitude[32];
    std::snprintf(amplitude, sizeof(amplitude), "%.12g",
                  std::pow(static_cast<double>(args.local_dim), -geometry.sites / 4.0));
    out += "support: " + std::to_string(solution.support.size()) +
           " configurations, each with amplitude " + amplitude + "\n";
    if (!args.output.empty()) out += "state written to " + args.output + "\n";
    std::cout << out;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Multi-directional unitary operators and maximally entangled states on square, polygon, "
      "cubic, octahedral and tetrahedral site arrangements"};
  app.require_subcommand(1);

  const std::string geometry_help = "square | hexagon | polygon:<2k> | cube | octahedron | tetrahedron";

  ConstructArgs construct_args;
  CLI::App* construct = app.add_subcommand(
      "construct", "Build an explicit construction and write it as a state or operator JSON file");
  construct
      ->add_option("--type", construct_args.type,
                   "identity | diagonal | cartan | kicked-ising | hadamard-square | hadamard-cube "
                   "| graph")
      ->required();
  construct->add_option("--geometry", construct_args.geometry, geometry_help);
  construct->add_option("-n,--n", construct_args.local_dim, "local dimension (default 2)");
  construct->add_option("--params", construct_args.params,
                        "comma-separated numeric parameters: diagonal phases, cartan angles "
                        "alpha,phi[,Euler triples], or integer graph edge labels");
  construct->add_option("--phases", construct_args.phases_path,
                        "phase table JSON file for --type diagonal");
  construct->add_option("--graph", construct_args.graph_path,
                        "incidence JSON file for --type graph");
  construct->add_option("-o,--output", construct_args.output, "output file (default: stdout)");

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand(
      "verify", "Check a state or operator JSON file for maximal entanglement on every allowed "
                "bipartition, spatial symmetry and diagonal entanglement");
  verify->add_option("file", verify_args.file, "state or operator JSON file")->required();
  verify->add_option("--geometry", verify_args.geometry,
                     "require the file to use this arrangement");
  verify->add_option("-n,--n", verify_args.local_dim, "require this local dimension");
  verify->add_option("--tol", verify_args.tolerance, "verification tolerance (default 1e-9)");
  verify->add_option("--format", verify_args.format, "text | json (default text)")
      ->check(CLI::IsMember({"text", "json"}));
  verify->add_flag("--ame", verify_args.check_ame,
                   "also check absolute maximal entanglement (every subset of at most K/2 sites)");

  EnumerateArgs enumerate_args;
  CLI::App* enumerate = app.add_subcommand(
      "enumerate", "List every permutation-type solution, one compact notation per line");
  enumerate->add_option("--geometry", enumerate_args.geometry, geometry_help)->required();
  enumerate->add_option("-n,--n", enumerate_args.local_dim, "local dimension")->required();
  enumerate->add_option("--jobs", enumerate_args.jobs, "worker threads (default 1)")
      ->check(CLI::PositiveNumber);
  enumerate->add_flag("--classify", enumerate_args.classify,
                      "group the solutions into equivalence classes instead of listing them");
  enumerate->add_flag("--full", enumerate_args.full,
                      "write one state JSON file per solution into the -o directory");
  enumerate->add_option("--format", enumerate_args.format, "text | json (default text)")
      ->check(CLI::IsMember({"text", "json"}));
  enumerate->add_option("-o,--output", enumerate_args.output,
                        "output file, or output directory with --full");

  ClassifyArgs classify_args;
  CLI::App* classify_cmd = app.add_subcommand(
      "classify", "Group the permutation-type solutions into equivalence classes under "
                  "site-dependent value relabelings");
  classify_cmd->add_option("--geometry", classify_args.geometry, geometry_help)->required();
  classify_cmd->add_option("-n,--n", classify_args.local_dim, "local dimension")->required();
  classify_cmd->add_option("--jobs", classify_args.jobs, "worker threads (default 1)")
      ->check(CLI::PositiveNumber);
  classify_cmd->add_flag("--map-hexagonal", classify_args.map_hexagonal,
                         "octahedron only: print which hexagonal class each octahedral class "
                         "lands in");
  classify_cmd->add_option("--format", classify_args.format, "text | json (default text)")
      ->check(CLI::IsMember({"text", "json"}));
  classify_cmd->add_option("-o,--output", classify_args.output, "output file (default: stdout)");

  ExpandArgs expand_args;
  CLI::App* expand = app.add_subcommand(
      "expand", "Expand compact orbit notation into the corresponding state");
  expand->add_option("--geometry", expand_args.geometry, geometry_help)->required();
  expand->add_option("-n,--n", expand_args.local_dim, "local dimension")->required();
  expand->add_option("notation", expand_args.notation, "compact notation, e.g. \"[1424],[3344]\"")
      ->required();
  expand->add_option("--format", expand_args.format, "text | json (default text)")
      ->check(CLI::IsMember({"text", "json"}));
  expand->add_option("-o,--output", expand_args.output, "state JSON output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (construct->parsed()) return run_construct(construct_args);
    if (verify->parsed()) return run_verify(verify_args);
    if (enumerate->parsed()) return run_enumerate(enumerate_args);
    if (classify_cmd->parsed()) return run_classify(classify_args);
    if (expand->parsed()) return run_expand(expand_args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
