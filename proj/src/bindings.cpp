// Python bindings for the core operations: arrangements, states and
// operators, the explicit constructions, verification reports, and the
// enumeration and classification of permutation-type solutions.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <multidir/classical.hpp>
#include <multidir/constructions.hpp>
#include <multidir/geometry.hpp>
#include <multidir/io.hpp>
#include <multidir/report.hpp>
#include <multidir/state.hpp>

namespace py = pybind11;
using namespace multidir;

namespace {

HadamardMatrix as_hadamard(const Eigen::MatrixXcd& entries) {
  if (entries.rows() != entries.cols() || entries.rows() < 1) {
    throw std::invalid_argument("a Hadamard factor must be a square matrix");
  }
  HadamardMatrix matrix;
  matrix.N = static_cast<int>(entries.rows());
  matrix.entries = entries;
  return matrix;
}

IncidenceGraph as_incidence(const std::vector<std::vector<int>>& labels) {
  IncidenceGraph incidence;
  incidence.K = static_cast<int>(labels.size());
  incidence.labels = labels;
  return incidence;
}

PhaseTable as_phase_table(int local_dim, int arity, const std::vector<double>& phases) {
  PhaseTable table;
  table.N = local_dim;
  table.arity = arity;
  table.phases = phases;
  if (static_cast<long long>(phases.size()) != pow_ll(local_dim, arity)) {
    throw std::invalid_argument("the phase table must list N^arity phases");
  }
  return table;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Multi-directional unitary operators and maximally entangled states on "
      "square, polygon, cubic, octahedral and tetrahedral site arrangements";

  m.attr("MATRIX_TOL") = kMatrixTol;

  // --- geometry ---------------------------------------------------------------
  py::class_<SitePermutation>(m, "SitePermutation",
                              "Permutation of the sites; image[j] is where site j moves")
      .def(py::init([](const std::vector<int>& image) { return SitePermutation{image}; }),
           py::arg("image"))
      .def_readonly("image", &SitePermutation::image)
      .def("inverse", &SitePermutation::inverse)
      .def("__len__", &SitePermutation::size)
      .def("__call__", &SitePermutation::operator(), py::arg("site"))
      .def("__eq__",
           [](const SitePermutation& a, const SitePermutation& b) { return a == b; })
      .def("__repr__", [](const SitePermutation& p) {
        std::string out = "SitePermutation([";
        for (std::size_t j = 0; j < p.image.size(); ++j) {
          if (j) out += ", ";
          out += std::to_string(p.image[j]);
        }
        return out + "])";
      });

  py::class_<Geometry>(m, "Geometry", "A site arrangement with its symmetry group")
      .def_property_readonly("name", &Geometry::name)
      .def_readonly("sites", &Geometry::sites)
      .def_property_readonly("half", &Geometry::half)
      .def_property_readonly("has_diagonals", &Geometry::has_diagonals)
      .def_readonly("diagonals", &Geometry::diagonals)
      .def_readonly("bipartitions", &Geometry::bipartitions)
      .def_readonly("generators", &Geometry::generators)
      .def_property_readonly("group_order",
                             [](const Geometry& g) { return g.group.size(); })
      .def("antipode", &Geometry::antipode, py::arg("site"))
      .def("__repr__", [](const Geometry& g) {
        return "Geometry('" + g.name() + "', sites=" + std::to_string(g.sites) + ")";
      });

  m.def("build_geometry", py::overload_cast<const std::string&>(&build_geometry),
        py::arg("name"),
        "Build an arrangement by name: square, hexagon, polygon:<2k>, cube, "
        "octahedron or tetrahedron");
  m.def("is_allowed_bipartition", &is_allowed_bipartition, py::arg("geometry"),
        py::arg("subset"));

  // --- states and operators ------------------------------------------------------
  py::class_<PureState>(m, "PureState",
                        "Pure state of K sites with local dimension N; amplitudes are "
                        "indexed big-endian (site 0 is the most significant digit)")
      .def(py::init([](int local_dim, int site_count, const Eigen::VectorXcd& amplitudes) {
             PureState state = PureState::zero(local_dim, site_count);
             if (amplitudes.size() != state.dimension()) {
               throw std::invalid_argument("amplitude vector has the wrong length");
             }
             state.amplitudes = amplitudes;
             return state;
           }),
           py::arg("local_dim"), py::arg("site_count"), py::arg("amplitudes"))
      .def_static("zero", &PureState::zero, py::arg("local_dim"), py::arg("site_count"))
      .def_readonly("N", &PureState::N)
      .def_readonly("K", &PureState::K)
      .def_property(
          "amplitudes", [](const PureState& s) { return s.amplitudes; },
          [](PureState& s, const Eigen::VectorXcd& amplitudes) {
            if (amplitudes.size() != s.dimension()) {
              throw std::invalid_argument("amplitude vector has the wrong length");
            }
            s.amplitudes = amplitudes;
          })
      .def("norm", &PureState::norm)
      .def("amplitude",
           [](const PureState& s, const std::vector<int>& config) { return s.at(config); },
           py::arg("config"), "Amplitude of a configuration given as 0-based site values")
      .def("__repr__", [](const PureState& s) {
        return "PureState(N=" + std::to_string(s.N) + ", K=" + std::to_string(s.K) + ")";
      });

  py::enum_<Convention>(m, "Convention")
      .value("Diagonal", Convention::Diagonal)
      .value("Edge", Convention::Edge);

  py::class_<OperatorMatrix>(m, "OperatorMatrix",
                             "Operator on half of the sites, as an N^half_K square matrix")
      .def(py::init([](int local_dim, int half_sites, Convention convention,
                       const Eigen::MatrixXcd& entries) {
             OperatorMatrix op;
             op.N = local_dim;
             op.half_K = half_sites;
             op.convention = convention;
             const long long dim = pow_ll(local_dim, half_sites);
             if (entries.rows() != dim || entries.cols() != dim) {
               throw std::invalid_argument("operator matrix has the wrong size");
             }
             op.entries = entries;
             return op;
           }),
           py::arg("local_dim"), py::arg("half_sites"), py::arg("convention"),
           py::arg("entries"))
      .def_readonly("N", &OperatorMatrix::N)
      .def_readonly("half_K", &OperatorMatrix::half_K)
      .def_readonly("convention", &OperatorMatrix::convention)
      .def_property_readonly("entries",
                             [](const OperatorMatrix& op) { return op.entries; })
      .def("__repr__", [](const OperatorMatrix& op) {
        return std::string("OperatorMatrix(N=") + std::to_string(op.N) +
               ", half_K=" + std::to_string(op.half_K) + ", convention=" +
               (op.convention == Convention::Diagonal ? "Diagonal" : "Edge") + ")";
      });

  m.def("state_from_operator", &state_from_operator, py::arg("op"), py::arg("geometry"));
  m.def("operator_from_state", &operator_from_state, py::arg("state"), py::arg("geometry"),
        py::arg("bipartition"), py::arg("convention") = Convention::Diagonal);
  m.def("to_diagonal_convention", &to_diagonal_convention, py::arg("op"), py::arg("geometry"));
  m.def("to_edge_convention", &to_edge_convention, py::arg("op"), py::arg("geometry"));
  m.def("unitarity_deviation", &unitarity_deviation, py::arg("matrix"),
        "Max-norm of M†M - I");
  m.def("reshuffle", &reshuffle, py::arg("op"),
        "Realign a two-site operator; the result is unitary iff the second diagonal is "
        "maximally entangled");
  m.def("partial_transpose", &partial_transpose, py::arg("op"), py::arg("positions"),
        "Transpose the designated tensor factors (0-based positions, no conjugation)");

  // --- entanglement checks -----------------------------------------------------
  m.def("von_neumann_entropy",
        py::overload_cast<const PureState&, const std::vector<int>&>(&von_neumann_entropy),
        py::arg("state"), py::arg("subset"), "Entropy of a site subset in nats");
  m.def("maximal_entanglement_deviation", &maximal_entanglement_deviation, py::arg("state"),
        py::arg("subset"));
  m.def("is_maximally_entangled", &is_maximally_entangled, py::arg("state"),
        py::arg("subset"), py::arg("tol") = kMatrixTol);
  m.def("is_absolutely_maximally_entangled", &is_absolutely_maximally_entangled,
        py::arg("state"), py::arg("tol") = kMatrixTol);

  py::class_<BipartitionCheck>(m, "BipartitionCheck")
      .def_readonly("subset", &BipartitionCheck::subset)
      .def_readonly("deviation", &BipartitionCheck::deviation)
      .def_readonly("maximal", &BipartitionCheck::maximal);

  py::class_<MultidirectionalReport>(m, "MultidirectionalReport")
      .def_readonly("checks", &MultidirectionalReport::checks)
      .def_readonly("multidirectional", &MultidirectionalReport::multidirectional)
      .def("__bool__",
           [](const MultidirectionalReport& r) { return r.multidirectional; });

  m.def("is_multidirectional_unitary", &is_multidirectional_unitary, py::arg("state"),
        py::arg("geometry"), py::arg("tol") = kMatrixTol,
        "Check maximal entanglement on every allowed bipartition");

  m.def("apply_site_permutation", &apply_site_permutation, py::arg("state"), py::arg("perm"));
  m.def("spatial_symmetry_deviation", &spatial_symmetry_deviation, py::arg("state"),
        py::arg("geometry"));
  m.def("is_spatially_symmetric", &is_spatially_symmetric, py::arg("state"),
        py::arg("geometry"), py::arg("tol") = kMatrixTol);
  m.def("diagonal_entanglement", &diagonal_entanglement, py::arg("state"),
        py::arg("geometry"),
        "Largest entropy of a single diagonal pair; 0 iff the diagonals are in a product "
        "state");

  py::enum_<WitnessSearch>(m, "WitnessSearch")
      .value("GlobalPhase", WitnessSearch::GlobalPhase)
      .value("Monomial", WitnessSearch::Monomial);

  py::class_<InvarianceWitness>(m, "InvarianceWitness")
      .def_readonly("phase", &InvarianceWitness::phase)
      .def_readonly("value_maps", &InvarianceWitness::value_maps)
      .def_readonly("phase_exponents", &InvarianceWitness::phase_exponents);

  py::class_<GeneratorInvariance>(m, "GeneratorInvariance")
      .def_readonly("generator", &GeneratorInvariance::generator)
      .def_readonly("witness", &GeneratorInvariance::witness);

  py::class_<WeakInvarianceReport>(m, "WeakInvarianceReport")
      .def_readonly("generators", &WeakInvarianceReport::generators)
      .def_readonly("invariant", &WeakInvarianceReport::invariant)
      .def("__bool__", [](const WeakInvarianceReport& r) { return r.invariant; });

  m.def("invariance_witness", &invariance_witness, py::arg("state"), py::arg("perm"),
        py::arg("search"),
        "Search for local operators undoing a site permutation, or None");
  m.def("weak_spatial_invariance", &weak_spatial_invariance, py::arg("state"),
        py::arg("geometry"), py::arg("search"));

  // --- constructions --------------------------------------------------------------
  m.def("identity_state", &identity_state, py::arg("geometry"), py::arg("local_dim"),
        "Product of one maximally entangled pair per diagonal");
  m.def(
      "diagonal_gate",
      [](const Geometry& geometry, int local_dim, const std::vector<double>& phases) {
        return diagonal_gate(geometry, as_phase_table(local_dim, geometry.half(), phases));
      },
      py::arg("geometry"), py::arg("local_dim"), py::arg("phases"),
      "Diagonal gate with one phase per input tuple (ascending tuple order)");
  m.def("hexagonal_qubit_diagonal", &hexagonal_qubit_diagonal, py::arg("gamma"),
        py::arg("delta"));
  m.def(
      "cartan_dual_unitary",
      [](double phi, double alpha, const Eigen::Matrix2cd& s1, const Eigen::Matrix2cd& s2,
         const Eigen::Matrix2cd& s3, const Eigen::Matrix2cd& s4) {
        return cartan_dual_unitary(phi, alpha, s1, s2, s3, s4);
      },
      py::arg("phi"), py::arg("alpha"), py::arg("s1"), py::arg("s2"), py::arg("s3"),
      py::arg("s4"));
  m.def(
      "self_dual_family",
      [](const Eigen::Matrix2cd& v, double alpha, double phi) {
        return self_dual_family(v, alpha, phi);
      },
      py::arg("v"), py::arg("alpha"), py::arg("phi"));
  m.def("kicked_ising_gate", &kicked_ising_gate,
        "The self-dual kicked Ising gate at its maximally chaotic point");
  m.def(
      "fourier_hadamard",
      [](int local_dim) { return fourier_hadamard(local_dim).entries; }, py::arg("local_dim"));
  m.def(
      "is_complex_hadamard",
      [](const Eigen::MatrixXcd& matrix, double tol) {
        return is_complex_hadamard(matrix, tol);
      },
      py::arg("matrix"), py::arg("tol") = kMatrixTol);
  m.def(
      "hadamard_square",
      [](const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b, const Eigen::MatrixXcd& c,
         const Eigen::MatrixXcd& e) {
        return hadamard_square(as_hadamard(a), as_hadamard(b), as_hadamard(c),
                               as_hadamard(e));
      },
      py::arg("a"), py::arg("b"), py::arg("c"), py::arg("e"),
      "Dual unitary gate from four Hadamard matrices on the edges of the square");
  m.def(
      "hadamard_cube",
      [](const Eigen::MatrixXcd& a) { return hadamard_cube(as_hadamard(a)); }, py::arg("a"),
      "Multi-directional gate from one symmetric Hadamard matrix on the cube's edges");
  m.def(
      "graph_state",
      [](const std::vector<std::vector<int>>& labels, int local_dim) {
        return graph_state(as_incidence(labels), local_dim);
      },
      py::arg("labels"), py::arg("local_dim"),
      "Qudit graph state of a symmetric integer-labeled graph (prime local dimension)");
  m.def(
      "symmetric_incidence",
      [](const Geometry& geometry, const std::vector<int>& parameters) {
        return symmetric_incidence(geometry, parameters).labels;
      },
      py::arg("geometry"), py::arg("parameters"),
      "Group-invariant edge labels from one parameter per site-pair class");

  py::class_<IncidenceDeterminant>(m, "IncidenceDeterminant")
      .def_readonly("determinant", &IncidenceDeterminant::determinant)
      .def_readonly("residue", &IncidenceDeterminant::residue)
      .def_readonly("maximal", &IncidenceDeterminant::maximal)
      .def("__bool__", [](const IncidenceDeterminant& d) { return d.maximal; })
      .def("__repr__", [](const IncidenceDeterminant& d) {
        return "IncidenceDeterminant(determinant=" + std::to_string(d.determinant) +
               ", residue=" + std::to_string(d.residue) +
               ", maximal=" + (d.maximal ? std::string("True") : std::string("False")) + ")";
      });

  m.def(
      "reduced_incidence_determinant",
      [](const Geometry& geometry, const std::vector<int>& parameters, int local_dim) {
        return reduced_incidence_determinant(geometry, parameters, local_dim);
      },
      py::arg("geometry"), py::arg("parameters"), py::arg("local_dim"),
      "Exact integer determinant criterion for maximal entanglement of the graph state");
  m.def(
      "incidence_determinant",
      [](const std::vector<std::vector<int>>& labels, int local_dim) {
        return reduced_incidence_determinant(as_incidence(labels), local_dim);
      },
      py::arg("labels"), py::arg("local_dim"));

  m.def("random_state",
        [](int local_dim, int site_count, unsigned long long seed) {
          std::mt19937_64 rng(seed);
          return random_state(local_dim, site_count, rng);
        },
        py::arg("local_dim"), py::arg("site_count"), py::arg("seed") = 0ULL);
  m.def("haar_random_unitary",
        [](int dim, unsigned long long seed) {
          std::mt19937_64 rng(seed);
          return haar_random_unitary(dim, rng);
        },
        py::arg("dim"), py::arg("seed") = 0ULL);

  // --- permutation-type solutions ---------------------------------------------------
  py::class_<Orbit>(m, "Orbit")
      .def_readonly("label", &Orbit::label)
      .def_readonly("diagonally_identical", &Orbit::diagonally_identical)
      .def("__len__", &Orbit::size)
      .def_property_readonly("members", [](const Orbit& orbit) {
        std::vector<std::vector<int>> members;
        members.reserve(orbit.members.size());
        for (const Configuration& config : orbit.members) members.push_back(config.values);
        return members;
      });

  py::class_<ClassicalSolution>(m, "ClassicalSolution")
      .def_readonly("N", &ClassicalSolution::N)
      .def_readonly("sites", &ClassicalSolution::sites)
      .def_readonly("orbits", &ClassicalSolution::orbits)
      .def_property_readonly("support_size",
                             [](const ClassicalSolution& s) { return s.support.size(); })
      .def_property_readonly("non_diagonal_orbit_count",
                             &ClassicalSolution::non_diagonal_orbit_count)
      .def("compact_notation", &ClassicalSolution::compact_notation)
      .def("geometry", &ClassicalSolution::geometry)
      .def("__eq__", [](const ClassicalSolution& a,
                        const ClassicalSolution& b) { return a == b; })
      .def("__repr__", [](const ClassicalSolution& s) {
        return "ClassicalSolution('" + s.compact_notation() + "', N=" + std::to_string(s.N) +
               ")";
      });

  m.def("expand_compact_notation",
        py::overload_cast<const std::string&, const Geometry&, int>(&expand_compact_notation),
        py::arg("notation"), py::arg("geometry"), py::arg("local_dim"),
        "Expand comma-joined orbit labels (or 'Identity') into a full solution");
  m.def("solution_to_state", &solution_to_state, py::arg("solution"));
  m.def("solution_in_geometry", &solution_in_geometry, py::arg("solution"),
        py::arg("target"));
  m.def("enumerate_solutions", &enumerate_solutions, py::arg("geometry"),
        py::arg("local_dim"), py::arg("jobs") = 1,
        "All permutation-type solutions in canonical order");
  m.def("strong_equivalence", &strong_equivalence, py::arg("from_solution"),
        py::arg("to_solution"),
        "Per-site value permutations mapping one solution to the other, or None");
  m.def("weak_equivalence", &weak_equivalence, py::arg("from_solution"),
        py::arg("to_solution"),
        "A single value permutation applied at every site, or None");

  py::class_<SolutionClass>(m, "SolutionClass")
      .def_readonly("representative", &SolutionClass::representative)
      .def_readonly("members", &SolutionClass::members)
      .def("__len__", [](const SolutionClass& c) { return c.members.size(); })
      .def("__repr__", [](const SolutionClass& c) {
        return "SolutionClass('" + c.representative.compact_notation() + "', " +
               std::to_string(c.members.size()) + " members)";
      });

  m.def("classify", &classify, py::arg("geometry"), py::arg("local_dim"),
        py::arg("jobs") = 1,
        "Group all solutions into equivalence classes under per-site value relabelings");
  m.def("octahedral_hexagonal_map", &octahedral_hexagonal_map, py::arg("local_dim"),
        py::arg("jobs") = 1,
        "For each octahedral class, the index of the hexagonal class containing it");

  // --- files and reports --------------------------------------------------------------
  py::class_<LoadedState>(m, "LoadedState")
      .def_readonly("state", &LoadedState::state)
      .def_readonly("geometry", &LoadedState::geometry);

  py::class_<LoadedOperator>(m, "LoadedOperator")
      .def_readonly("op", &LoadedOperator::op)
      .def_readonly("geometry", &LoadedOperator::geometry);

  m.def("state_to_json", &state_to_json, py::arg("state"), py::arg("geometry"));
  m.def("state_from_json", &state_from_json, py::arg("text"));
  m.def("operator_to_json", &operator_to_json, py::arg("op"), py::arg("geometry"));
  m.def("operator_from_json", &operator_from_json, py::arg("text"));
  m.def("load_state_file", &load_state_file, py::arg("path"),
        "Read a state or operator JSON file; operators are converted to states");

  py::register_exception<FileFormatError>(m, "FileFormatError", PyExc_ValueError);

  py::class_<BipartitionRow>(m, "BipartitionRow")
      .def_readonly("sites", &BipartitionRow::sites)
      .def_readonly("deviation", &BipartitionRow::deviation)
      .def_readonly("maximal", &BipartitionRow::maximal)
      .def_readonly("entropy", &BipartitionRow::entropy);

  py::class_<VerificationReport>(m, "VerificationReport")
      .def_readonly("geometry", &VerificationReport::geometry)
      .def_readonly("N", &VerificationReport::N)
      .def_readonly("K", &VerificationReport::K)
      .def_readonly("tolerance", &VerificationReport::tolerance)
      .def_readonly("norm", &VerificationReport::norm)
      .def_readonly("bipartitions", &VerificationReport::bipartitions)
      .def_readonly("multidirectional", &VerificationReport::multidirectional)
      .def_readonly("symmetry_deviation", &VerificationReport::symmetry_deviation)
      .def_readonly("spatially_symmetric", &VerificationReport::spatially_symmetric)
      .def_readonly("has_diagonal_entanglement",
                    &VerificationReport::has_diagonal_entanglement)
      .def_readonly("diagonal_entanglement", &VerificationReport::diagonal_entanglement)
      .def_readonly("ame_checked", &VerificationReport::ame_checked)
      .def_readonly("ame", &VerificationReport::ame)
      .def("all_pass", &VerificationReport::all_pass)
      .def("__bool__", &VerificationReport::all_pass)
      .def("to_text", [](const VerificationReport& r) { return report_to_text(r); })
      .def("to_json", [](const VerificationReport& r) { return report_to_json(r); });

  m.def("verify_state", &verify_state, py::arg("state"), py::arg("geometry"),
        py::arg("tolerance") = kMatrixTol, py::arg("check_ame") = false,
        "Run every bipartition, symmetry and diagonal-entanglement check");
}
