#include "multidir/report.hpp"

#include <algorithm>
#include <cstdio>

#include <json.hpp>

namespace multidir {

namespace {

std::string format_double(double value, int significant) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.*g", significant, value);
  return buffer;
}

std::string pad(std::string text, std::size_t width) {
  if (text.size() < width) text.append(width - text.size(), ' ');
  return text;
}

const char* verdict(bool pass) { return pass ? "pass" : "fail"; }

}  // namespace

bool VerificationReport::all_pass() const {
  return multidirectional && (!ame_checked || ame);
}

VerificationReport verify_state(const PureState& state, const Geometry& geometry,
                                double tolerance, bool check_ame) {
  VerificationReport report;
  report.geometry = geometry.name();
  report.N = state.N;
  report.K = state.K;
  report.tolerance = tolerance;
  report.norm = state.norm();

  const MultidirectionalReport checks = is_multidirectional_unitary(state, geometry, tolerance);
  for (const BipartitionCheck& check : checks.checks) {
    BipartitionRow row;
    row.sites = check.subset;
    row.deviation = check.deviation;
    row.maximal = check.maximal;
    row.entropy = von_neumann_entropy(state, check.subset);
    report.bipartitions.push_back(std::move(row));
  }
  report.multidirectional = checks.multidirectional;

  report.symmetry_deviation = spatial_symmetry_deviation(state, geometry);
  report.spatially_symmetric = report.symmetry_deviation <= tolerance;

  report.has_diagonal_entanglement = geometry.has_diagonals();
  if (report.has_diagonal_entanglement) {
    report.diagonal_entanglement = diagonal_entanglement(state, geometry);
  }

  report.ame_checked = check_ame;
  if (check_ame) report.ame = is_absolutely_maximally_entangled(state, tolerance);
  return report;
}

std::string report_to_text(const VerificationReport& report) {
  std::string out;
  out += "geometry: " + report.geometry + " (K = " + std::to_string(report.K) +
         ", N = " + std::to_string(report.N) + ")\n";
  out += "norm: " + format_double(report.norm, 12) + "\n";
  out += "tolerance: " + format_double(report.tolerance, 6) + "\n\n";

  std::size_t site_width = std::string("bipartition").size();
  for (const BipartitionRow& row : report.bipartitions) {
    site_width = std::max(site_width, format_sites(row.sites).size());
  }
  site_width += 2;
  constexpr std::size_t kNumberWidth = 14;

  out += pad("bipartition", site_width) + pad("deviation", kNumberWidth) +
         pad("entropy", kNumberWidth) + "verdict\n";
  for (const BipartitionRow& row : report.bipartitions) {
    out += pad(format_sites(row.sites), site_width) +
           pad(format_double(row.deviation, 6), kNumberWidth) +
           pad(format_double(row.entropy, 12), kNumberWidth) + verdict(row.maximal) + "\n";
  }
  out += "\n";
  out += std::string("multidirectional unitary: ") + verdict(report.multidirectional) + "\n";
  out += std::string("spatial symmetry: ") + verdict(report.spatially_symmetric) +
         " (deviation " + format_double(report.symmetry_deviation, 6) + ")\n";
  if (report.has_diagonal_entanglement) {
    out += "diagonal entanglement: " + format_double(report.diagonal_entanglement, 12) + "\n";
  }
  if (report.ame_checked) {
    out += std::string("absolutely maximally entangled: ") + verdict(report.ame) + "\n";
  }
  return out;
}

std::string report_to_json(const VerificationReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const BipartitionRow& row : report.bipartitions) {
    nlohmann::json sites = nlohmann::json::array();
    for (int site : row.sites) sites.push_back(site + 1);
    rows.push_back(nlohmann::json{{"deviation", row.deviation},
                                  {"entropy", row.entropy},
                                  {"maximal", row.maximal},
                                  {"sites", sites}});
  }
  nlohmann::json doc{{"K", report.K},
                     {"N", report.N},
                     {"bipartitions", rows},
                     {"geometry", report.geometry},
                     {"multidirectional", report.multidirectional},
                     {"norm", report.norm},
                     {"spatial_symmetry_deviation", report.symmetry_deviation},
                     {"spatially_symmetric", report.spatially_symmetric},
                     {"tolerance", report.tolerance}};
  if (report.has_diagonal_entanglement) {
    doc["diagonal_entanglement"] = report.diagonal_entanglement;
  }
  if (report.ame_checked) doc["ame"] = report.ame;
  return doc.dump(2) + "\n";
}

}  // namespace multidir
