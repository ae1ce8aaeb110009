#include "multidir/classical.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <future>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace multidir {

namespace {

void require_diagonals(const Geometry& geometry) {
  if (!geometry.has_diagonals()) {
    throw std::invalid_argument("deterministic solutions need an arrangement with diagonals; " +
                                geometry.name() + " has none");
  }
}

void check_values(const Configuration& config, const Geometry& geometry, int local_dim) {
  if (config.site_count() != geometry.sites) {
    throw std::invalid_argument("configuration has " + std::to_string(config.site_count()) +
                                " sites; " + geometry.name() + " needs " +
                                std::to_string(geometry.sites));
  }
  for (int v : config.values) {
    if (v < 1 || (local_dim > 0 && v > local_dim)) {
      throw std::invalid_argument("configuration value " + std::to_string(v) +
                                  " outside 1.." + std::to_string(local_dim));
    }
  }
}

// Input-half tuple packed big-endian with site 0 most significant.
long long input_key(const Configuration& config, int local_dim) {
  long long key = 0;
  for (int j = 0; j < config.half(); ++j) key = key * local_dim + (config.values[j] - 1);
  return key;
}

long long output_key(const Configuration& config, int local_dim) {
  long long key = 0;
  for (int j = config.half(); j < config.site_count(); ++j) {
    key = key * local_dim + (config.values[j] - 1);
  }
  return key;
}

std::vector<long long> sorted_input_keys(const Orbit& orbit, int local_dim) {
  std::vector<long long> keys;
  keys.reserve(orbit.members.size());
  for (const Configuration& member : orbit.members) keys.push_back(input_key(member, local_dim));
  std::sort(keys.begin(), keys.end());
  return keys;
}

// Largest value mentioned by any member; lets the overlap tests pick a radix
// without being told N.
int value_radix(const Orbit& orbit) {
  int radix = 1;
  for (const Configuration& member : orbit.members) {
    for (int v : member.values) radix = std::max(radix, v);
  }
  return radix;
}

std::string render_half(const std::vector<int>& half_values, bool wide) {
  std::string text;
  for (std::size_t i = 0; i < half_values.size(); ++i) {
    if (wide && i > 0) text += ',';
    text += wide ? std::to_string(half_values[i]) : std::string(1, char('0' + half_values[i]));
  }
  return text;
}

std::pair<int, std::string> solution_key(const ClassicalSolution& solution) {
  return {solution.non_diagonal_orbit_count(), solution.compact_notation()};
}

void sort_canonically(std::vector<ClassicalSolution>& solutions) {
  std::sort(solutions.begin(), solutions.end(),
            [](const ClassicalSolution& a, const ClassicalSolution& b) {
              return solution_key(a) < solution_key(b);
            });
}

// Every value permutation of {1..N} in lexicographic order.
std::vector<std::vector<int>> all_value_permutations(int local_dim) {
  std::vector<int> image(local_dim);
  std::iota(image.begin(), image.end(), 1);
  std::vector<std::vector<int>> permutations;
  do {
    permutations.push_back(image);
  } while (std::next_permutation(image.begin(), image.end()));
  return permutations;
}

// Exhaustive exact-cover search: universe = input tuples, rows = orbits.
// Collects every cover (as row-index sets) that also realizes each output
// tuple exactly once. Branches on the uncovered tuple with the fewest
// remaining candidate rows; fully deterministic.
class CoverSearch {
 public:
  CoverSearch(const std::vector<Orbit>* rows, const std::vector<std::vector<long long>>* row_inputs,
              const std::vector<std::vector<int>>* tuple_rows, long long universe, int local_dim)
      : rows_(rows),
        row_inputs_(row_inputs),
        tuple_rows_(tuple_rows),
        local_dim_(local_dim),
        covered_(static_cast<std::size_t>(universe), 0) {}

  // Explores the subtree where `forced_row` is chosen first (used to split the
  // top level across threads); forced_row < 0 searches the whole space.
  std::vector<std::vector<int>> run(int forced_row) {
    results_.clear();
    if (forced_row >= 0) {
      choose(forced_row);
      recurse();
      unchoose(forced_row);
    } else {
      recurse();
    }
    return results_;
  }

  // The deterministic branching tuple at the root, with its candidate rows.
  std::vector<int> root_branches() const {
    long long tuple = -1;
    std::vector<int> candidates;
    pick_tuple(tuple, candidates);
    return tuple < 0 ? std::vector<int>{} : candidates;
  }

 private:
  bool row_available(int row) const {
    for (long long key : (*row_inputs_)[row]) {
      if (covered_[static_cast<std::size_t>(key)]) return false;
    }
    return true;
  }

  void pick_tuple(long long& best_tuple, std::vector<int>& best_rows) const {
    best_tuple = -1;
    for (long long t = 0; t < static_cast<long long>(covered_.size()); ++t) {
      if (covered_[static_cast<std::size_t>(t)]) continue;
      std::vector<int> candidates;
      for (int row : (*tuple_rows_)[static_cast<std::size_t>(t)]) {
        if (row_available(row)) candidates.push_back(row);
      }
      if (best_tuple < 0 || candidates.size() < best_rows.size()) {
        best_tuple = t;
        best_rows = std::move(candidates);
        if (best_rows.empty()) return;  // dead end; no smaller count exists
      }
    }
  }

  void choose(int row) {
    for (long long key : (*row_inputs_)[row]) covered_[static_cast<std::size_t>(key)] = 1;
    chosen_.push_back(row);
  }

  void unchoose(int row) {
    chosen_.pop_back();
    for (long long key : (*row_inputs_)[row]) covered_[static_cast<std::size_t>(key)] = 0;
  }

  bool outputs_bijective() const {
    std::vector<char> seen(covered_.size(), 0);
    for (int row : chosen_) {
      for (const Configuration& member : (*rows_)[row].members) {
        std::size_t key = static_cast<std::size_t>(output_key(member, local_dim_));
        if (seen[key]) return false;
        seen[key] = 1;
      }
    }
    return true;
  }

  void recurse() {
    long long tuple = -1;
    std::vector<int> candidates;
    pick_tuple(tuple, candidates);
    if (tuple < 0) {
      if (outputs_bijective()) {
        std::vector<int> cover = chosen_;
        std::sort(cover.begin(), cover.end());
        results_.push_back(std::move(cover));
      }
      return;
    }
    for (int row : candidates) {
      choose(row);
      recurse();
      unchoose(row);
    }
  }

  const std::vector<Orbit>* rows_;
  const std::vector<std::vector<long long>>* row_inputs_;
  const std::vector<std::vector<int>>* tuple_rows_;
  int local_dim_;
  std::vector<char> covered_;
  std::vector<int> chosen_;
  std::vector<std::vector<int>> results_;
};

}  // namespace

// --- configurations ----------------------------------------------------------

std::vector<int> Configuration::input_half() const {
  return std::vector<int>(values.begin(), values.begin() + half());
}

std::vector<int> Configuration::output_half() const {
  return std::vector<int>(values.begin() + half(), values.end());
}

bool Configuration::diagonally_identical() const {
  for (int j = 0; j < half(); ++j) {
    if (values[j] != values[j + half()]) return false;
  }
  return true;
}

std::string render_compact_label(const Configuration& config) {
  bool wide = *std::max_element(config.values.begin(), config.values.end()) > 9;
  std::string separator = (config.half() > 2 || wide) ? " " : "";
  return "[" + render_half(config.input_half(), wide) + separator +
         render_half(config.output_half(), wide) + "]";
}

Configuration parse_compact_label(const std::string& label, const Geometry& geometry,
                                  int local_dim) {
  std::string body = label;
  if (body.size() >= 2 && body.front() == '[' && body.back() == ']') {
    body = body.substr(1, body.size() - 2);
  }
  Configuration config;
  if (body.find(',') != std::string::npos) {
    std::string token;
    auto flush = [&]() {
      if (token.empty()) return;
      config.values.push_back(std::stoi(token));
      token.clear();
    };
    for (char c : body) {
      if (std::isdigit(static_cast<unsigned char>(c))) {
        token += c;
      } else if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
        flush();
      } else {
        throw std::invalid_argument("cannot parse label '" + label + "'");
      }
    }
    flush();
  } else {
    for (char c : body) {
      if (std::isspace(static_cast<unsigned char>(c))) continue;
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw std::invalid_argument("cannot parse label '" + label + "'");
      }
      config.values.push_back(c - '0');
    }
  }
  check_values(config, geometry, local_dim);
  return config;
}

// --- orbits -------------------------------------------------------------------

Orbit orbit_of(const Configuration& config, const Geometry& geometry) {
  require_diagonals(geometry);
  check_values(config, geometry, 0);
  const int sites = geometry.sites;
  std::vector<Configuration> members;
  members.reserve(geometry.group.size());
  for (const SitePermutation& g : geometry.group) {
    Configuration image;
    image.values.assign(sites, 0);
    for (int j = 0; j < sites; ++j) image.values[g(j)] = config.values[j];
    members.push_back(std::move(image));
  }
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());

  Orbit orbit;
  orbit.diagonally_identical = members.front().diagonally_identical();
  for (const Configuration& member : members) {
    if (member.diagonally_identical() != orbit.diagonally_identical) {
      throw std::logic_error("orbit mixes diagonally identical and non-identical members");
    }
  }
  orbit.label = render_compact_label(members.front());
  orbit.members = std::move(members);
  return orbit;
}

bool is_non_overlapping(const Orbit& orbit) {
  int radix = value_radix(orbit);
  std::vector<long long> keys = sorted_input_keys(orbit, radix);
  return std::adjacent_find(keys.begin(), keys.end()) == keys.end();
}

bool mutually_non_overlapping(const Orbit& first, const Orbit& second) {
  int radix = std::max(value_radix(first), value_radix(second));
  std::vector<long long> a = sorted_input_keys(first, radix);
  std::vector<long long> b = sorted_input_keys(second, radix);
  std::vector<long long> common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
  return common.empty();
}

bool is_complete(const std::vector<Orbit>& orbits, const Geometry& geometry, int local_dim) {
  require_diagonals(geometry);
  long long universe = pow_ll(local_dim, geometry.half());
  std::vector<char> covered(static_cast<std::size_t>(universe), 0);
  for (const Orbit& orbit : orbits) {
    for (const Configuration& member : orbit.members) {
      check_values(member, geometry, local_dim);
      covered[static_cast<std::size_t>(input_key(member, local_dim))] = 1;
    }
  }
  return std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });
}

// --- solutions ----------------------------------------------------------------

int ClassicalSolution::non_diagonal_orbit_count() const {
  return static_cast<int>(std::count_if(orbits.begin(), orbits.end(), [](const Orbit& orbit) {
    return !orbit.diagonally_identical;
  }));
}

std::string ClassicalSolution::compact_notation() const {
  std::string text;
  for (const Orbit& orbit : orbits) {
    if (orbit.diagonally_identical) continue;
    if (!text.empty()) text += ',';
    text += orbit.label;
  }
  return text.empty() ? "Identity" : text;
}

ClassicalSolution make_classical_solution(std::vector<Orbit> orbits, const Geometry& geometry,
                                          int local_dim) {
  require_diagonals(geometry);
  long long universe = pow_ll(local_dim, geometry.half());

  std::vector<char> inputs(static_cast<std::size_t>(universe), 0);
  std::vector<char> outputs(static_cast<std::size_t>(universe), 0);
  for (const Orbit& orbit : orbits) {
    if (orbit.members.empty()) throw std::invalid_argument("empty orbit in solution");
    if (!is_non_overlapping(orbit)) {
      throw std::invalid_argument("orbit " + orbit.label + " repeats an input tuple");
    }
    for (const Configuration& member : orbit.members) {
      check_values(member, geometry, local_dim);
      std::size_t in = static_cast<std::size_t>(input_key(member, local_dim));
      std::size_t out = static_cast<std::size_t>(output_key(member, local_dim));
      if (inputs[in]) {
        throw std::invalid_argument("input tuple covered twice (orbit " + orbit.label + ")");
      }
      if (outputs[out]) {
        throw std::invalid_argument("output tuple covered twice (orbit " + orbit.label + ")");
      }
      inputs[in] = 1;
      outputs[out] = 1;
    }
  }
  if (!std::all_of(inputs.begin(), inputs.end(), [](char c) { return c != 0; })) {
    throw std::invalid_argument("input tuples are not all covered; solution is incomplete");
  }
  // Covering all inputs exactly once with equally many outputs marked once
  // forces the output side to be complete as well; keep the direct check.
  if (!std::all_of(outputs.begin(), outputs.end(), [](char c) { return c != 0; })) {
    throw std::invalid_argument("output tuples do not form a bijection");
  }

  std::sort(orbits.begin(), orbits.end(), [](const Orbit& a, const Orbit& b) {
    return std::make_pair(a.diagonally_identical, a.label) <
           std::make_pair(b.diagonally_identical, b.label);
  });

  ClassicalSolution solution;
  solution.kind = geometry.kind;
  solution.sites = geometry.sites;
  solution.N = local_dim;
  for (const Orbit& orbit : orbits) {
    solution.support.insert(solution.support.end(), orbit.members.begin(), orbit.members.end());
  }
  std::sort(solution.support.begin(), solution.support.end());
  solution.orbits = std::move(orbits);
  return solution;
}

ClassicalSolution complete_with_diagonal_orbits(const std::vector<Orbit>& orbits,
                                                const Geometry& geometry, int local_dim) {
  require_diagonals(geometry);
  long long universe = pow_ll(local_dim, geometry.half());

  std::vector<char> covered(static_cast<std::size_t>(universe), 0);
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    if (!is_non_overlapping(orbits[i])) {
      throw std::invalid_argument("orbit " + orbits[i].label + " repeats an input tuple");
    }
    for (std::size_t j = i + 1; j < orbits.size(); ++j) {
      if (!mutually_non_overlapping(orbits[i], orbits[j])) {
        throw std::invalid_argument("orbits " + orbits[i].label + " and " + orbits[j].label +
                                    " overlap on the input half");
      }
    }
    for (const Configuration& member : orbits[i].members) {
      check_values(member, geometry, local_dim);
      covered[static_cast<std::size_t>(input_key(member, local_dim))] = 1;
    }
  }

  std::vector<Orbit> full = orbits;
  for (long long tuple = 0; tuple < universe; ++tuple) {
    if (covered[static_cast<std::size_t>(tuple)]) continue;
    std::vector<int> half_values = unpack_config(tuple, local_dim, geometry.half());
    Configuration diagonal;
    for (int v : half_values) diagonal.values.push_back(v + 1);
    for (int v : half_values) diagonal.values.push_back(v + 1);
    Orbit orbit = orbit_of(diagonal, geometry);
    for (const Configuration& member : orbit.members) {
      std::size_t key = static_cast<std::size_t>(input_key(member, local_dim));
      if (covered[key]) {
        throw std::invalid_argument("diagonal completion of input tuple collides with orbit " +
                                    orbit.label);
      }
      covered[key] = 1;
    }
    full.push_back(std::move(orbit));
  }
  return make_classical_solution(std::move(full), geometry, local_dim);
}

ClassicalSolution expand_compact_notation(const std::vector<std::string>& labels,
                                          const Geometry& geometry, int local_dim) {
  std::vector<Orbit> orbits;
  orbits.reserve(labels.size());
  for (const std::string& label : labels) {
    orbits.push_back(orbit_of(parse_compact_label(label, geometry, local_dim), geometry));
  }
  return complete_with_diagonal_orbits(orbits, geometry, local_dim);
}

ClassicalSolution expand_compact_notation(const std::string& labels, const Geometry& geometry,
                                          int local_dim) {
  std::vector<std::string> pieces;
  std::string current;
  int depth = 0;
  for (char c : labels) {
    if (c == '[') ++depth;
    if (c == ']') --depth;
    if (c == ',' && depth == 0) {
      pieces.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  pieces.push_back(current);

  std::vector<std::string> cleaned;
  for (std::string& piece : pieces) {
    std::size_t first = piece.find_first_not_of(" \t");
    std::size_t last = piece.find_last_not_of(" \t");
    if (first == std::string::npos) continue;
    cleaned.push_back(piece.substr(first, last - first + 1));
  }
  if (cleaned.size() == 1 && cleaned.front() == "Identity") cleaned.clear();
  return expand_compact_notation(cleaned, geometry, local_dim);
}

PureState solution_to_state(const ClassicalSolution& solution) {
  PureState state = PureState::zero(solution.N, solution.sites);
  double amplitude = std::pow(static_cast<double>(solution.N), -solution.sites / 4.0);
  for (const Configuration& config : solution.support) {
    std::vector<int> zero_based(config.values.size());
    for (std::size_t j = 0; j < config.values.size(); ++j) zero_based[j] = config.values[j] - 1;
    state.at(zero_based) = amplitude;
  }
  return state;
}

ClassicalSolution solution_in_geometry(const ClassicalSolution& solution, const Geometry& target) {
  require_diagonals(target);
  if (target.sites != solution.sites) {
    throw std::invalid_argument("target arrangement has " + std::to_string(target.sites) +
                                " sites; solution has " + std::to_string(solution.sites));
  }
  std::vector<Orbit> orbits;
  std::vector<Configuration> remaining = solution.support;  // sorted
  while (!remaining.empty()) {
    Orbit orbit = orbit_of(remaining.front(), target);
    for (const Configuration& member : orbit.members) {
      if (!std::binary_search(solution.support.begin(), solution.support.end(), member)) {
        throw std::invalid_argument("support is not symmetric under " + target.name());
      }
    }
    std::vector<Configuration> rest;
    std::set_difference(remaining.begin(), remaining.end(), orbit.members.begin(),
                        orbit.members.end(), std::back_inserter(rest));
    remaining = std::move(rest);
    orbits.push_back(std::move(orbit));
  }
  return make_classical_solution(std::move(orbits), target, solution.N);
}

std::vector<ClassicalSolution> enumerate_solutions(const Geometry& geometry, int local_dim,
                                                   int jobs) {
  require_diagonals(geometry);
  if (local_dim < 1) throw std::invalid_argument("local dimension must be at least 1");
  long long universe = 1;
  for (int j = 0; j < geometry.half(); ++j) {
    universe *= local_dim;
    if (universe > 4096) {
      throw std::invalid_argument("input-tuple count exceeds the exhaustive-search guard (4096)");
    }
  }
  if (local_dim == 1) {
    return {complete_with_diagonal_orbits({}, geometry, 1)};
  }

  // Orbits in order of their least member; keep those usable in a solution.
  const long long config_count = universe * universe;
  std::vector<char> seen(static_cast<std::size_t>(config_count), 0);
  std::vector<Orbit> rows;
  for (long long index = 0; index < config_count; ++index) {
    if (seen[static_cast<std::size_t>(index)]) continue;
    std::vector<int> digits = unpack_config(index, local_dim, geometry.sites);
    Configuration config;
    for (int d : digits) config.values.push_back(d + 1);
    Orbit orbit = orbit_of(config, geometry);
    for (const Configuration& member : orbit.members) {
      std::vector<int> member_digits(member.values.size());
      for (std::size_t j = 0; j < member.values.size(); ++j) {
        member_digits[j] = member.values[j] - 1;
      }
      seen[static_cast<std::size_t>(pack_config(member_digits, local_dim))] = 1;
    }
    if (is_non_overlapping(orbit)) rows.push_back(std::move(orbit));
  }

  std::vector<std::vector<long long>> row_inputs(rows.size());
  std::vector<std::vector<int>> tuple_rows(static_cast<std::size_t>(universe));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (const Configuration& member : rows[r].members) {
      long long key = input_key(member, local_dim);
      row_inputs[r].push_back(key);
      tuple_rows[static_cast<std::size_t>(key)].push_back(static_cast<int>(r));
    }
  }

  std::vector<std::vector<int>> covers;
  CoverSearch search(&rows, &row_inputs, &tuple_rows, universe, local_dim);
  if (jobs <= 1) {
    covers = search.run(-1);
  } else {
    std::vector<int> branches = search.root_branches();
    std::vector<std::future<std::vector<std::vector<int>>>> futures;
    futures.reserve(branches.size());
    for (int branch : branches) {
      futures.push_back(std::async(std::launch::async, [&, branch]() {
        CoverSearch worker(&rows, &row_inputs, &tuple_rows, universe, local_dim);
        return worker.run(branch);
      }));
    }
    for (auto& future : futures) {
      std::vector<std::vector<int>> part = future.get();
      covers.insert(covers.end(), part.begin(), part.end());
    }
  }

  std::vector<ClassicalSolution> solutions;
  solutions.reserve(covers.size());
  for (const std::vector<int>& cover : covers) {
    std::vector<Orbit> chosen;
    chosen.reserve(cover.size());
    for (int row : cover) chosen.push_back(rows[row]);
    solutions.push_back(make_classical_solution(std::move(chosen), geometry, local_dim));
  }
  sort_canonically(solutions);
  return solutions;
}

// --- equivalence and classification --------------------------------------------

std::optional<std::vector<std::vector<int>>> strong_equivalence(const ClassicalSolution& from,
                                                                const ClassicalSolution& to) {
  if (from.kind != to.kind || from.sites != to.sites || from.N != to.N) {
    throw std::invalid_argument("equivalence needs matching arrangement and local dimension");
  }
  if (from.support.size() != to.support.size()) return std::nullopt;
  const int sites = from.sites;
  const int n = from.N;
  const std::size_t count = from.support.size();

  // Per-site value frequencies are invariant under any relabeling witness.
  auto frequencies = [&](const ClassicalSolution& solution) {
    std::vector<std::vector<int>> freq(sites, std::vector<int>(n, 0));
    for (const Configuration& config : solution.support) {
      for (int j = 0; j < sites; ++j) ++freq[j][config.values[j] - 1];
    }
    return freq;
  };
  std::vector<std::vector<int>> freq_from = frequencies(from);
  std::vector<std::vector<int>> freq_to = frequencies(to);

  std::vector<std::vector<int>> permutations = all_value_permutations(n);
  std::vector<std::vector<const std::vector<int>*>> candidates(sites);
  for (int j = 0; j < sites; ++j) {
    for (const std::vector<int>& image : permutations) {
      bool compatible = true;
      for (int v = 0; v < n && compatible; ++v) {
        compatible = freq_from[j][v] == freq_to[j][image[v] - 1];
      }
      if (compatible) candidates[j].push_back(&image);
    }
    if (candidates[j].empty()) return std::nullopt;
  }

  // Sorted packed prefixes of the target support, one list per depth.
  std::vector<std::vector<unsigned long long>> target_prefixes(sites + 1);
  target_prefixes[0].assign(count, 0);
  for (int depth = 1; depth <= sites; ++depth) {
    target_prefixes[depth].reserve(count);
    for (const Configuration& config : to.support) {
      unsigned long long key = 0;
      for (int j = 0; j < depth; ++j) {
        key = key * static_cast<unsigned long long>(n) +
              static_cast<unsigned long long>(config.values[j] - 1);
      }
      target_prefixes[depth].push_back(key);
    }
    std::sort(target_prefixes[depth].begin(), target_prefixes[depth].end());
  }

  std::vector<std::vector<unsigned long long>> mapped(sites + 1,
                                                      std::vector<unsigned long long>(count, 0));
  std::vector<const std::vector<int>*> chosen(sites, nullptr);
  std::vector<unsigned long long> scratch(count);

  auto dfs = [&](auto&& self, int depth) -> bool {
    if (depth == sites) return true;
    for (const std::vector<int>* image : candidates[depth]) {
      for (std::size_t i = 0; i < count; ++i) {
        int value = from.support[i].values[depth];
        mapped[depth + 1][i] = mapped[depth][i] * static_cast<unsigned long long>(n) +
                               static_cast<unsigned long long>((*image)[value - 1] - 1);
      }
      scratch = mapped[depth + 1];
      std::sort(scratch.begin(), scratch.end());
      if (scratch == target_prefixes[depth + 1]) {
        chosen[depth] = image;
        if (self(self, depth + 1)) return true;
      }
    }
    return false;
  };

  if (!dfs(dfs, 0)) return std::nullopt;
  std::vector<std::vector<int>> witness;
  witness.reserve(sites);
  for (const std::vector<int>* image : chosen) witness.push_back(*image);
  return witness;
}

std::optional<std::vector<int>> weak_equivalence(const ClassicalSolution& from,
                                                 const ClassicalSolution& to) {
  if (from.kind != to.kind || from.sites != to.sites || from.N != to.N) {
    throw std::invalid_argument("equivalence needs matching arrangement and local dimension");
  }
  if (from.support.size() != to.support.size()) return std::nullopt;
  for (const std::vector<int>& image : all_value_permutations(from.N)) {
    std::vector<Configuration> mapped;
    mapped.reserve(from.support.size());
    for (const Configuration& config : from.support) {
      Configuration relabeled;
      relabeled.values.reserve(config.values.size());
      for (int v : config.values) relabeled.values.push_back(image[v - 1]);
      mapped.push_back(std::move(relabeled));
    }
    std::sort(mapped.begin(), mapped.end());
    if (mapped == to.support) return image;
  }
  return std::nullopt;
}

std::vector<SolutionClass> classify(const Geometry& geometry, int local_dim, int jobs) {
  std::vector<ClassicalSolution> solutions = enumerate_solutions(geometry, local_dim, jobs);
  std::vector<std::vector<int>> member_indices;

  for (std::size_t i = 0; i < solutions.size(); ++i) {
    int home = -1;
    if (jobs > 1 && member_indices.size() > 1) {
      std::vector<std::future<bool>> futures;
      futures.reserve(member_indices.size());
      for (const std::vector<int>& members : member_indices) {
        int anchor = members.front();
        futures.push_back(std::async(std::launch::async, [&, anchor]() {
          return strong_equivalence(solutions[i], solutions[anchor]).has_value();
        }));
      }
      for (std::size_t c = 0; c < futures.size(); ++c) {
        if (futures[c].get() && home < 0) home = static_cast<int>(c);
      }
    } else {
      for (std::size_t c = 0; c < member_indices.size(); ++c) {
        if (strong_equivalence(solutions[i], solutions[member_indices[c].front()]).has_value()) {
          home = static_cast<int>(c);
          break;
        }
      }
    }
    if (home < 0) {
      member_indices.push_back({static_cast<int>(i)});
    } else {
      member_indices[static_cast<std::size_t>(home)].push_back(static_cast<int>(i));
    }
  }

  std::vector<SolutionClass> classes;
  classes.reserve(member_indices.size());
  for (const std::vector<int>& members : member_indices) {
    SolutionClass group;
    // Solutions arrive in canonical order, so the first member is the one
    // with the fewest non-diagonal orbits (ties already broken by notation).
    group.representative = solutions[members.front()];
    for (int index : members) group.members.push_back(solutions[index]);
    classes.push_back(std::move(group));
  }
  std::sort(classes.begin(), classes.end(), [](const SolutionClass& a, const SolutionClass& b) {
    return solution_key(a.representative) < solution_key(b.representative);
  });
  return classes;
}

std::vector<int> octahedral_hexagonal_map(int local_dim, int jobs) {
  Geometry octahedron = build_geometry(GeometryKind::Octahedron);
  Geometry hexagon = build_geometry(GeometryKind::Hexagon);
  std::vector<SolutionClass> octa_classes = classify(octahedron, local_dim, jobs);
  std::vector<SolutionClass> hexa_classes = classify(hexagon, local_dim, jobs);

  std::vector<int> map;
  map.reserve(octa_classes.size());
  for (const SolutionClass& octa : octa_classes) {
    ClassicalSolution as_hexagonal = solution_in_geometry(octa.representative, hexagon);
    int match = -1;
    for (std::size_t j = 0; j < hexa_classes.size(); ++j) {
      if (strong_equivalence(as_hexagonal, hexa_classes[j].representative).has_value()) {
        if (match >= 0) throw std::runtime_error("octahedral class matches two hexagonal classes");
        match = static_cast<int>(j);
      }
    }
    if (match < 0) throw std::runtime_error("octahedral class has no hexagonal class");
    map.push_back(match);
  }
  return map;
}

}  // namespace multidir
