#include "multidir/geometry.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace multidir {

SitePermutation SitePermutation::identity(int n) {
  SitePermutation p;
  p.image.resize(n);
  for (int j = 0; j < n; ++j) p.image[j] = j;
  return p;
}

SitePermutation SitePermutation::inverse() const {
  SitePermutation inv;
  inv.image.resize(image.size());
  for (int j = 0; j < size(); ++j) inv.image[image[j]] = j;
  return inv;
}

SitePermutation operator*(const SitePermutation& g, const SitePermutation& h) {
  if (g.size() != h.size()) throw std::invalid_argument("permutation size mismatch");
  SitePermutation gh;
  gh.image.resize(g.size());
  for (int j = 0; j < g.size(); ++j) gh.image[j] = g(h(j));
  return gh;
}

std::vector<SitePermutation> group_closure(std::vector<SitePermutation> generators) {
  if (generators.empty()) return {};
  std::set<SitePermutation> seen(generators.begin(), generators.end());
  seen.insert(SitePermutation::identity(generators.front().size()));
  std::vector<SitePermutation> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<SitePermutation> next;
    for (const auto& g : frontier) {
      for (const auto& h : generators) {
        SitePermutation gh = h * g;
        if (seen.insert(gh).second) next.push_back(gh);
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

int Geometry::antipode(int site) const {
  for (const auto& [a, b] : diagonals) {
    if (a == site) return b;
    if (b == site) return a;
  }
  throw std::invalid_argument("site " + std::to_string(site + 1) + " lies on no diagonal");
}

std::string Geometry::name() const {
  switch (kind) {
    case GeometryKind::Square: return "square";
    case GeometryKind::Hexagon: return "hexagon";
    case GeometryKind::Polygon: return "polygon:" + std::to_string(sites);
    case GeometryKind::Cube: return "cube";
    case GeometryKind::Octahedron: return "octahedron";
    case GeometryKind::Tetrahedron: return "tetrahedron";
  }
  throw std::logic_error("unknown geometry kind");
}

namespace {

SitePermutation perm_from_1based(std::vector<int> image) {
  for (int& v : image) --v;
  return SitePermutation{std::move(image)};
}

std::vector<std::pair<int, int>> antipodal_diagonals(int sites) {
  std::vector<std::pair<int, int>> d;
  for (int j = 0; j < sites / 2; ++j) d.emplace_back(j, j + sites / 2);
  return d;
}

Geometry make_polygon_like(GeometryKind kind, int sites) {
  Geometry g;
  g.kind = kind;
  g.sites = sites;
  g.diagonals = antipodal_diagonals(sites);
  // rotation by one step and the reflection fixing site 1
  SitePermutation rot, refl;
  rot.image.resize(sites);
  refl.image.resize(sites);
  for (int j = 0; j < sites; ++j) {
    rot.image[j] = (j + 1) % sites;
    refl.image[j] = (sites - j) % sites;
  }
  g.generators = {rot, refl};
  g.group = group_closure(g.generators);
  // the K/2 runs of K/2 consecutive sites starting at sites 1..K/2
  for (int start = 0; start < sites / 2; ++start) {
    std::vector<int> run;
    for (int t = 0; t < sites / 2; ++t) run.push_back(start + t);
    std::sort(run.begin(), run.end());
    g.bipartitions.push_back(std::move(run));
  }
  return g;
}

Geometry make_square() {
  Geometry g = make_polygon_like(GeometryKind::Square, 4);
  // same partitions as the generic polygon, with the conventional representatives
  g.bipartitions = {{0, 1}, {0, 3}};
  return g;
}

Geometry make_cube() {
  Geometry g;
  g.kind = GeometryKind::Cube;
  g.sites = 8;
  g.diagonals = antipodal_diagonals(8);
  // Vertex labels: 1,2,3,4 walk around the input face, 5,6,7,8 around the
  // output face, with body diagonals j <-> j+4 and vertical edges 1-7, 2-8,
  // 3-5, 4-6. Generators: two face rotations plus the point inversion.
  SitePermutation rot_z = perm_from_1based({2, 8, 5, 3, 6, 4, 1, 7});
  SitePermutation rot_x = perm_from_1based({4, 3, 5, 6, 8, 7, 1, 2});
  SitePermutation inversion = perm_from_1based({5, 6, 7, 8, 1, 2, 3, 4});
  g.generators = {rot_z, rot_x, inversion};
  g.group = group_closure(g.generators);
  g.bipartitions = {{0, 1, 2, 3}, {0, 1, 6, 7}, {1, 2, 4, 7}};
  return g;
}

Geometry make_octahedron() {
  Geometry g;
  g.kind = GeometryKind::Octahedron;
  g.sites = 6;
  g.diagonals = antipodal_diagonals(6);
  // Every permutation preserving the three diagonals is a symmetry (order 48):
  // generated by one diagonal flip, the cyclic rotation of the diagonals and a
  // swap of two diagonals.
  SitePermutation flip = perm_from_1based({4, 2, 3, 1, 5, 6});
  SitePermutation cycle = perm_from_1based({2, 3, 1, 5, 6, 4});
  SitePermutation swap = perm_from_1based({2, 1, 3, 5, 4, 6});
  g.generators = {flip, cycle, swap};
  g.group = group_closure(g.generators);
  // subsets containing site 1 that pick one endpoint per diagonal
  g.bipartitions = {{0, 1, 2}, {0, 1, 5}, {0, 2, 4}, {0, 4, 5}};
  return g;
}

Geometry make_tetrahedron() {
  Geometry g;
  g.kind = GeometryKind::Tetrahedron;
  g.sites = 4;
  g.diagonals = {};  // no antipodal pairing
  SitePermutation swap = perm_from_1based({2, 1, 3, 4});
  SitePermutation cycle = perm_from_1based({2, 3, 4, 1});
  g.generators = {swap, cycle};
  g.group = group_closure(g.generators);
  g.bipartitions = {{0, 1}, {0, 2}, {0, 3}};
  return g;
}

}  // namespace

Geometry build_geometry(GeometryKind kind, int polygon_sites) {
  switch (kind) {
    case GeometryKind::Square: return make_square();
    case GeometryKind::Hexagon: return make_polygon_like(GeometryKind::Hexagon, 6);
    case GeometryKind::Polygon:
      if (polygon_sites < 4 || polygon_sites % 2 != 0)
        throw std::invalid_argument("polygon needs an even number of sites, at least 4");
      return make_polygon_like(GeometryKind::Polygon, polygon_sites);
    case GeometryKind::Cube: return make_cube();
    case GeometryKind::Octahedron: return make_octahedron();
    case GeometryKind::Tetrahedron: return make_tetrahedron();
  }
  throw std::invalid_argument("unknown geometry kind");
}

Geometry build_geometry(const std::string& name) {
  if (name == "square") return build_geometry(GeometryKind::Square);
  if (name == "hexagon") return build_geometry(GeometryKind::Hexagon);
  if (name == "cube") return build_geometry(GeometryKind::Cube);
  if (name == "octahedron") return build_geometry(GeometryKind::Octahedron);
  if (name == "tetrahedron") return build_geometry(GeometryKind::Tetrahedron);
  const std::string prefix = "polygon:";
  if (name.rfind(prefix, 0) == 0) {
    int sites = 0;
    try {
      sites = std::stoi(name.substr(prefix.size()));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad polygon site count in '" + name + "'");
    }
    return build_geometry(GeometryKind::Polygon, sites);
  }
  throw std::invalid_argument("unknown geometry '" + name + "'");
}

std::vector<std::vector<int>> subset_orbit(const Geometry& geometry, const std::vector<int>& subset) {
  std::set<std::vector<int>> orbit;
  for (const auto& g : geometry.group) {
    std::vector<int> image;
    image.reserve(subset.size());
    for (int s : subset) image.push_back(g(s));
    std::sort(image.begin(), image.end());
    orbit.insert(std::move(image));
  }
  return {orbit.begin(), orbit.end()};
}

std::vector<int> transposed_positions(const Geometry& geometry, const std::vector<int>& subset) {
  if (!geometry.has_diagonals())
    throw std::invalid_argument(geometry.name() + " has no diagonals");
  const int h = geometry.half();
  if (static_cast<int>(subset.size()) != h)
    throw std::invalid_argument("subset must contain one endpoint per diagonal");
  std::vector<bool> in_subset(geometry.sites, false);
  for (int s : subset) in_subset.at(s) = true;
  std::vector<int> positions;
  for (int i = 0; i < h; ++i) {
    const bool near = in_subset[geometry.diagonals[i].first];
    const bool far = in_subset[geometry.diagonals[i].second];
    if (near == far)
      throw std::invalid_argument("subset " + format_sites(subset) +
                                  " does not pick one endpoint per diagonal");
    if (far) positions.push_back(i);
  }
  return positions;
}

bool is_allowed_bipartition(const Geometry& geometry, const std::vector<int>& subset) {
  std::vector<int> sorted = subset;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> complement;
  std::vector<bool> in_subset(geometry.sites, false);
  for (int s : sorted) {
    if (s < 0 || s >= geometry.sites) return false;
    in_subset[s] = true;
  }
  for (int s = 0; s < geometry.sites; ++s)
    if (!in_subset[s]) complement.push_back(s);
  for (const auto& b : geometry.bipartitions)
    if (b == sorted || b == complement) return true;
  return false;
}

std::string format_sites(const std::vector<int>& subset) {
  std::string out = "{";
  for (size_t i = 0; i < subset.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(subset[i] + 1);
  }
  out += "}";
  return out;
}

}  // namespace multidir
