#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace multidir {

// Site arrangements supported by the library. Every arrangement has an even
// number of sites K; all but the tetrahedron pair the sites into K/2 diagonals
// (site j with its antipode j + K/2).
enum class GeometryKind { Square, Hexagon, Polygon, Cube, Octahedron, Tetrahedron };

// Permutation g of the sites 0..K-1. Acting on a configuration c it moves the
// value at site j to site g(j), i.e. (g.c)[g(j)] = c[j].
struct SitePermutation {
  std::vector<int> image;  // image[j] = g(j)

  static SitePermutation identity(int n);

  int size() const { return static_cast<int>(image.size()); }
  int operator()(int site) const { return image[site]; }
  SitePermutation inverse() const;

  auto operator<=>(const SitePermutation&) const = default;
};

// Composition acting h first, then g: (g*h)(j) = g(h(j)).
SitePermutation operator*(const SitePermutation& g, const SitePermutation& h);

struct Geometry {
  GeometryKind kind = GeometryKind::Square;
  int sites = 0;                                 // K (even)
  std::vector<std::pair<int, int>> diagonals;    // antipodal pairs (j, j + K/2); empty for the tetrahedron
  std::vector<SitePermutation> generators;
  std::vector<SitePermutation> group;            // full closure of the generators, sorted
  std::vector<std::vector<int>> bipartitions;    // allowed subsets, each sorted ascending (0-based sites)

  int half() const { return sites / 2; }
  bool has_diagonals() const { return !diagonals.empty(); }
  int antipode(int site) const;                  // partner on the same diagonal
  std::string name() const;                      // "square", "polygon:8", ...
};

// polygon_sites is only consulted for GeometryKind::Polygon (2k sites, k >= 2).
Geometry build_geometry(GeometryKind kind, int polygon_sites = 0);
Geometry build_geometry(const std::string& name);

std::vector<SitePermutation> group_closure(std::vector<SitePermutation> generators);

// Orbit of a site subset under the geometry's symmetry group: sorted list of
// sorted subsets.
std::vector<std::vector<int>> subset_orbit(const Geometry& geometry, const std::vector<int>& subset);

// A bipartition subset picks one endpoint of every diagonal. Returns the
// tensor positions i (0-based, i < K/2) where it picked the far endpoint
// i + K/2. Rejects subsets that do not pick one endpoint per diagonal.
std::vector<int> transposed_positions(const Geometry& geometry, const std::vector<int>& subset);

// True if `subset` or its complement is one of the allowed bipartitions.
bool is_allowed_bipartition(const Geometry& geometry, const std::vector<int>& subset);

// "{1,2,3}" with 1-based site labels, for messages and reports.
std::string format_sites(const std::vector<int>& subset);

}  // namespace multidir
