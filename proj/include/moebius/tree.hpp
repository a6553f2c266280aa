#pragma once

// The Moebius band tree of first-quadrant boundary slopes of geometrically
// incompressible one-sided surfaces in a solid torus.
//
// Vertices are the root (0,1) (meridian disc) and the slopes (2a,b) with b
// odd, gcd(a,b) = 1 and 1 <= b < 2a. Edges join slopes at intersection
// number 2, i.e. surfaces differing by one Moebius band. The slopes (2,b)
// with b >= 3 also meet (0,1) twice but are not vertices: they and their
// descendants (exactly the slopes with b > 2a) are images of the (2,1)
// subtree under a meridian twist of the solid torus.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "moebius/slope.hpp"

namespace moebius {

class TreeVertex {
 public:
  /// Throws Error{NotAVertex} if `s` is not admitted to the tree.
  static TreeVertex make(const QuadrantSlope& s);
  static TreeVertex make(Integer longitude, Integer meridian);
  static TreeVertex root() { return TreeVertex(QuadrantSlope::root()); }

  const QuadrantSlope& slope() const noexcept { return slope_; }
  const Integer& longitude() const noexcept { return slope_.longitude(); }
  const Integer& meridian() const noexcept { return slope_.meridian(); }
  bool is_root() const { return slope_.is_root(); }
  std::string str() const { return slope_.str(); }

  friend bool operator==(const TreeVertex&, const TreeVertex&) = default;
  friend auto operator<=>(const TreeVertex& x, const TreeVertex& y) {
    return x.slope_ <=> y.slope_;
  }

 private:
  explicit TreeVertex(QuadrantSlope s) : slope_(std::move(s)) {}

  QuadrantSlope slope_;
};

std::ostream& operator<<(std::ostream& os, const TreeVertex& v);

bool is_vertex(const QuadrantSlope& s);
/// Total on raw pairs: false for anything that is not a valid vertex.
bool is_vertex(const Integer& longitude, const Integer& meridian);

/// Ordered from a query vertex down to the root.
struct TreePath {
  std::vector<TreeVertex> vertices;

  std::size_t edge_count() const { return vertices.empty() ? 0 : vertices.size() - 1; }
  bool contains(const TreeVertex& v) const;
};

/// Children with longitude in (longitude(v), longitude_bound], sorted by
/// (longitude, meridian). Generated from the two arithmetic families through
/// v, each stepping by (2 * longitude(v), 2 * meridian(v)).
std::vector<TreeVertex> children(const TreeVertex& v, const Integer& longitude_bound);

/// The unique vertex of smaller longitude at intersection number 2. Solved
/// with the extended Euclidean algorithm; throws Error{RootHasNoParent} on
/// the root and Error{AmbiguousParent} if zero or two candidates survive.
TreeVertex parent(const TreeVertex& v);

TreePath path_to_root(const TreeVertex& v);
TreePath path_to_root(const QuadrantSlope& s);

/// Edge count of the root path, which is the genus of the bounded surface.
std::size_t genus(const TreeVertex& v);
std::size_t genus(const QuadrantSlope& s);

/// Whether (4,1) lies on the root path. False for the root itself.
bool passes_through_41(const QuadrantSlope& s);

/// longitude / meridian > 3, by cross-multiplication.
bool ratio_exceeds_three(const QuadrantSlope& s);

enum class TreeFormat { Dot, Json };

/// Throws Error{UnknownFormat}.
TreeFormat parse_tree_format(std::string_view name);

/// Every vertex with longitude <= bound, sorted by (longitude, meridian),
/// with one edge per non-root vertex to its parent. Throws
/// Error{InvalidBound} when bound < 2.
struct TreeListing {
  std::vector<TreeVertex> vertices;
  std::vector<std::size_t> depth;
  /// (parent index, child index)
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

TreeListing grow_tree(const Integer& longitude_bound);

std::string export_tree(const Integer& longitude_bound, TreeFormat format);

}  // namespace moebius
