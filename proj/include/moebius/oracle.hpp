#pragma once

// Brute-force reference constructions for the Moebius band tree.
//
// Everything here works on raw integer pairs with the literal admissibility
// predicate (even longitude, odd positive meridian, primitive, and the
// slopes (2,b), b >= 3, excluded) and direct determinant tests. Nothing is
// borrowed from the fast paths in tree.hpp; the verify_* reports call those
// only as the objects under test.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "moebius/integer.hpp"

namespace moebius::oracle {

using Pair = std::pair<Integer, Integer>;  // (longitude, meridian)

std::string pair_str(const Pair& s);

bool admissible(const Pair& s);

/// Whether `s` belongs to the excluded class (2, b) with b >= 3.
bool excluded_class(const Pair& s);

struct BfsEntry {
  std::size_t depth;
  std::optional<Pair> parent;
};

struct BfsTree {
  std::map<Pair, BfsEntry> vertices;
  /// Times an already-reached vertex was met again from another vertex.
  std::size_t repeated_visits = 0;
};

/// Grows the tree from (0,1) by adding every admissible slope of larger
/// longitude (<= bound) at determinant +-2 from a reached vertex.
BfsTree bfs_tree(const Integer& longitude_bound);

/// Admissible slopes of longitude in (longitude(v), bound] at |det| = 2.
std::vector<Pair> scan_children(const Pair& v, const Integer& longitude_bound);

/// Admissible slopes of smaller longitude at |det| = 2 with `s`.
std::vector<Pair> parent_candidates(const Pair& s);

struct Report {
  std::string name;
  std::size_t checked = 0;
  std::vector<std::string> violations;
  /// Expected exceptions, e.g. slopes hanging off the excluded (2,b) class.
  std::vector<std::string> flagged;

  bool clean() const { return violations.empty(); }
  std::string summary() const;
  nlohmann::json to_json() const;
};

/// Admissible slopes with 4 <= longitude <= bound and meridian <= bound must
/// have exactly one parent candidate; those whose only neighbour of smaller
/// longitude is an excluded (2,b) slope are flagged, not counted.
Report verify_parent_unique(const Integer& longitude_bound);

/// Path membership of (4,1), by BFS parents and by the fast path, against
/// longitude > 3 * meridian.
Report verify_ratio_claim(const Integer& longitude_bound);

/// Fast genus and parent against BFS depth and BFS parent; fast is_vertex
/// against BFS reachability over the admissible box.
Report verify_genus_depth(const Integer& longitude_bound);

/// Root paths from the fast path: longitude strictly decreasing, |det| = 2
/// at every step.
Report verify_path_monotone(const Integer& longitude_bound);

/// Family-formula children against the exhaustive scan.
Report verify_children(const Integer& longitude_bound);

std::vector<Report> verify_all(const Integer& longitude_bound);

}  // namespace moebius::oracle
