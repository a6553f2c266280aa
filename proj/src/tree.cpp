#include "moebius/tree.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <sstream>

#include "moebius/error.hpp"
#include "moebius/json.hpp"

namespace moebius {

namespace {

// Vertices are handled in half-longitude form (a, b) for the slope (2a, b);
// intersection number 2 between slopes is |a*b' - a'*b| == 1.
struct Half {
  Integer a;
  Integer b;
};

Half halve(const TreeVertex& v) { return {v.longitude() / 2, v.meridian()}; }

TreeVertex from_half(const Half& h) { return TreeVertex::make(2 * h.a, h.b); }

}  // namespace

std::ostream& operator<<(std::ostream& os, const TreeVertex& v) { return os << v.str(); }

bool is_vertex(const QuadrantSlope& s) {
  return s.is_root() || s.meridian() < s.longitude();
}

bool is_vertex(const Integer& longitude, const Integer& meridian) {
  if (longitude < 0 || meridian < 1 || is_odd(longitude) || !is_odd(meridian)) return false;
  if (gcd(longitude, meridian) != 1) return false;
  return longitude == 0 ? meridian == 1 : meridian < longitude;
}

TreeVertex TreeVertex::make(const QuadrantSlope& s) {
  if (!is_vertex(s))
    throw Error(ErrorCode::NotAVertex,
                "slope " + s.str() + " is not a vertex of the tree (meridian exceeds longitude)");
  return TreeVertex(s);
}

TreeVertex TreeVertex::make(Integer longitude, Integer meridian) {
  if (!is_vertex(longitude, meridian)) {
    // Surface the more specific slope error when there is one.
    QuadrantSlope s = QuadrantSlope::make(longitude, meridian);
    if (s.longitude() != longitude || s.meridian() != meridian)
      throw Error(ErrorCode::NotAVertex,
                  "slope " + Slope::make(longitude, meridian).str() +
                      " is not in first-quadrant form");
    return make(s);
  }
  return TreeVertex(QuadrantSlope::make(std::move(longitude), std::move(meridian)));
}

bool TreePath::contains(const TreeVertex& v) const {
  return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

TreeVertex parent(const TreeVertex& v) {
  if (v.is_root()) throw Error(ErrorCode::RootHasNoParent, "the root (0,1) has no parent");
  const Half h = halve(v);

  // a*b' - a'*b == 1 from Bezout a*s + b*t == 1, then reduce a' into [0, a).
  const Bezout bz = extended_gcd(h.a, h.b);
  Integer a1 = mod_floor(-bz.t, h.a);
  Integer b1 = (1 + a1 * h.b) / h.a;

  std::vector<Half> candidates;
  candidates.push_back({a1, b1});
  // The other Farey neighbour, at a*b' - a'*b == -1.
  if (a1 > 0) candidates.push_back({h.a - a1, h.b - b1});

  std::vector<TreeVertex> admissible;
  for (const Half& c : candidates)
    if (is_vertex(2 * c.a, c.b)) admissible.push_back(from_half(c));

  if (admissible.size() != 1)
    throw Error(ErrorCode::AmbiguousParent,
                "vertex " + v.str() + " has " + std::to_string(admissible.size()) +
                    " admissible parent candidates");
  return admissible.front();
}

std::vector<TreeVertex> children(const TreeVertex& v, const Integer& longitude_bound) {
  std::vector<TreeVertex> out;
  if (v.is_root()) {
    if (longitude_bound >= 2) out.push_back(TreeVertex::make(2, 1));
    return out;
  }
  const Half h = halve(v);
  const Half up = halve(parent(v));
  const Integer max_a = floor_div(longitude_bound, 2);

  // Solutions of |a*b' - a'*b| == 1 are +-(parent) + k*(a, b); odd meridian
  // forces k even, and a' > a forces k >= 2 on both branches.
  for (Integer k = 2;; k += 2) {
    Half first{up.a + k * h.a, up.b + k * h.b};
    Half second{k * h.a - up.a, k * h.b - up.b};
    bool any = false;
    for (const Half& c : {first, second}) {
      if (c.a > max_a) continue;
      any = true;
      if (is_vertex(2 * c.a, c.b)) out.push_back(from_half(c));
    }
    if (!any) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

TreePath path_to_root(const TreeVertex& v) {
  TreePath path;
  path.vertices.push_back(v);
  while (!path.vertices.back().is_root()) path.vertices.push_back(parent(path.vertices.back()));
  return path;
}

TreePath path_to_root(const QuadrantSlope& s) { return path_to_root(TreeVertex::make(s)); }

std::size_t genus(const TreeVertex& v) {
  std::size_t edges = 0;
  for (TreeVertex cur = v; !cur.is_root(); cur = parent(cur)) ++edges;
  return edges;
}

std::size_t genus(const QuadrantSlope& s) { return genus(TreeVertex::make(s)); }

bool passes_through_41(const QuadrantSlope& s) {
  const TreeVertex v = TreeVertex::make(s);
  if (v.is_root()) return false;
  return path_to_root(v).contains(TreeVertex::make(4, 1));
}

bool ratio_exceeds_three(const QuadrantSlope& s) { return s.longitude() > 3 * s.meridian(); }

TreeFormat parse_tree_format(std::string_view name) {
  if (name == "dot") return TreeFormat::Dot;
  if (name == "json") return TreeFormat::Json;
  throw Error(ErrorCode::UnknownFormat, "unknown tree format '" + std::string(name) + "'");
}

TreeListing grow_tree(const Integer& longitude_bound) {
  if (longitude_bound < 2)
    throw Error(ErrorCode::InvalidBound, "tree bound must be at least 2");

  struct Node {
    std::size_t depth;
    std::optional<TreeVertex> parent;
  };
  std::map<TreeVertex, Node> nodes;
  std::deque<TreeVertex> queue;
  nodes.emplace(TreeVertex::root(), Node{0, std::nullopt});
  queue.push_back(TreeVertex::root());
  while (!queue.empty()) {
    TreeVertex v = queue.front();
    queue.pop_front();
    const std::size_t d = nodes.at(v).depth;
    for (TreeVertex& w : children(v, longitude_bound)) {
      if (nodes.emplace(w, Node{d + 1, v}).second) queue.push_back(std::move(w));
    }
  }

  TreeListing listing;
  std::map<TreeVertex, std::size_t> index;
  for (const auto& [v, node] : nodes) {
    index.emplace(v, listing.vertices.size());
    listing.vertices.push_back(v);
    listing.depth.push_back(node.depth);
  }
  for (const auto& [v, node] : nodes)
    if (node.parent) listing.edges.emplace_back(index.at(*node.parent), index.at(v));
  return listing;
}

namespace {

std::string quoted(const TreeVertex& v) { return "\"" + v.str() + "\""; }

std::string to_dot(const TreeListing& t) {
  std::ostringstream os;
  os << "graph moebius_tree {\n";
  os << "  rankdir=BT;\n";
  // The (2p,1) branch carries no nested bands; draw it as the base line.
  os << "  { rank=same;";
  for (const TreeVertex& v : t.vertices)
    if (v.meridian() == 1) os << ' ' << quoted(v) << ';';
  os << " }\n";
  for (const TreeVertex& v : t.vertices) os << "  " << quoted(v) << ";\n";
  for (const auto& [from, to] : t.edges)
    os << "  " << quoted(t.vertices[from]) << " -- " << quoted(t.vertices[to]) << ";\n";
  os << "}\n";
  return os.str();
}

std::string to_json(const TreeListing& t) {
  nlohmann::json vertices = nlohmann::json::array();
  for (std::size_t i = 0; i < t.vertices.size(); ++i) {
    vertices.push_back({{"longitude", integer_json(t.vertices[i].longitude())},
                        {"meridian", integer_json(t.vertices[i].meridian())},
                        {"genus", t.depth[i]}});
  }
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [from, to] : t.edges) edges.push_back({from, to});
  return nlohmann::json{{"vertices", vertices}, {"edges", edges}}.dump() + "\n";
}

}  // namespace

std::string export_tree(const Integer& longitude_bound, TreeFormat format) {
  const TreeListing t = grow_tree(longitude_bound);
  return format == TreeFormat::Dot ? to_dot(t) : to_json(t);
}

}  // namespace moebius
