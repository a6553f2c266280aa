#include "moebius/oracle.hpp"

#include <deque>
#include <set>
#include <sstream>

#include "moebius/error.hpp"
#include "moebius/json.hpp"
#include "moebius/tree.hpp"

namespace moebius::oracle {

namespace {

Integer det(const Pair& u, const Pair& v) { return u.first * v.second - v.first * u.second; }

bool det_is_two(const Pair& u, const Pair& v) { return abs(det(u, v)) == 2; }

const Pair kRoot{0, 1};

// Every slope of longitude `l2` at determinant +-2 with `v`, longitude > 0.
std::vector<Pair> det_two_at_longitude(const Pair& v, const Integer& l2) {
  std::vector<Pair> out;
  const auto& [l, m] = v;
  if (l == 0) {
    // -l2 * m == +-2 with m == 1: only longitude 2, any meridian.
    return out;
  }
  for (int sign : {2, -2}) {
    const Integer num = sign + l2 * m;
    if (num % l == 0) out.emplace_back(l2, num / l);
  }
  return out;
}

TreeVertex vertex_of(const Pair& s) { return TreeVertex::make(s.first, s.second); }

Pair pair_of(const TreeVertex& v) { return {v.longitude(), v.meridian()}; }

}  // namespace

std::string pair_str(const Pair& s) {
  return "(" + s.first.str() + "," + s.second.str() + ")";
}

bool admissible(const Pair& s) {
  const auto& [l, m] = s;
  if (s == kRoot) return true;
  if (l < 2 || is_odd(l) || m < 1 || !is_odd(m)) return false;
  if (gcd(l / 2, m) != 1) return false;
  return !excluded_class(s);
}

bool excluded_class(const Pair& s) { return s.first == 2 && s.second >= 3 && is_odd(s.second); }

std::vector<Pair> scan_children(const Pair& v, const Integer& longitude_bound) {
  std::vector<Pair> out;
  if (v.first == 0) {
    // det((0,1),(2,m)) == -2 for every m; admissibility keeps only (2,1).
    if (longitude_bound >= 2 && admissible({2, 1})) out.emplace_back(2, 1);
    return out;
  }
  for (Integer l2 = v.first + 2; l2 <= longitude_bound; l2 += 2)
    for (Pair& w : det_two_at_longitude(v, l2))
      if (admissible(w) && det_is_two(v, w)) out.push_back(std::move(w));
  return out;
}

std::vector<Pair> parent_candidates(const Pair& s) {
  std::vector<Pair> out;
  if (s.first == 0) return out;
  if (det_is_two(kRoot, s)) out.push_back(kRoot);
  for (Integer l2 = 2; l2 < s.first; l2 += 2) {
    for (int sign : {2, -2}) {
      // s.l * m2 - l2 * s.m == sign
      const Integer num = sign + l2 * s.second;
      if (num % s.first != 0) continue;
      Pair w{l2, num / s.first};
      if (admissible(w) && det_is_two(s, w)) out.push_back(std::move(w));
    }
  }
  return out;
}

BfsTree bfs_tree(const Integer& longitude_bound) {
  BfsTree tree;
  tree.vertices.emplace(kRoot, BfsEntry{0, std::nullopt});
  std::deque<Pair> queue{kRoot};
  while (!queue.empty()) {
    const Pair v = queue.front();
    queue.pop_front();
    const std::size_t d = tree.vertices.at(v).depth;
    for (Pair& w : scan_children(v, longitude_bound)) {
      if (tree.vertices.emplace(w, BfsEntry{d + 1, v}).second)
        queue.push_back(std::move(w));
      else
        ++tree.repeated_visits;
    }
  }
  return tree;
}

std::string Report::summary() const {
  std::ostringstream os;
  os << (clean() ? "PASS " : "FAIL ") << name << ": checked " << checked << ", violations "
     << violations.size();
  if (!flagged.empty()) os << ", flagged " << flagged.size();
  return os.str();
}

nlohmann::json Report::to_json() const {
  return {{"name", name}, {"checked", checked}, {"violations", violations}, {"flagged", flagged}};
}

Report verify_parent_unique(const Integer& longitude_bound) {
  Report r{"parent_unique", 0, {}, {}};
  for (Integer l = 4; l <= longitude_bound; l += 2) {
    for (Integer m = 1; m <= longitude_bound; m += 2) {
      const Pair s{l, m};
      if (!admissible(s)) continue;
      ++r.checked;
      const auto candidates = parent_candidates(s);
      if (candidates.size() == 1) continue;
      if (candidates.empty()) {
        // Only an excluded (2,b) slope may sit below it.
        bool below_excluded = false;
        for (Integer b = 3; !below_excluded && b <= m; b += 2)
          below_excluded = det_is_two({2, b}, s);
        if (below_excluded) {
          r.flagged.push_back(pair_str(s));
          continue;
        }
      }
      std::string msg = pair_str(s) + " has " + std::to_string(candidates.size()) + " candidates:";
      for (const Pair& c : candidates) msg += " " + pair_str(c);
      r.violations.push_back(msg);
    }
  }
  return r;
}

Report verify_ratio_claim(const Integer& longitude_bound) {
  Report r{"ratio_claim", 0, {}, {}};
  const BfsTree tree = bfs_tree(longitude_bound);
  const Pair four_one{4, 1};
  for (const auto& [v, entry] : tree.vertices) {
    if (v == kRoot) continue;
    ++r.checked;
    bool on_path = false;
    for (std::optional<Pair> cur = v; cur; cur = tree.vertices.at(*cur).parent)
      on_path = on_path || *cur == four_one;
    if (v.first == 3 * v.second) r.violations.push_back(pair_str(v) + " has ratio exactly 3");
    const bool ratio = v.first > 3 * v.second;
    const bool fast = passes_through_41(vertex_of(v).slope());
    if (on_path != ratio || fast != ratio)
      r.violations.push_back(pair_str(v) + ": bfs path " + (on_path ? "contains" : "avoids") +
                             " (4,1), fast path " + (fast ? "contains" : "avoids") +
                             ", ratio " + (ratio ? "> 3" : "< 3"));
  }
  return r;
}

Report verify_genus_depth(const Integer& longitude_bound) {
  Report r{"genus_depth", 0, {}, {}};
  const BfsTree tree = bfs_tree(longitude_bound);
  if (tree.repeated_visits != 0)
    r.violations.push_back("bfs met " + std::to_string(tree.repeated_visits) +
                           " vertices twice; the graph is not a tree");
  for (const auto& [v, entry] : tree.vertices) {
    ++r.checked;
    const TreeVertex fast = vertex_of(v);
    const std::size_t g = genus(fast);
    if (g != entry.depth)
      r.violations.push_back(pair_str(v) + ": genus " + std::to_string(g) + ", bfs depth " +
                             std::to_string(entry.depth));
    if (entry.parent && pair_of(parent(fast)) != *entry.parent)
      r.violations.push_back(pair_str(v) + ": parent " + parent(fast).str() + ", bfs parent " +
                             pair_str(*entry.parent));
  }
  // Membership: fast is_vertex must match BFS reachability.
  for (Integer l = 0; l <= longitude_bound; l += 2) {
    for (Integer m = 1; m <= longitude_bound; m += 2) {
      const Pair s{l, m};
      if (!admissible(s)) continue;
      const bool reached = tree.vertices.count(s) != 0;
      if (is_vertex(l, m) != reached)
        r.violations.push_back(pair_str(s) + ": is_vertex " + (reached ? "false" : "true") +
                               " but bfs " + (reached ? "reaches" : "does not reach") + " it");
    }
  }
  return r;
}

Report verify_path_monotone(const Integer& longitude_bound) {
  Report r{"path_monotone", 0, {}, {}};
  const BfsTree tree = bfs_tree(longitude_bound);
  for (const auto& [v, entry] : tree.vertices) {
    ++r.checked;
    const TreePath path = path_to_root(vertex_of(v));
    if (pair_of(path.vertices.back()) != kRoot)
      r.violations.push_back(pair_str(v) + ": path does not end at (0,1)");
    for (std::size_t i = 0; i + 1 < path.vertices.size(); ++i) {
      const Pair hi = pair_of(path.vertices[i]);
      const Pair lo = pair_of(path.vertices[i + 1]);
      if (!(lo.first < hi.first) || !det_is_two(hi, lo)) {
        r.violations.push_back(pair_str(v) + ": bad step " + pair_str(hi) + " -> " + pair_str(lo));
        break;
      }
    }
  }
  return r;
}

Report verify_children(const Integer& longitude_bound) {
  Report r{"children_families", 0, {}, {}};
  const BfsTree tree = bfs_tree(longitude_bound);
  for (const auto& [v, entry] : tree.vertices) {
    ++r.checked;
    std::set<Pair> scanned;
    for (Pair& w : scan_children(v, longitude_bound)) scanned.insert(std::move(w));
    std::set<Pair> fast;
    for (const TreeVertex& w : children(vertex_of(v), longitude_bound)) fast.insert(pair_of(w));
    if (scanned != fast)
      r.violations.push_back(pair_str(v) + ": family children differ from scan (" +
                             std::to_string(fast.size()) + " vs " +
                             std::to_string(scanned.size()) + ")");
  }
  return r;
}

std::vector<Report> verify_all(const Integer& longitude_bound) {
  if (longitude_bound < 2)
    throw Error(ErrorCode::InvalidBound, "verification bound must be at least 2");
  return {verify_parent_unique(longitude_bound), verify_ratio_claim(longitude_bound),
          verify_genus_depth(longitude_bound), verify_path_monotone(longitude_bound),
          verify_children(longitude_bound)};
}

}  // namespace moebius::oracle
