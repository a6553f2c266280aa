// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Timing limits are part of each criterion.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "moebius/error.hpp"
#include "moebius/fig8.hpp"
#include "moebius/oracle.hpp"
#include "moebius/tree.hpp"

using namespace moebius;
using S = SurfaceTag;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

using Clock = std::chrono::steady_clock;

bool criterion(int id, const std::string& title, double limit_ms, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  if (limit_ms > 0 && ms >= limit_ms) out.expect(false, "took longer than the limit");
  std::printf("[%s] %d. %s (%.3f ms%s)%s%s\n", out.ok ? "PASS" : "FAIL", id, title.c_str(), ms,
              limit_ms > 0 ? (", limit " + std::to_string(static_cast<long>(limit_ms)) + " ms").c_str() : "",
              out.ok ? "" : ": ", out.detail.c_str());
  return out.ok;
}

FillingSpec random_spec(std::mt19937_64& rng, bool same_sign) {
  std::uniform_int_distribution<long> pd(3, 2000);
  for (;;) {
    const long p = pd(rng);
    std::uniform_int_distribution<long> qd(1, p - 1);
    const long q = qd(rng);
    if (q % 2 == 0 || std::gcd(p, q) != 1) continue;
    const bool flip_p = rng() & 1;
    const long sp = flip_p ? -p : p;
    const long sq = (same_sign == !flip_p) ? q : -q;
    return FillingSpec::make(sp, sq);
  }
}

std::vector<FillingSpec> all_specs(long max_p) {
  std::vector<FillingSpec> out;
  for (long p = -max_p; p <= max_p; ++p)
    for (long q = -max_p; q <= max_p; ++q)
      if (q % 2 != 0 && std::gcd(p, q) == 1 && std::abs(p) > std::abs(q) && std::abs(p) > 2)
        out.push_back(FillingSpec::make(p, q));
  return out;
}

std::size_t tree_genus(const Slope& s) { return genus(quadrant_project(s)); }

S mirror(S tag) {
  if (tag == S::Klein_41) return S::Klein_4m1;
  if (tag == S::Klein_4m1) return S::Klein_41;
  return tag;
}

}  // namespace

int main() {
  bool all = true;

  all &= criterion(1, "M_(8,3) slope conversions", 1.0, [] {
    Outcome o;
    const TransitionMatrix m = transition_matrix(FillingSpec::make(4, 3));
    o.expect(knot_to_torus(make_slope(0, 1), m) == make_slope(-8, 3), "(0,1)_K");
    o.expect(knot_to_torus(make_slope(4, 1), m) == make_slope(4, -1), "(4,1)_K");
    o.expect(knot_to_torus(make_slope(4, -1), m) == make_slope(20, -7), "(4,-1)_K");
    return o;
  });

  all &= criterion(2, "M_(8,3) genera (4,4,6), TwoCandidates", 10.0, [] {
    Outcome o;
    const FillingReport r = classify(FillingSpec::make(4, 3));
    o.expect(r.surface(S::Seifert_01).total_genus == 4, "K_(0,1) genus");
    o.expect(r.surface(S::Klein_41).total_genus == 4, "K_(4,1) genus");
    o.expect(r.surface(S::Klein_4m1).total_genus == 6, "K_(4,-1) genus");
    o.expect(r.verdict.kind == Verdict::Kind::TwoCandidates, "verdict kind");
    o.expect(r.verdict.surfaces == std::vector<S>{S::Seifert_01, S::Klein_41}, "verdict surfaces");
    return o;
  });

  all &= criterion(3, "tree fragment present in export (bound 28)", 100.0, [] {
    Outcome o;
    const std::string dot = export_tree(28, TreeFormat::Dot);
    const std::vector<std::pair<std::string, std::string>> edges{
        {"(0,1)", "(2,1)"},  {"(2,1)", "(4,1)"},  {"(2,1)", "(8,3)"},  {"(2,1)", "(12,5)"},
        {"(2,1)", "(16,7)"}, {"(4,1)", "(10,3)"}, {"(4,1)", "(14,3)"}, {"(4,1)", "(18,5)"},
        {"(6,1)", "(16,3)"}, {"(6,1)", "(20,3)"}, {"(6,1)", "(28,5)"}};
    for (const auto& [from, to] : edges) {
      const std::string line = "\"" + from + "\" -- \"" + to + "\";";
      o.expect(dot.find(line) != std::string::npos, "missing edge " + from + "-" + to);
    }
    return o;
  });

  all &= criterion(4, "children of (4,1) match both families (bound 100)", 0, [] {
    Outcome o;
    std::set<TreeVertex> families;
    for (long k = -20; k <= 20; ++k)
      for (long base : {10L, 14L}) {
        const long l = base + 8 * k, m = 3 + 2 * k;
        if (l > 4 && l <= 100 && m > 0 && is_vertex(l, m)) families.insert(TreeVertex::make(l, m));
      }
    const auto got = children(TreeVertex::make(4, 1), 100);
    o.expect(std::set<TreeVertex>(got.begin(), got.end()) == families, "family mismatch");
    o.expect(got.size() == families.size(), "duplicate children");
    return o;
  });

  all &= criterion(5, "oracle property suite at bound 400", 60000.0, [] {
    Outcome o;
    for (const auto& r : {oracle::verify_parent_unique(400), oracle::verify_ratio_claim(400),
                          oracle::verify_genus_depth(400), oracle::verify_path_monotone(400)}) {
      std::cout << "      " << r.summary() << '\n';
      o.expect(r.clean(), r.name + ": " + (r.violations.empty() ? "" : r.violations.front()));
      o.expect(r.checked > 0, r.name + " checked nothing");
    }
    return o;
  });

  all &= criterion(6, "pairing magnitudes 4,4,8 and 2 for intermediates (1000 specs)", 0, [] {
    Outcome o;
    std::mt19937_64 rng(6);
    for (int i = 0; i < 1000; ++i) {
      const FillingSpec spec = random_spec(rng, rng() & 1);
      const TransitionMatrix m = transition_matrix(spec);
      const Slope k01 = knot_to_torus(knot_slope(S::Seifert_01), m);
      const Slope k41 = knot_to_torus(knot_slope(S::Klein_41), m);
      const Slope k4m1 = knot_to_torus(knot_slope(S::Klein_4m1), m);
      const auto [i1, i2] = intermediate_slopes(spec, m);
      o.expect(abs(intersection_number(k41, k01)) == 4, "K41.K01");
      o.expect(abs(intersection_number(k4m1, k01)) == 4, "K4m1.K01");
      o.expect(abs(intersection_number(k41, k4m1)) == 8, "K41.K4m1");
      o.expect(abs(intersection_number(i1, k01)) == 2 && abs(intersection_number(i1, k41)) == 2,
               "first intermediate");
      o.expect(abs(intersection_number(i2, k01)) == 2 && abs(intersection_number(i2, k4m1)) == 2,
               "second intermediate");
    }
    return o;
  });

  all &= criterion(7, "inequality chains hold and agree with tree genus order (2 x 1000 specs)", 0, [] {
    Outcome o;
    std::mt19937_64 rng(7);
    for (bool same : {true, false}) {
      for (int i = 0; i < 1000; ++i) {
        const FillingSpec spec = random_spec(rng, same);
        o.expect(genus_order_check(spec), "chain fails");
        const TransitionMatrix m = transition_matrix(spec);
        const auto [i1, i2] = intermediate_slopes(spec, m);
        const Slope k01 = knot_to_torus(knot_slope(S::Seifert_01), m);
        const Slope far = knot_to_torus(knot_slope(same ? S::Klein_4m1 : S::Klein_41), m);
        const std::array<Slope, 4> ordered = same ? std::array<Slope, 4>{i1, k01, i2, far}
                                                  : std::array<Slope, 4>{i2, k01, i1, far};
        const auto chain = longitude_chain(spec);
        for (std::size_t j = 0; j < 4; ++j)
          o.expect(ordered[j].longitude() == chain[j], "chain term is not the torus longitude");
        for (std::size_t j = 0; j + 1 < 4; ++j)
          o.expect(tree_genus(ordered[j]) < tree_genus(ordered[j + 1]), "genus order disagrees");
      }
    }
    return o;
  });

  all &= criterion(8, "classification sweep |p| <= 50", 10000.0, [] {
    Outcome o;
    std::size_t inconsistencies = 0;
    for (const FillingSpec& spec : all_specs(50)) {
      try {
        const FillingReport r = classify(spec);
        const bool unique = r.verdict.kind == Verdict::Kind::UniqueIncompressible;
        o.expect(unique == (2 * abs(spec.p()) > 3 * abs(spec.q())), "verdict vs ratio");
        std::set<S> flagged;
        for (const SurfaceReport& s : r.surfaces)
          if (s.is_minimal_genus) flagged.insert(s.tag);
        o.expect(flagged == std::set<S>(r.verdict.surfaces.begin(), r.verdict.surfaces.end()),
                 "minimal flags vs verdict");

        const FillingReport m = classify(FillingSpec::make(spec.p(), -spec.q()));
        std::vector<S> mirrored;
        for (S t : r.verdict.surfaces) mirrored.push_back(mirror(t));
        o.expect(m.verdict.kind == r.verdict.kind && m.verdict.surfaces == mirrored, "mirror verdict");
        std::multiset<std::size_t> g1, g2;
        for (const SurfaceReport& s : r.surfaces) g1.insert(s.total_genus);
        for (const SurfaceReport& s : m.surfaces) g2.insert(s.total_genus);
        o.expect(g1 == g2, "mirror genus multiset");
      } catch (const Error& e) {
        if (e.code() == ErrorCode::InternalInconsistency) ++inconsistencies;
        o.expect(false, e.what());
      }
    }
    o.expect(inconsistencies == 0, "InternalInconsistency raised");
    return o;
  });

  all &= criterion(9, "M_(10,3) end to end", 0, [] {
    Outcome o;
    const FillingReport r = classify(FillingSpec::make(5, 3));
    o.expect(r.surface(S::Seifert_01).torus_slope == make_slope(10, 3), "K_(0,1) slope");
    o.expect(r.surface(S::Klein_41).torus_slope == make_slope(2, 1), "K_(4,1) slope");
    o.expect(r.surface(S::Klein_4m1).torus_slope == make_slope(22, 7), "K_(4,-1) slope");
    o.expect(r.surface(S::Seifert_01).total_genus == 5, "K_(0,1) genus");
    o.expect(r.surface(S::Klein_41).total_genus == 3, "K_(4,1) genus");
    o.expect(r.surface(S::Klein_4m1).total_genus == 7, "K_(4,-1) genus");
    o.expect(r.verdict.kind == Verdict::Kind::UniqueIncompressible &&
                 r.verdict.surfaces == std::vector<S>{S::Klein_41},
             "verdict");
    return o;
  });

  std::cout << (all ? "all acceptance criteria passed" : "acceptance criteria FAILED") << '\n';
  return all ? 0 : 1;
}
