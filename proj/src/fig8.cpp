#include "moebius/fig8.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "moebius/error.hpp"
#include "moebius/json.hpp"
#include "moebius/tree.hpp"

namespace moebius {

FillingSpec FillingSpec::make(Integer p, Integer q) {
  const auto reject = [&](const std::string& why) {
    return Error(ErrorCode::InvalidSpec,
                 "invalid filling (p,q) = (" + p.str() + "," + q.str() + "): " + why);
  };
  if (!is_odd(q)) throw reject("q must be odd for (2p,q) to be primitive");
  if (gcd(p, q) != 1) throw reject("p and q must be coprime");
  if (abs(p) <= abs(q)) throw reject("|p| must exceed |q|");
  if (abs(p) <= 2) throw reject("|p| must exceed 2");
  return FillingSpec(std::move(p), std::move(q));
}

Coords TransitionMatrix::apply_inverse(const Coords& knot) const {
  return {q * knot.longitude - 2 * p * knot.meridian, -a * knot.longitude + b * knot.meridian};
}

TransitionMatrix transition_matrix(const FillingSpec& spec) {
  const Integer& p = spec.p();
  const Integer& q = spec.q();
  // q*s + 2p*t == 1, so (a, b) = (-t, s) solves bq - 2pa == 1.
  const Bezout bz = extended_gcd(q, 2 * p);
  const Integer a0 = -bz.t;
  const Integer b0 = bz.s;

  // Norm of (a0 + kq, b0 + 2pk) is a convex quadratic in k, minimized at
  // -(a0 q + 2p b0) / (q^2 + 4p^2); compare the two integers around it.
  const Integer denom = q * q + 4 * p * p;
  const Integer k0 = floor_div(-(a0 * q + 2 * p * b0), denom);
  std::optional<TransitionMatrix> best;
  Integer best_norm;
  for (const Integer& k : {k0, Integer(k0 + 1)}) {
    TransitionMatrix m{a0 + k * q, b0 + 2 * p * k, p, q};
    const Integer norm = m.a * m.a + m.b * m.b;
    if (!best || norm < best_norm || (norm == best_norm && m.b > 0 && best->b <= 0)) {
      best = m;
      best_norm = norm;
    }
  }
  if (best_norm >= denom)
    throw Error(ErrorCode::InternalInconsistency,
                "no (a,b) shorter than (2p,q) for p=" + p.str() + ", q=" + q.str());
  return *best;
}

Slope knot_to_torus(const Slope& knot_slope, const TransitionMatrix& m) {
  return Slope::make(m.apply_inverse(knot_slope.coords()));
}

std::string surface_name(SurfaceTag tag) {
  switch (tag) {
    case SurfaceTag::Seifert_01: return "K_(0,1)";
    case SurfaceTag::Klein_41: return "K_(4,1)";
    case SurfaceTag::Klein_4m1: return "K_(4,-1)";
  }
  return "?";
}

Slope knot_slope(SurfaceTag tag) {
  switch (tag) {
    case SurfaceTag::Seifert_01: return Slope::make(0, 1);
    case SurfaceTag::Klein_41: return Slope::make(4, 1);
    case SurfaceTag::Klein_4m1: return Slope::make(4, -1);
  }
  throw Error(ErrorCode::InternalInconsistency, "unknown surface tag");
}

std::size_t total_genus(SurfaceTag surface, const Slope& torus_slope) {
  // chi = chi(knot piece) + chi(torus piece) = -1 + (1 - g); crosscaps = 2 - chi.
  const long chi = knot_part_euler(surface) + 1 - static_cast<long>(genus(quadrant_project(torus_slope)));
  return static_cast<std::size_t>(2 - chi);
}

std::pair<Slope, Slope> intermediate_slopes(const FillingSpec& spec, const TransitionMatrix& m) {
  const Integer& p = spec.p();
  const Integer& q = spec.q();
  return {Slope::make(2 * q - 2 * p, -2 * m.a + m.b), Slope::make(2 * q + 2 * p, -2 * m.a - m.b)};
}

std::array<Integer, 4> longitude_chain(const FillingSpec& spec) {
  const Integer& p = spec.p();
  const Integer& q = spec.q();
  if (spec.same_sign())
    return {abs(2 * q - 2 * p), abs(2 * p), abs(2 * q + 2 * p), abs(4 * q + 2 * p)};
  return {abs(2 * q + 2 * p), abs(2 * p), abs(2 * q - 2 * p), abs(4 * q - 2 * p)};
}

bool genus_order_check(const FillingSpec& spec) {
  const auto chain = longitude_chain(spec);
  return std::is_sorted(chain.begin(), chain.end(), std::less_equal<>{}) &&
         std::adjacent_find(chain.begin(), chain.end()) == chain.end();
}

std::string Verdict::str() const {
  std::string out = kind == Kind::UniqueIncompressible ? "UniqueIncompressible(" : "TwoCandidates(";
  for (std::size_t i = 0; i < surfaces.size(); ++i) {
    if (i) out += ", ";
    out += surface_name(surfaces[i]);
  }
  return out + ")";
}

FillingReport classify(const FillingSpec& spec) {
  const TransitionMatrix matrix = transition_matrix(spec);

  std::array<std::optional<SurfaceReport>, 3> rows;
  std::size_t min_total = static_cast<std::size_t>(-1);
  for (SurfaceTag tag : kSurfaces) {
    const Slope knot = knot_slope(tag);
    const Slope torus = knot_to_torus(knot, matrix);
    const std::size_t g = genus(quadrant_project(torus));
    const std::size_t total = total_genus(tag, torus);
    rows[static_cast<std::size_t>(tag)] = SurfaceReport{tag, knot, torus, g, total, false};
    min_total = std::min(min_total, total);
  }
  std::array<SurfaceReport, 3> surfaces{*rows[0], *rows[1], *rows[2]};
  for (SurfaceReport& s : surfaces) s.is_minimal_genus = s.total_genus == min_total;

  using S = SurfaceTag;
  const bool big = spec.ratio_exceeds_three();
  const S favoured = spec.same_sign() ? S::Klein_41 : S::Klein_4m1;
  const S other = spec.same_sign() ? S::Klein_4m1 : S::Klein_41;

  Verdict verdict;
  std::vector<std::pair<S, S>> compressions{{other, S::Seifert_01}};
  if (big) {
    verdict = {Verdict::Kind::UniqueIncompressible, {favoured}};
    compressions.emplace_back(S::Seifert_01, favoured);
  } else {
    verdict = {Verdict::Kind::TwoCandidates, {S::Seifert_01, favoured}};
  }

  // The tree genera must reproduce the verdict independently.
  std::set<S> flagged;
  for (const SurfaceReport& s : surfaces)
    if (s.is_minimal_genus) flagged.insert(s.tag);
  const std::set<S> expected(verdict.surfaces.begin(), verdict.surfaces.end());

  const std::size_t g0 = surfaces[0].torus_genus;
  const std::size_t g_fav = surfaces[static_cast<std::size_t>(favoured)].torus_genus;
  const std::size_t g_oth = surfaces[static_cast<std::size_t>(other)].torus_genus;
  const bool spacing_ok = big ? (g_fav + 2 == g0 && g_oth == g0 + 2) : (g_fav == g0 && g_oth == g0 + 2);

  if (flagged != expected || !spacing_ok) {
    std::ostringstream msg;
    msg << "tree genera (" << surfaces[0].total_genus << "," << surfaces[1].total_genus << ","
        << surfaces[2].total_genus << ") contradict verdict " << verdict.str() << " for (p,q) = ("
        << spec.p() << "," << spec.q() << ")";
    throw Error(ErrorCode::InternalInconsistency, msg.str());
  }

  return FillingReport{spec, matrix, surfaces, verdict, compressions,
                       intermediate_slopes(spec, matrix)};
}

nlohmann::json to_json(const FillingReport& r) {
  nlohmann::json surfaces = nlohmann::json::array();
  for (const SurfaceReport& s : r.surfaces) {
    surfaces.push_back({{"tag", surface_name(s.tag)},
                        {"knot_slope", coords_json(s.knot_slope.coords())},
                        {"torus_slope", coords_json(s.torus_slope.coords())},
                        {"torus_genus", s.torus_genus},
                        {"total_genus", s.total_genus},
                        {"minimal", s.is_minimal_genus}});
  }
  nlohmann::json verdict_surfaces = nlohmann::json::array();
  for (SurfaceTag t : r.verdict.surfaces) verdict_surfaces.push_back(surface_name(t));
  nlohmann::json compressions = nlohmann::json::array();
  for (const auto& [from, to] : r.compressions)
    compressions.push_back({surface_name(from), surface_name(to)});

  return {{"p", integer_json(r.spec.p())},
          {"q", integer_json(r.spec.q())},
          {"a", integer_json(r.matrix.a)},
          {"b", integer_json(r.matrix.b)},
          {"surfaces", surfaces},
          {"verdict",
           {{"kind", r.verdict.kind == Verdict::Kind::UniqueIncompressible ? "UniqueIncompressible"
                                                                            : "TwoCandidates"},
            {"surfaces", verdict_surfaces}}},
          {"compressions", compressions},
          {"intermediates",
           {coords_json(r.intermediates.first.coords()),
            coords_json(r.intermediates.second.coords())}}};
}

std::string to_text(const FillingReport& r) {
  std::ostringstream os;
  os << "filling slope (2p,q) = (" << 2 * r.spec.p() << "," << r.spec.q() << ")  [p=" << r.spec.p()
     << ", q=" << r.spec.q() << "]\n";
  os << "transition matrix A = ((" << r.matrix.b << ", " << 2 * r.matrix.p << "), (" << r.matrix.a
     << ", " << r.matrix.q << "))\n";
  for (const SurfaceReport& s : r.surfaces) {
    os << "  " << surface_name(s.tag) << "  knot " << s.knot_slope << " -> torus " << s.torus_slope
       << "  torus genus " << s.torus_genus << "  total genus " << s.total_genus
       << (s.is_minimal_genus ? "  minimal" : "") << '\n';
  }
  os << "intermediates " << r.intermediates.first << " " << r.intermediates.second << '\n';
  os << "verdict " << r.verdict.str() << '\n';
  for (const auto& [from, to] : r.compressions)
    os << "  " << surface_name(from) << " compresses to " << surface_name(to) << '\n';
  return os.str();
}

}  // namespace moebius
