#pragma once

// One-sided Heegaard splitting surfaces of the (2p, q) Dehn filling of the
// figure-8 knot exterior.
//
// Each candidate surface is a spanning surface of the knot exterior (the
// fibre punctured torus with boundary (0,1), or one of the punctured Klein
// bottles with boundaries (4,1) and (4,-1)) closed off by the unique
// incompressible surface in the filling solid torus with the matching
// boundary slope. Genera on the solid-torus side come from the tree.

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "moebius/slope.hpp"

namespace moebius {

class FillingSpec {
 public:
  /// Requires gcd(p, q) = 1, |p| > |q|, |p| > 2 and q odd (so that (2p, q)
  /// is a primitive filling slope). Throws Error{InvalidSpec}.
  static FillingSpec make(Integer p, Integer q);

  const Integer& p() const noexcept { return p_; }
  const Integer& q() const noexcept { return q_; }
  bool same_sign() const { return (p_ > 0) == (q_ > 0); }
  /// |2p/q| > 3, compared exactly as 2|p| > 3|q|. Equality cannot occur.
  bool ratio_exceeds_three() const { return 2 * abs(p_) > 3 * abs(q_); }

 private:
  FillingSpec(Integer p, Integer q) : p_(std::move(p)), q_(std::move(q)) {}

  Integer p_;
  Integer q_;
};

/// A = ((b, 2p), (a, q)) with det A = bq - 2pa = 1, converting solid-torus
/// coordinates to knot-space coordinates.
struct TransitionMatrix {
  Integer a;
  Integer b;
  Integer p;
  Integer q;

  Integer determinant() const { return b * q - 2 * p * a; }
  /// A^{-1} = ((q, -2p), (-a, b)) applied to a column vector.
  Coords apply_inverse(const Coords& knot) const;
};

/// (a, b) of least Euclidean norm on the line (a + kq, b + 2pk); a tie
/// between two lattice points goes to the one with b > 0.
TransitionMatrix transition_matrix(const FillingSpec& spec);

/// Knot-space pairs are stored in the order they are written, (4,1)_K as
/// Slope(4, 1); only sign is canonicalized.
Slope knot_to_torus(const Slope& knot_slope, const TransitionMatrix& m);

enum class SurfaceTag { Seifert_01, Klein_41, Klein_4m1 };

inline constexpr std::array<SurfaceTag, 3> kSurfaces{SurfaceTag::Seifert_01, SurfaceTag::Klein_41,
                                                     SurfaceTag::Klein_4m1};

/// "K_(0,1)", "K_(4,1)", "K_(4,-1)"
std::string surface_name(SurfaceTag tag);
Slope knot_slope(SurfaceTag tag);
/// Euler characteristic of the knot-exterior piece; -1 for all three.
inline int knot_part_euler(SurfaceTag) { return -1; }

/// Crosscap genus of the closed surface: 2 + tree genus of the projected
/// torus slope. Throws Error{NotAVertex} (or a slope error) otherwise.
std::size_t total_genus(SurfaceTag surface, const Slope& torus_slope);

/// Boundary slopes one Moebius band away from K_(0,1) towards K_(4,1) and
/// towards K_(4,-1): (2q-2p, -2a+b) and (2q+2p, -2a-b).
std::pair<Slope, Slope> intermediate_slopes(const FillingSpec& spec, const TransitionMatrix& m);

/// The four torus longitudes the ordering argument compares, as
/// (|2q-2p|, |2p|, |2q+2p|, |4q+2p|) for p, q of the same sign and
/// (|2q+2p|, |2p|, |2q-2p|, |4q-2p|) otherwise.
std::array<Integer, 4> longitude_chain(const FillingSpec& spec);

/// Whether longitude_chain is strictly increasing.
bool genus_order_check(const FillingSpec& spec);

struct SurfaceReport {
  SurfaceTag tag;
  Slope knot_slope;
  Slope torus_slope;
  std::size_t torus_genus;
  std::size_t total_genus;
  bool is_minimal_genus;
};

struct Verdict {
  enum class Kind { UniqueIncompressible, TwoCandidates };
  Kind kind;
  std::vector<SurfaceTag> surfaces;

  std::string str() const;
};

struct FillingReport {
  FillingSpec spec;
  TransitionMatrix matrix;
  std::array<SurfaceReport, 3> surfaces;  // in kSurfaces order
  Verdict verdict;
  /// (from, to): `from` geometrically compresses to `to`.
  std::vector<std::pair<SurfaceTag, SurfaceTag>> compressions;
  std::pair<Slope, Slope> intermediates;

  const SurfaceReport& surface(SurfaceTag tag) const {
    return surfaces[static_cast<std::size_t>(tag)];
  }
};

/// Throws Error{InternalInconsistency} if tree genera contradict the ratio
/// verdict.
FillingReport classify(const FillingSpec& spec);

nlohmann::json to_json(const FillingReport& report);
std::string to_text(const FillingReport& report);

}  // namespace moebius
