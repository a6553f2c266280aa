#pragma once

// Exact arithmetic on slopes of essential curves on a torus.
//
// A slope is a primitive integer pair (longitude, meridian) taken up to
// overall sign. Raw, unnormalized coordinate pairs are carried as `Coords`
// so that linear maps can be applied before canonicalization.

#include <compare>
#include <ostream>
#include <string>

#include "moebius/integer.hpp"

namespace moebius {

struct Coords {
  Integer longitude;
  Integer meridian;

  friend bool operator==(const Coords&, const Coords&) = default;
};

/// Signed 2x2 determinant u.longitude * v.meridian - v.longitude * u.meridian.
Integer cross(const Coords& u, const Coords& v);

class Slope {
 public:
  /// Canonical form: longitude >= 0, and meridian == 1 when longitude == 0.
  /// Throws Error{ZeroCurve} for (0,0) and Error{NonPrimitive} when the
  /// components share a factor.
  static Slope make(Integer longitude, Integer meridian);
  static Slope make(const Coords& c) { return make(c.longitude, c.meridian); }

  const Integer& longitude() const noexcept { return longitude_; }
  const Integer& meridian() const noexcept { return meridian_; }
  Coords coords() const { return {longitude_, meridian_}; }

  std::string str() const;

  friend bool operator==(const Slope&, const Slope&) = default;
  friend std::strong_ordering operator<=>(const Slope& x, const Slope& y);

 private:
  Slope(Integer l, Integer m) : longitude_(std::move(l)), meridian_(std::move(m)) {}

  Integer longitude_;
  Integer meridian_;
};

std::ostream& operator<<(std::ostream& os, const Slope& s);

Slope make_slope(Integer longitude, Integer meridian);

/// Signed intersection pairing of the canonical representatives. Zero iff
/// the slopes coincide; antisymmetric.
Integer intersection_number(const Slope& u, const Slope& v);

/// A slope with even longitude and odd meridian, reflected into the first
/// quadrant. The root (0,1) is included.
class QuadrantSlope {
 public:
  /// Validates directly; errors as for Slope::make plus NotOneSidedSlope.
  static QuadrantSlope make(Integer longitude, Integer meridian);

  static QuadrantSlope root() { return QuadrantSlope(0, 1); }

  const Integer& longitude() const noexcept { return longitude_; }
  const Integer& meridian() const noexcept { return meridian_; }
  Coords coords() const { return {longitude_, meridian_}; }
  Slope slope() const { return Slope::make(longitude_, meridian_); }
  bool is_root() const { return longitude_ == 0; }

  std::string str() const;

  friend bool operator==(const QuadrantSlope&, const QuadrantSlope&) = default;
  friend std::strong_ordering operator<=>(const QuadrantSlope& x,
                                          const QuadrantSlope& y);

 private:
  friend QuadrantSlope quadrant_project(const Slope& s);
  QuadrantSlope(Integer l, Integer m)
      : longitude_(std::move(l)), meridian_(std::move(m)) {}

  Integer longitude_;
  Integer meridian_;
};

std::ostream& operator<<(std::ostream& os, const QuadrantSlope& s);

/// Componentwise absolute value. Throws Error{NotOneSidedSlope} unless the
/// longitude is even (a one-sided curve); primitivity then forces an odd
/// meridian.
QuadrantSlope quadrant_project(const Slope& s);

}  // namespace moebius
