#include "moebius/slope.hpp"

#include <sstream>
#include <utility>

#include "moebius/error.hpp"

namespace moebius {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonPrimitive: return "NonPrimitive";
    case ErrorCode::ZeroCurve: return "ZeroCurve";
    case ErrorCode::NotOneSidedSlope: return "NotOneSidedSlope";
    case ErrorCode::NotAVertex: return "NotAVertex";
    case ErrorCode::RootHasNoParent: return "RootHasNoParent";
    case ErrorCode::AmbiguousParent: return "AmbiguousParent";
    case ErrorCode::InvalidBound: return "InvalidBound";
    case ErrorCode::UnknownFormat: return "UnknownFormat";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
  }
  return "Unknown";
}

namespace {

std::string pair_str(const Integer& l, const Integer& m) {
  return "(" + l.str() + "," + m.str() + ")";
}

std::strong_ordering compare_pairs(const Integer& l1, const Integer& m1,
                                   const Integer& l2, const Integer& m2) {
  if (l1 != l2) return l1 < l2 ? std::strong_ordering::less : std::strong_ordering::greater;
  if (m1 != m2) return m1 < m2 ? std::strong_ordering::less : std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace

Integer cross(const Coords& u, const Coords& v) {
  return u.longitude * v.meridian - v.longitude * u.meridian;
}

Slope Slope::make(Integer longitude, Integer meridian) {
  if (longitude == 0 && meridian == 0)
    throw Error(ErrorCode::ZeroCurve, "zero curve (0,0) is not a slope");
  if (gcd(longitude, meridian) != 1)
    throw Error(ErrorCode::NonPrimitive,
                "non-primitive slope " + pair_str(longitude, meridian));
  if (longitude < 0 || (longitude == 0 && meridian < 0)) {
    longitude = -longitude;
    meridian = -meridian;
  }
  return Slope(std::move(longitude), std::move(meridian));
}

std::string Slope::str() const { return pair_str(longitude_, meridian_); }

std::strong_ordering operator<=>(const Slope& x, const Slope& y) {
  return compare_pairs(x.longitude_, x.meridian_, y.longitude_, y.meridian_);
}

std::ostream& operator<<(std::ostream& os, const Slope& s) { return os << s.str(); }

Slope make_slope(Integer longitude, Integer meridian) {
  return Slope::make(std::move(longitude), std::move(meridian));
}

Integer intersection_number(const Slope& u, const Slope& v) {
  return cross(u.coords(), v.coords());
}

QuadrantSlope QuadrantSlope::make(Integer longitude, Integer meridian) {
  return quadrant_project(Slope::make(std::move(longitude), std::move(meridian)));
}

std::string QuadrantSlope::str() const { return pair_str(longitude_, meridian_); }

std::strong_ordering operator<=>(const QuadrantSlope& x, const QuadrantSlope& y) {
  return compare_pairs(x.longitude_, x.meridian_, y.longitude_, y.meridian_);
}

std::ostream& operator<<(std::ostream& os, const QuadrantSlope& s) {
  return os << s.str();
}

QuadrantSlope quadrant_project(const Slope& s) {
  if (is_odd(s.longitude()))
    throw Error(ErrorCode::NotOneSidedSlope,
                "slope " + s.str() + " has odd longitude and bounds no one-sided surface");
  // A primitive pair with even longitude has odd meridian.
  return QuadrantSlope(abs(s.longitude()), abs(s.meridian()));
}

}  // namespace moebius
