#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace moebius {

/// Arbitrary-precision signed integer used for every slope coordinate.
using Integer = boost::multiprecision::cpp_int;

inline Integer abs(const Integer& x) { return x < 0 ? Integer(-x) : x; }

inline bool is_odd(const Integer& x) { return (x & 1) != 0; }

inline Integer gcd(const Integer& x, const Integer& y) {
  return boost::multiprecision::gcd(x, y);
}

/// Floor division (rounds toward negative infinity); `d` must be nonzero.
inline Integer floor_div(const Integer& n, const Integer& d) {
  Integer q = n / d;
  if ((n % d != 0) && ((n < 0) != (d < 0))) --q;
  return q;
}

/// Least non-negative residue of `n` modulo `|d|`.
inline Integer mod_floor(const Integer& n, const Integer& d) {
  Integer r = n % d;
  if (r < 0) r += abs(d);
  return r;
}

/// Coefficients of Bezout's identity: x*s + y*t == g with g = gcd(x, y) >= 0.
struct Bezout {
  Integer g;
  Integer s;
  Integer t;
};

inline Bezout extended_gcd(const Integer& x, const Integer& y) {
  Integer old_r = x, r = y;
  Integer old_s = 1, s = 0;
  Integer old_t = 0, t = 1;
  while (r != 0) {
    Integer q = old_r / r;
    Integer tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  return {old_r, old_s, old_t};
}

inline std::string to_string(const Integer& x) { return x.str(); }

}  // namespace moebius
