#pragma once

#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace leech {

/// Exact integer type used for every matrix entry and group order.
using Int = boost::multiprecision::cpp_int;

using boost::multiprecision::abs;
using boost::multiprecision::gcd;

/// Canonical residue of a modulo m, in [0, m). Requires m > 0.
inline Int mod_floor(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

/// Extended gcd: returns g = gcd(a, b) and sets x, y with a*x + b*y = g.
inline Int ext_gcd(const Int& a, const Int& b, Int& x, Int& y) {
  if (b == 0) {
    x = (a < 0) ? -1 : 1;
    y = 0;
    return abs(a);
  }
  Int x1, y1;
  Int g = ext_gcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

/// Inverse of a modulo m (requires gcd(a, m) = 1, m > 0).
inline Int mod_inverse(const Int& a, const Int& m) {
  Int x, y;
  Int g = ext_gcd(mod_floor(a, m), m, x, y);
  if (g != 1) throw std::invalid_argument("mod_inverse: not a unit");
  return mod_floor(x, m);
}

}  // namespace leech
