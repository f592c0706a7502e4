/** \file scaledexp.hpp
 *  \brief Complex numbers carried as mantissa * exp(exponent).
 *
 *  The Dirichlet Green's function on a half-line pairs an exponentially
 *  decaying basis element with an exponentially growing one; the products
 *  that enter the variation-of-parameters integrals are O(1), but each
 *  factor can reach exp(+-700) and beyond.  Carrying a separate real
 *  exponent keeps every intermediate in range for any frequency and
 *  transverse cut-off.
 */
#pragma once

#include <cmath>
#include <limits>

#include "prandtl/types.hpp"

namespace prandtl {

struct Sxc {
  Complex m{0.0, 0.0};  ///< mantissa
  double E = 0.0;       ///< value = m * exp(E)

  static Sxc zero() { return {Complex(0.0, 0.0), 0.0}; }

  static Sxc from(Complex v) {
    if (v == Complex(0.0, 0.0)) return zero();
    double a = std::abs(v);
    double e = std::log(a);
    return {v / a, e};
  }

  bool is_zero() const { return m == Complex(0.0, 0.0); }

  Complex to_complex() const {
    if (is_zero()) return {0.0, 0.0};
    if (E > 700.0) {
      const double inf = std::numeric_limits<double>::infinity();
      return {m.real() >= 0 ? inf : -inf, m.imag() >= 0 ? inf : -inf};
    }
    if (E < -745.0) return {0.0, 0.0};
    return m * std::exp(E);
  }
};

inline Sxc operator*(Sxc a, Sxc b) {
  if (a.is_zero() || b.is_zero()) return Sxc::zero();
  return {a.m * b.m, a.E + b.E};
}

inline Sxc operator*(Sxc a, Complex c) {
  if (a.is_zero() || c == Complex(0.0, 0.0)) return Sxc::zero();
  return {a.m * c, a.E};
}

inline Sxc operator*(Complex c, Sxc a) { return a * c; }
inline Sxc operator*(Sxc a, double c) { return a * Complex(c, 0.0); }
inline Sxc operator*(double c, Sxc a) { return a * Complex(c, 0.0); }

inline Sxc operator+(Sxc a, Sxc b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.E < b.E) std::swap(a, b);
  const double d = b.E - a.E;  // <= 0
  if (d < -745.0) return a;
  return {a.m + b.m * std::exp(d), a.E};
}

inline Sxc operator-(Sxc a) { return {-a.m, a.E}; }
inline Sxc operator-(Sxc a, Sxc b) { return a + (-b); }

/// Renormalize so |mantissa| is O(1); keeps long accumulations stable.
inline Sxc normalized(Sxc a) {
  if (a.is_zero()) return a;
  double s = std::abs(a.m);
  if (s > 1e100 || s < 1e-100) {
    double e = std::log(s);
    return {a.m / s, a.E + e};
  }
  return a;
}

}  // namespace prandtl
