/** \file dd.hpp
 *  \brief Double-double (compensated) real and complex arithmetic.
 *
 *  Provides roughly 32 significant digits using error-free transformations
 *  (two_sum / two_prod with fused multiply-add).  Used by the Maclaurin
 *  series evaluation of the Airy functions, where the recessive solution is
 *  recovered through cancellation of terms up to ~1e8 times larger than the
 *  result; plain doubles would lose 8 digits there.
 *
 *  Only the operations needed by a power-series recurrence are implemented:
 *  add, subtract, multiply, and division by an ordinary double.
 */
#pragma once

#include <cmath>

namespace prandtl {

struct Dd {
  double hi = 0.0;
  double lo = 0.0;

  Dd() = default;
  constexpr Dd(double h) : hi(h), lo(0.0) {}
  constexpr Dd(double h, double l) : hi(h), lo(l) {}

  double to_double() const { return hi + lo; }
};

namespace detail {

/// Error-free sum: a + b = s + e exactly.
inline Dd two_sum(double a, double b) {
  double s = a + b;
  double bb = s - a;
  double e = (a - (s - bb)) + (b - bb);
  return {s, e};
}

/// Error-free sum for |a| >= |b|.
inline Dd quick_two_sum(double a, double b) {
  double s = a + b;
  double e = b - (s - a);
  return {s, e};
}

/// Error-free product via FMA: a * b = p + e exactly.
inline Dd two_prod(double a, double b) {
  double p = a * b;
  double e = std::fma(a, b, -p);
  return {p, e};
}

}  // namespace detail

inline Dd operator+(Dd a, Dd b) {
  Dd s = detail::two_sum(a.hi, b.hi);
  double e = s.lo + a.lo + b.lo;
  return detail::quick_two_sum(s.hi, e);
}

inline Dd operator-(Dd a) { return {-a.hi, -a.lo}; }
inline Dd operator-(Dd a, Dd b) { return a + (-b); }

inline Dd operator*(Dd a, Dd b) {
  Dd p = detail::two_prod(a.hi, b.hi);
  double e = p.lo + a.hi * b.lo + a.lo * b.hi;
  return detail::quick_two_sum(p.hi, e);
}

inline Dd operator*(Dd a, double b) { return a * Dd(b); }
inline Dd operator*(double a, Dd b) { return Dd(a) * b; }

/// Division by an ordinary double (two Newton correction steps).
inline Dd operator/(Dd a, double b) {
  double q1 = a.hi / b;
  Dd r = a - detail::two_prod(q1, b);
  double q2 = (r.hi + r.lo) / b;
  Dd q = detail::quick_two_sum(q1, q2);
  return q;
}

inline double abs_hi(Dd a) { return std::fabs(a.hi); }

/// Complex double-double.
struct Ddc {
  Dd re, im;

  Ddc() = default;
  Ddc(Dd r, Dd i) : re(r), im(i) {}
  Ddc(double r, double i) : re(r), im(i) {}
};

inline Ddc operator+(Ddc a, Ddc b) { return {a.re + b.re, a.im + b.im}; }
inline Ddc operator-(Ddc a, Ddc b) { return {a.re - b.re, a.im - b.im}; }
inline Ddc operator*(Ddc a, Ddc b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline Ddc operator*(Ddc a, double b) { return {a.re * b, a.im * b}; }
inline Ddc operator/(Ddc a, double b) { return {a.re / b, a.im / b}; }

inline double abs_estimate(Ddc a) {
  return std::fabs(a.re.hi) + std::fabs(a.im.hi);
}

}  // namespace prandtl
