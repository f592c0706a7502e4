/// \file cutoffs.cpp
/// \brief Mollifier-based cutoffs with closed-form first and second
///        derivatives.
///
/// The ramp r(x) = a(x)/(a(x)+a(1-x)), a(x) = exp(-1/x), is evaluated
/// directly; a underflows to exactly 0 outside the band, which makes the
/// support edges exact in floating point (no epsilon tails).  Derivatives
/// use the quotient rule on (a' (1-side) - a (1-side)') so that the leading
/// cancellation b' = a' + a~' never appears with the wrong sign.

#include "prandtl/cutoffs.hpp"

#include <cmath>

namespace prandtl {

namespace {

// exp(-1/x) and its first two derivatives; identically 0 for x <= 0.
inline double bump(double x) { return x <= 0.0 ? 0.0 : std::exp(-1.0 / x); }
inline double bump_d1(double x) {
  if (x <= 0.0) return 0.0;
  const double a = std::exp(-1.0 / x);
  return a / (x * x);
}
inline double bump_d2(double x) {
  if (x <= 0.0) return 0.0;
  const double a = std::exp(-1.0 / x);
  const double x2 = x * x;
  return a * (1.0 / (x2 * x2) - 2.0 / (x2 * x));
}

}  // namespace

double smooth_step(double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double a = bump(x);
  const double am = bump(1.0 - x);
  return a / (a + am);
}

double smooth_step_d(double x, int k) {
  if (k == 0) return smooth_step(x);
  if (x <= 0.0 || x >= 1.0) return 0.0;
  const double a = bump(x), am = bump(1.0 - x);
  const double a1 = bump_d1(x), am1 = -bump_d1(1.0 - x);
  const double b = a + am;
  const double num1 = a1 * am - a * am1;  // = a' b - a b'
  if (k == 1) return num1 / (b * b);
  const double a2 = bump_d2(x), am2 = bump_d2(1.0 - x);
  const double b1 = a1 + am1;
  const double num2 = a2 * am - a * am2;  // d/dx of (a' am - a am')
  return num2 / (b * b) - 2.0 * num1 * b1 / (b * b * b);
}

namespace {
constexpr double kPlateauEdge = 0.9;  // |p| below which chi_plateau == 1
constexpr double kRampScale = 10.0;   // 1 / (1 - kPlateauEdge)
}  // namespace

double chi_plateau(double p) { return smooth_step((1.0 - std::abs(p)) * kRampScale); }

double chi_plateau_d(double p, int k) {
  if (k == 0) return chi_plateau(p);
  const double q = std::abs(p);
  if (q <= kPlateauEdge || q >= 1.0) return 0.0;
  const double sgn = p > 0.0 ? 1.0 : -1.0;
  const double arg = (1.0 - q) * kRampScale;
  if (k == 1) return smooth_step_d(arg, 1) * (-kRampScale) * sgn;
  return smooth_step_d(arg, 2) * kRampScale * kRampScale;  // sgn^2 = 1
}

double chi_inner(double z, double delta) { return chi_plateau(z / delta); }

double chi_inner_d(double z, double delta, int k) {
  return chi_plateau_d(z / delta, k) / std::pow(delta, k);
}

double chi_outer(double z, double delta) { return 1.0 - chi_inner(500.0 * z, delta); }

double chi_outer_j(double z, double delta, int j) {
  return 1.0 - chi_inner(1000.0 * j * z, delta);
}

double chi_tan(double p) { return smooth_step(2.0 - p); }

double chi_tan_d(double p, int k) {
  if (k == 0) return chi_tan(p);
  const double d = smooth_step_d(2.0 - p, k);
  return (k % 2 == 1) ? -d : d;
}

double chi_left(double s, double s_lo) { return chi_tan(s_lo - s); }

double chi_left_d(double s, double s_lo, int k) {
  const double d = chi_tan_d(s_lo - s, k);
  return (k % 2 == 1) ? -d : d;
}

double chi_right(double s, double s_hi) { return chi_tan(s - s_hi); }

double chi_right_d(double s, double s_hi, int k) { return chi_tan_d(s - s_hi, k); }

double ramp_left(double s, double s_lo, double s_hi) {
  if (s <= s_lo) return chi_tan(s_lo - s);
  return chi_tan(1.0 + 2.0 * (s - s_lo) / (s_hi - s_lo));
}

double ramp_left_d(double s, double s_lo, double s_hi, int k) {
  if (s <= s_lo) return chi_left_d(s, s_lo, k);
  const double scale = 2.0 / (s_hi - s_lo);
  return chi_tan_d(1.0 + (s - s_lo) * scale, k) * std::pow(scale, k);
}

double ramp_right(double s, double s_lo, double s_hi) {
  if (s >= s_hi) return chi_tan(s - s_hi);
  return chi_tan(1.0 + 2.0 * (s_hi - s) / (s_hi - s_lo));
}

double ramp_right_d(double s, double s_lo, double s_hi, int k) {
  if (s >= s_hi) return chi_right_d(s, s_hi, k);
  const double scale = 2.0 / (s_hi - s_lo);
  const double d = chi_tan_d(1.0 + (s_hi - s) * scale, k) * std::pow(scale, k);
  return (k % 2 == 1) ? -d : d;
}

namespace {

/// Transverse factor of the corner homogenizers: 1 for |z| <= 1, 0 for
/// |z| >= 2 with a width-one transition, so second derivatives stay O(10)
/// and a grid step of order 1e-1 resolves the forcing it generates.  Flat
/// at z = 0 (the |z| kink falls inside the plateau), so the corrector
/// carries the corner value with zero first and second transverse trace.
double corner_profile(double z, int dz) {
  const double a = std::abs(z);
  if (dz == 0) return chi_tan(a);
  const double sgn = z >= 0.0 ? 1.0 : -1.0;
  return chi_tan_d(a, dz) * (dz == 1 ? sgn : 1.0);
}

}  // namespace

double phi_left(double s, double z, double s_lo, double s_hi) {
  return corner_profile(z, 0) * ramp_left(s, s_lo, s_hi);
}

double phi_right(double s, double z, double s_lo, double s_hi) {
  return corner_profile(z, 0) * ramp_right(s, s_lo, s_hi);
}

double phi_left_d(double s, double z, double s_lo, double s_hi, int ds, int dz) {
  return corner_profile(z, dz) * ramp_left_d(s, s_lo, s_hi, ds);
}

double phi_right_d(double s, double z, double s_lo, double s_hi, int ds, int dz) {
  return corner_profile(z, dz) * ramp_right_d(s, s_lo, s_hi, ds);
}

double chi_wall(double z) { return smooth_step((0.9 - z) / 0.1); }

double chi_far(double z) { return smooth_step((z - 0.125) / 0.125); }

}  // namespace prandtl
