#pragma once
/// \file cutoffs.hpp
/// \brief Smooth compactly supported cutoff functions with exact support
///        boundaries, built from the classical exp(-1/x) mollifier.
///
/// Every cutoff here is C-infinity with *exact* plateau and support edges
/// (identically 0 / identically 1 outside the transition band, not merely
/// small).  First and second derivatives are available in closed form; the
/// localization bookkeeping downstream differentiates cutoffs analytically,
/// so interpolation noise never enters commutator terms.

#include "prandtl/types.hpp"

namespace prandtl {

/// C-infinity ramp: 0 for x <= 0, 1 for x >= 1, strictly increasing between.
/// r(x) = a(x) / (a(x) + a(1-x)) with a(x) = exp(-1/x).
double smooth_step(double x);
/// k-th derivative of smooth_step, k <= 2.
double smooth_step_d(double x, int k);

/// Even plateau cutoff: 1 for |p| <= 9/10, 0 for |p| >= 1, smooth ramps.
double chi_plateau(double p);
double chi_plateau_d(double p, int k);  ///< k-th derivative, k <= 2

/// Interface localizer chi_I(Z) = chi_plateau(Z / delta).
double chi_inner(double z, double delta);
double chi_inner_d(double z, double delta, int k);

/// Outer complements built on top of the inner localizer:
/// chi_O(Z) = 1 - chi_I(500 Z) and the graded family
/// chi_{O,j}(Z) = 1 - chi_I(1000 j Z), j >= 1.  Each chi_{O,j} switches on
/// closer to the interface than its predecessor, so supp chi_{O,j} sits
/// inside the plateau of chi_{O,j+1} for j <= 9, and supp chi_O sits inside
/// the plateau of chi_{O,4}.
double chi_outer(double z, double delta);
double chi_outer_j(double z, double delta, int j);

/// One-sided tangential ramp: 1 for p <= 1, 0 for p >= 2, smooth and flat
/// (all derivatives vanish) at both ends of the transition band.
double chi_tan(double p);
double chi_tan_d(double p, int k);

/// Left/right tangential extensions of the interface window (s_lo, s_hi):
/// chi_left(s) = chi_tan(s_lo - s)  : 1 for s >= s_lo - 1, 0 for s <= s_lo - 2
/// chi_right(s) = chi_tan(s - s_hi) : 1 for s <= s_hi + 1, 0 for s >= s_hi + 2
double chi_left(double s, double s_lo);
double chi_left_d(double s, double s_lo, int k);
double chi_right(double s, double s_hi);
double chi_right_d(double s, double s_hi, int k);

/// Interior ramp glued from the left extension: equals chi_left for s <= s_lo,
/// equals 1 at s = s_lo and decays to exactly 0 at s = s_hi through
/// chi_tan(1 + 2 (s - s_lo) / (s_hi - s_lo)).  C-infinity because chi_tan is
/// flat at the glue value 1.
double ramp_left(double s, double s_lo, double s_hi);
double ramp_left_d(double s, double s_lo, double s_hi, int k);
/// Mirror image: 1 at s = s_hi, 0 at s = s_lo, equals chi_right for s >= s_hi.
double ramp_right(double s, double s_lo, double s_hi);
double ramp_right_d(double s, double s_lo, double s_hi, int k);

/// Corner homogenizers phi_left/right(s, Z) = chi_tan(|Z|) * ramp(s): the
/// transverse factor is 1 for |Z| <= 1 and 0 for |Z| >= 2 with a width-one
/// transition, keeping the forcing it generates resolvable on O(1e-1) grids.
double phi_left(double s, double z, double s_lo, double s_hi);
double phi_right(double s, double z, double s_lo, double s_hi);
/// Mixed partials: ds in {0,1}, dz in {0,1,2}.
double phi_left_d(double s, double z, double s_lo, double s_hi, int ds, int dz);
double phi_right_d(double s, double z, double s_lo, double s_hi, int ds, int dz);

/// Wall-side cutoff chi_minus(z): 1 for z <= 4/5, 0 for z >= 9/10.
double chi_wall(double z);
/// Far-side cutoff chi_plus(z): 0 for z <= 1/8, 1 for z >= 1/4.
double chi_far(double z);

}  // namespace prandtl
