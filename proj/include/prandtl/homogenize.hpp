#pragma once
/// \file homogenize.hpp
/// \brief Whole-line extension of the interface-strip system and the corner
///        homogenization that zeroes the trace at both window endpoints.
///
/// The strip problem Z d_s w - d_Z^2 w = F lives on the window
/// (s_lo, s_hi) x R with data prescribed on the left for Z > 0 and on the
/// right for Z < 0.  Extending to s in R makes the tangential Fourier
/// transform available:
///   * the Dirichlet trace extends by frozen corner values times the
///     one-sided tangential ramps chi_left / chi_right;
///   * the forcing extends, per half-plane, by the exact strip operator
///     applied to {ramp x data profile}, so the extended field *is* the
///     data extension there and matches the interior solution on the window;
///   * subtracting omega_1 phi_left + omega_R phi_right (corner values times
///     the interior-glued ramps) produces a homogenized field whose trace
///     vanishes identically outside the open window -- the form required by
///     the fractional Dirichlet solve.
///
/// The two half-planes carry independent Z = 0 rows: the upper extension row
/// uses the left-data formula while the lower one vanishes for s < s_lo (and
/// mirrored on the right), so forcing fields are stored per side.

#include <functional>

#include "prandtl/types.hpp"

namespace prandtl {

/// One-sided boundary profile: the value and its second Z-derivative.  The
/// extension operator needs exactly these two (the strip operator applied to
/// ramp(s) * profile(Z) is Z ramp' profile - ramp profile'').
struct SideProfile {
  std::function<double(double)> value;
  std::function<double(double)> second;
};

/// Forcing samples split by half-plane; each side owns its Z = 0 row.
/// `up` is (n_s x n_up) over Z_up = [0, Z_cut], `lo` is (n_s x n_lo) over
/// Z_lo = [-Z_cut, 0], both ascending in Z.  `region` tags each s node:
/// -1 left extension, 0 interior window, +1 right extension.
struct TwoSidedField {
  Vector s;
  Vector Z_up, Z_lo;
  Matrix up, lo;
  Eigen::VectorXi region;
};

/// Extend an interior forcing to the full s-line per half-plane: upper rows
/// get the left-data image for s < s_lo and zero for s > s_hi; lower rows
/// the mirror.  `F` is evaluated only for s inside the open window.
TwoSidedField extend_forcing(const std::function<double(double, double)>& F,
                             const SideProfile& left, const SideProfile& right,
                             const Vector& s, const Vector& Z_up, const Vector& Z_lo,
                             double s_lo, double s_hi);

/// Dirichlet-trace extension: interior values from `gamma1`, frozen corner
/// values times the tangential ramps outside.
Vector extend_trace(const std::function<double(double)>& gamma1, const Vector& s,
                    double s_lo, double s_hi, double w1, double wR);

/// Corner homogenization forcing
///   F_hom = w1 (Z d_s - d_Z^2) phi_left + wR (Z d_s - d_Z^2) phi_right
/// sampled on the same split grids (phi_* are smooth, so both Z = 0 rows
/// coincide).  The homogenized field (extended solution minus corrector)
/// satisfies the strip equation with F_hom subtracted from the extended
/// forcing.
TwoSidedField homogenization_forcing(const Vector& s, const Vector& Z_up,
                                     const Vector& Z_lo, double s_lo, double s_hi,
                                     double w1, double wR);

/// Trace corrector: samples of w1 phi_left(s, 0) + wR phi_right(s, 0).
/// Subtracting it from the extended trace gives the homogenized trace, which
/// vanishes at s_lo, s_hi and identically outside the window.
Vector trace_corrector(const Vector& s, double s_lo, double s_hi, double w1,
                       double wR);

}  // namespace prandtl
