#pragma once
/// \file selfsimilar.hpp
/// \brief Frame changes: physical (x,y) <-> boundary-fitted (s,z), and the
///        von Mises straightening z <-> Y = w(s,z) on the interface strip.
///
/// The boundary-fitted frame is z = y / Lambda(x), s = s(x).  Partial
/// derivatives convert by
///     d/dx = Lambda^{-2} d/ds - z (Lambda'/Lambda) d/dz,
///     d/dy = Lambda^{-1} d/dz,
/// which this header exposes in both directions.
///
/// Straightening flattens the drift's zero level set: on a strip
/// |z - 1| <= delta1 where the shear w_z stays above a floor c0, the map
/// z -> Y = w(s,z) is strictly monotone and inverted by bracketed Newton
/// iteration.  Validity of the strip is checked at construction by sampling.

#include <functional>

#include "prandtl/free_boundary.hpp"
#include "prandtl/types.hpp"

namespace prandtl {

/// Thrown when the drift shear degenerates inside the straightening strip.
struct NonmonotoneProfile : CoordsError {
  using CoordsError::CoordsError;
};

/// A physical-plane scalar field pulled back to the (s,z) frame.
class SelfSimilarField {
 public:
  SelfSimilarField(const FreeBoundary& fb, std::function<double(double, double)> f_xy);

  /// Value at (s,z): f_xy(x(s), z * Lambda(x(s))).
  double operator()(double s, double z) const;

  /// Map geometry at (s,z) for derivative conversions.
  struct Jacobian {
    double x, y;          ///< physical image of (s,z)
    double lam, dlam_dx;  ///< Lambda(x), Lambda'(x)
    double z;
  };
  Jacobian jac(double s, double z) const;

  /// (F_s, F_z) -> (F_x, F_y) at the point described by J.
  static void xy_from_sz(const Jacobian& J, double Fs, double Fz, double& Fx, double& Fy);
  /// (F_x, F_y) -> (F_s, F_z).
  static void sz_from_xy(const Jacobian& J, double Fx, double Fy, double& Fs, double& Fz);

  const FreeBoundary& boundary() const { return *fb_; }

 private:
  const FreeBoundary* fb_;
  std::function<double(double, double)> f_;
};

inline SelfSimilarField build_selfsimilar(const FreeBoundary& fb,
                                          std::function<double(double, double)> f_xy) {
  return SelfSimilarField(fb, std::move(f_xy));
}

/// Monotone von Mises map z <-> Y = w(s,z) on the strip |z-1| <= delta1.
class Straightening {
 public:
  /// `w`, `wz`: drift and its z-derivative as (s,z) callables.
  /// Throws NonmonotoneProfile if wz < c0 anywhere on the sampled strip.
  Straightening(std::function<double(double, double)> w,
                std::function<double(double, double)> wz, double s_lo, double s_hi,
                double delta1 = 0.25, double c0 = 0.1);

  double Y_of_z(double s, double z) const { return w_(s, z); }
  double z_of_Y(double s, double Y) const;  ///< bracketed Newton inversion
  double Wp_of_z(double s, double z) const { return wz_(s, z); }
  double Wp_of_Y(double s, double Y) const { return wz_(s, z_of_Y(s, Y)); }

  /// Strip images [w(s, 1-delta1), w(s, 1+delta1)].
  double Y_lo(double s) const { return w_(s, 1.0 - delta1_); }
  double Y_hi(double s) const { return w_(s, 1.0 + delta1_); }
  double delta1() const { return delta1_; }

 private:
  std::function<double(double, double)> w_, wz_;
  double s_lo_, s_hi_, delta1_, c0_;
};

}  // namespace prandtl
