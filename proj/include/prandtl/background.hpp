#pragma once
/// \file background.hpp
/// \brief Self-similar background flow over a reversed profile, in both the
///        physical frame and the boundary-fitted (s,z) frame.
///
/// Physical frame: u_phys(x,y) = x^n f'(y x^{-(1-n)/2}) with zero curve
/// Lambda_G(x) = eta_star x^{(1-n)/2}.
///
/// Boundary-fitted frame (z = y / Lambda(x), s the stretched tangential
/// coordinate): with A(s) = lambda(s) x(s)^{-(1-n)/2} the fields are
///     u(s,z)   = x^n f'(A z),
///     psi(s,z) = x^{(1+n)/2} f(A z) / lambda(s),
/// so that d/dz psi = u holds as an exact algebraic identity, and
/// v = -d/ds psi.  When lambda == lambda_G the scaling collapses to
/// A == eta_star and u(s,1) == 0 on the whole window (the interface sits
/// exactly at z = 1).
///
/// All z-derivatives are analytic through the profile's derivative ladder;
/// s-derivatives are analytic through the map derivatives (x' = lambda^2,
/// lambda'), so no finite differencing of the background ever enters the
/// coefficient formulas.

#include <functional>

#include "prandtl/free_boundary.hpp"
#include "prandtl/types.hpp"

namespace prandtl {

/// Thrown when a quadrature weight function degenerates on the path.
struct DegenerateWeight : CoordsError {
  using CoordsError::CoordsError;
};

class BackgroundFields {
 public:
  /// Requires a FreeBoundary in profile mode.
  explicit BackgroundFields(const FreeBoundary& fb);

  /// Physical-plane self-similar velocity x^n f'(y x^{-(1-n)/2}).
  double u_physical(double x, double y) const;
  double uy_physical(double x, double y) const;  ///< d/dy of the above

  /// Per-s geometry bundle; compute once per s-column in hot loops.
  struct SGeom {
    double s, x, lam, dlam;  ///< map point, lambda(s), lambda'(s)
    double A, dA;            ///< scaling A(s) = lam * x^{-(1-n)/2} and A'(s)
    double Pu, dPu;          ///< x^n and its s-derivative
    double Pp, dPp;          ///< x^{(1+n)/2}/lambda and its s-derivative
  };
  SGeom geom(double s) const;

  /// d^k/dz^k of the background velocity / stream function at (s,z).
  double u(double s, double z, int dz = 0) const { return u(geom(s), z, dz); }
  double psi(double s, double z, int dz = 0) const { return psi(geom(s), z, dz); }
  /// d/ds d^k/dz^k (mixed; one s-derivative).
  double u_s(double s, double z, int dz = 0) const { return u_s(geom(s), z, dz); }
  double psi_s(double s, double z, int dz = 0) const { return psi_s(geom(s), z, dz); }
  double v(double s, double z) const { return -psi_s(s, z, 0); }

  /// Geometry-explicit overloads (no repeated map inversion).
  double u(const SGeom& g, double z, int dz = 0) const;
  double psi(const SGeom& g, double z, int dz = 0) const;
  double u_s(const SGeom& g, double z, int dz = 0) const;
  double psi_s(const SGeom& g, double z, int dz = 0) const;
  double v(const SGeom& g, double z) const { return -psi_s(g, z, 0); }

  const FreeBoundary& boundary() const { return *fb_; }
  const FsProfile& profile() const { return *fs_; }

 private:
  const FreeBoundary* fb_;
  const FsProfile* fs_;
  double n_;
};

/// Inflow data for the mixed-type problem: a vorticity-flux profile on the
/// left edge (z > 1) and a velocity profile on the right edge (0 < z < 1).
struct BoundaryData {
  std::function<double(double)> u_right;  ///< on [0,1]; u_right(1) = 0
  std::function<double(double)> f_left;   ///< on [1, inf); rapidly decaying
  int m_max = 6;                          ///< decay weight exponent for reports
};

/// Smooth compatible test data:
///   u_right(z) = -c_right * z (1 - 2 z^3 + z^4)   (vanishes at z = 1; second
///                and third derivatives vanish at z = 0),
///   f_left(z)  = c_left * z * exp(-(z-1)^2)       (Gaussian decay beats any
///                polynomial weight).
BoundaryData designed_boundary_data(double c_right = 0.4, double c_left = 0.3);

/// Reconstruct the left-edge velocity from vorticity-flux data:
///   u(1,z) = wz(z) * [ gamma0_1 / wz(1) + Int_1^z f_left(t)/wz(t) dt ],
/// sampled at the given z-nodes (expected >= 1).  `wz` is the z-derivative
/// of the drift at the left edge.  Throws DegenerateWeight if wz vanishes
/// on the integration path.
Vector left_velocity_from_vorticity(const BoundaryData& data, double gamma0_1,
                                    const std::function<double(double)>& wz,
                                    const Vector& z_nodes);

}  // namespace prandtl
