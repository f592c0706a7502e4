#pragma once
/// \file toy_solver.hpp
/// \brief Mixed-type strip solver: Z d_s w - d_Z^2 w = F on a window
///        (s_lo, s_hi) x R with left data on Z > 0 and right data on Z < 0,
///        coupled through the interface trace, plus the strip forcing
///        assembly used by the nonlinear iteration.
///
/// The sign of Z flips the parabolic direction, so neither half-plane is
/// well-posed with two-sided tangential data; the closure is the
/// Dirichlet-Neumann reduction: extend data and forcing to the whole s-line,
/// homogenize the corner values, and determine the interface trace from the
/// fractional Poisson problem
///   (-Delta_D)^{1/6} gamma_1 = T_{-1/3,+}[F_Q] + T_{-1/3,-}[F_Q]
/// on the window, exterior zero.  The field is then reconstructed per
/// tangential frequency by the half-line Green's-function solves and the
/// corner fields are added back.
///
/// Discretization: uniform periodic s-window [s_lo - margin, s_hi + margin]
/// (the extension cutoffs vanish to all orders at the seam, so the periodic
/// embedding error is spectrally small), uniform transverse grid per side,
/// hat-basis fractional solve on a finer interface grid with exact
/// trigonometric transfer between the two grids.

#include <functional>

#include "prandtl/coefficients.hpp"
#include "prandtl/frac_laplacian.hpp"
#include "prandtl/homogenize.hpp"
#include "prandtl/types.hpp"

namespace prandtl {

/// Thrown when the interface solve cannot be completed (degenerate window).
struct InterfaceSolveFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Thrown when the boundary profiles cannot be extended (non-finite corner
/// values).  Finite but incompatible corners are legal: the extension is
/// still applied and the defect is reported as a diagnostic.
struct ExtensionMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Discretization parameters.  Defaults resolve smooth data on the unit
/// window to a few times 1e-4 in the sup norm.
struct ToyConfig {
  double Lbar = 1.0;     ///< window length; window is (1, 1 + Lbar)
  int n_s = 256;         ///< tangential samples on the periodic embedding
  int n_z = 256;         ///< transverse intervals across [-z_cut, z_cut] (even)
  int n_interface = 512; ///< interior nodes of the fractional solve
  double z_cut = 12.0;
  double margin = 2.0;   ///< embedding margin on each side of the window
};

/// Problem data: interior forcing on the open window (all Z) and one-sided
/// boundary profiles (left profile lives on Z >= 0, right on Z <= 0).
struct ToyProblem {
  std::function<double(double, double)> F;
  SideProfile left;
  SideProfile right;
};

/// Interface traces sampled on the fractional-solve nodes.  gamma3 is
/// extracted along two routes: the interface identity d_Z^2 w(s,0) =
/// -F(s,0) (the corner fields are flat near Z = 0) and one-sided
/// differencing of the reconstructed field.
struct ToyTraces {
  Vector s;
  Vector gamma1;
  Vector gamma2;           ///< averaged Neumann trace
  Vector gamma2_jump;      ///< upper-minus-lower Neumann mismatch
  Vector gamma3_identity;
  Vector gamma3_diff;
};

struct ToySolution {
  Vector s;       ///< window nodes
  Vector Z;       ///< full transverse grid, -z_cut .. z_cut
  Matrix omega;   ///< (n_s x n_z+1)
  ToyTraces traces;

  /// Modal Dirichlet data of the homogenized trace (window DFT order); kept
  /// so independent reconstructions (residual collocation) can be run
  /// against the same interface solution.
  CVector gamma1_hat;
  /// Per-mode one-sided Neumann traces (window DFT order), for symmetry and
  /// matching diagnostics.
  CVector nu_up_hat, nu_lo_hat;
  double s0 = 0.0, ds = 0.0;
  double s_lo = 0.0, s_hi = 0.0;
  double w1 = 0.0, wR = 0.0;  ///< frozen corner values

  double dc_mismatch = 0.0;      ///< zero-mode Dirichlet defect (diagnostic)
  double data_match_left = 0.0;  ///< sup of |w(s_lo, Z) - left(Z)| over Z >= 0
  double data_match_right = 0.0; ///< sup of |w(s_hi, Z) - right(Z)| over Z <= 0
  double i_norm = 0.0;           ///< interface-strip norm of the solution
};

ToySolution solve_toy(const ToyProblem& problem, const ToyConfig& config);

/// Duhamel lift: reconstruct the field and its first two transverse
/// derivatives from modal Dirichlet data and an extended forcing, through
/// the per-frequency Green's-function panels.  The value and derivative use
/// the homogeneous + particular kernel combinations; the second derivative
/// uses the Wronskian-cancelled identity d_Z^2 w = i xi Z w - F, whose local
/// forcing term is what the kernel route leaves after its interior
/// boundary terms cancel.
struct LiftedField {
  Matrix up, up_Z, up_ZZ;  ///< (n_s x n_up) on F.Z_up
  Matrix lo, lo_Z, lo_ZZ;  ///< (n_s x n_lo) on F.Z_lo
};
LiftedField lift(const CVector& gamma1_hat, const TwoSidedField& F, double ds);

/// Strip forcing assembly from coefficient fields: with chi the inner cutoff
/// at scale delta and Omega_I = chi Omega,
///   direct:   chi (t1 d_Z Omega + t0 Omega + tm1 phi' + tm2 phi)
///           - eps mu' chi (a1 d_Z Omega + a0 Omega + am1 phi' + am2 phi)
///           - chi''/delta^2 Omega - (2/delta) chi' d_Z Omega,
///   commuted: (t1 d_Z + t0) Omega_I + chi (tm1 phi' + tm2 phi)
///           - eps mu' S[Omega] - (chi''/delta^2 + (t1/delta) chi') Omega
///           - (2/delta) chi' d_Z Omega,
/// where S collects the alpha terms.  The two agree identically: commuting
/// t1 d_Z past chi creates t1 chi' Omega, which the modified cutoff term
/// removes.  All fields are (s index) x (Z index) on the CoeffSet grid.
Matrix assemble_FI(const CoeffSet& c, const Matrix& Omega, const Matrix& Omega_Z,
                   const Matrix& phi, const Matrix& phi_p, const Vector& mu_p,
                   double eps, double delta, bool commuted);

}  // namespace prandtl
