#pragma once
/// \file airy_solve.hpp
/// \brief Frequency-side half-line solvers for i xi Z w - w'' = F, the
///        Dirichlet-Neumann traces, the Wronskian multiplier, and the
///        half-line smoothing functionals.
///
/// For fixed frequency xi != 0 put rho = (i xi)^{1/3} = |xi|^{1/3}
/// e^{i sgn(xi) pi/6}.  On the upper half-line the decaying basis is
/// ai(rho Z); on the lower half-line it is the rotated element
/// B_{-sgn xi}(rho Z) with B_{-1}(w) = ai(w e^{+2 pi i/3}) and
/// B_{+1}(w) = ai(w e^{-2 pi i/3}).  Solutions are assembled by variation
/// of parameters:
///
///   upper:  w = c1 ai(rho Z) + (1/(rho W)) [ ai(rho Z) Int_0^Z bi F
///                                          + bi(rho Z) Int_Z^cut ai F ],
///           W = Wr[ai, bi] = 1/pi,
///   lower:  w = d2 B(rho Z) + (1/(rho W0)) [ B(rho Z) Int_Z^0 ai F
///                                          + ai(rho Z) Int_-cut^Z B F ],
///           W0 = Wr[ai, B_{-sgn xi}] = e^{-i sgn(xi) pi/6} / (2 pi),
///
/// with c1, d2 fixed by the Dirichlet trace.  Growing and decaying factors
/// are carried in mantissa/exponent form, so the O(1) products never leave
/// double range.  The transverse cut is 12 max(1, |xi|^{-1/3}), where the
/// decaying basis is below 1e-12 of its boundary value.
///
/// The Neumann traces of the homogeneous solves define the multiplier
///   M(xi) = B'_{-sgn xi}(0)/B_{-sgn xi}(0) - ai'(0)/ai(0),
/// oriented so that the structural identity
///   M(xi) = C0 e^{-i sgn(xi) pi/6},  C0 = 1/(2 pi ai(0)^2) > 0
/// holds, and hence (i xi)^{1/3} M(xi) = C0 |xi|^{1/3}: the interface load
/// of the fractional Poisson problem is real and elliptic.

#include <functional>
#include <stdexcept>
#include <vector>

#include "prandtl/scaledexp.hpp"
#include "prandtl/types.hpp"

namespace prandtl {

/// Thrown when a Green's-function combination leaves double range even in
/// scaled arithmetic (ill-posed inputs, e.g. non-decaying forcing).
struct OverflowInKernel : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// rho = (i xi)^{1/3}, principal branch: |xi|^{1/3} e^{i sgn(xi) pi/6}.
Complex airy_rho(double xi);

/// C0 = 1/(2 pi ai(0)^2).
double wronskian_c0();

/// M(xi) as above; the identity M = C0 e^{-i sgn(xi) pi/6} is exact in the
/// continuum and reproduced here to rounding via the series at the origin.
Complex wronskian_multiplier(double xi);

/// Default transverse cut 12 max(1, |xi|^{-1/3}).
double default_z_cut(double xi);

/// Solution of the half-line problem for one frequency.  Values anywhere on
/// the half-line come from cached panel cumulants plus one fresh partial
/// panel, so the field can be differenced for residual checks.
class HalfLineSolution {
 public:
  double xi() const { return xi_; }
  int side() const { return side_; }        ///< +1 upper, -1 lower
  double z_cut() const { return Zcut_; }
  Complex gamma1() const { return gamma1_; }
  Complex neumann() const { return neumann_; }

  Complex operator()(double Z) const;  ///< omega_hat(Z)
  Complex deriv(double Z) const;       ///< d/dZ omega_hat(Z)

 private:
  friend HalfLineSolution solve_half_line(int side, double xi, Complex gamma1,
                                          const std::function<Complex(double)>& Fhat,
                                          double Zcut);
  void eval(double Z, Complex* value, Complex* derivative) const;

  int side_ = +1;
  double xi_ = 0.0, Zcut_ = 0.0;
  Complex rho_, gamma1_, neumann_, invW_;
  Sxc coef_;                           ///< decaying-basis coefficient
  std::function<Complex(double)> F_;
  std::vector<double> edges_;          ///< panel edges, |Z| ascending from 0
  std::vector<Sxc> near_, far_;        ///< cumulants toward origin / cut
};

/// Upper half-line [0, Zcut]: Dirichlet value gamma1 at Z = 0, decay at the
/// far end.  Zcut <= 0 selects the default cut.
HalfLineSolution solve_upper(double xi, Complex gamma1,
                             const std::function<Complex(double)>& Fhat,
                             double Zcut = 0.0);

/// Lower half-line [-Zcut, 0].
HalfLineSolution solve_lower(double xi, Complex gamma1,
                             const std::function<Complex(double)>& Fhat,
                             double Zcut = 0.0);

/// Same solve on a uniform sample grid (quartic sliding-cell cumulants in
/// scaled arithmetic).  Z must be uniform and ascending: [0, Zmax] for the
/// upper side, [-Zmax, 0] for the lower side.
struct SampledHalfLine {
  CVector omega;  ///< field on the given grid
  CVector deriv;  ///< d/dZ on the same grid (kernel-derivative Duhamel row)
  Complex gamma1;
  Complex neumann;
};
SampledHalfLine solve_upper_sampled(double xi, Complex gamma1, const CVector& Fhat,
                                    const Vector& Z);
SampledHalfLine solve_lower_sampled(double xi, Complex gamma1, const CVector& Fhat,
                                    const Vector& Z);

/// Half-line smoothing functionals (the forcing contribution to the Neumann
/// trace):
///   G_+[F](xi) = +(1/ai(0)) Int_0^inf  ai(rho Z') F(Z') dZ',
///   G_-[F](xi) = -(1/ai(0)) Int_-inf^0 B_{-sgn xi}(rho Z') F(Z') dZ',
/// oriented so that on either side neumann = rho M_iota gamma1 + G_iota[F]
/// and equal traces force C0 |xi|^{1/3} gamma1^ = G_+[F] - G_-[F].
/// iota = +1 / -1 selects the side; xi = 0 is the continuous limit (kernel
/// identically 1 up to orientation).
Complex smoothing_G(int iota, double xi, const std::function<Complex(double)>& Fhat,
                    double Zcut = 0.0);
/// Uniform-grid version; Z as in the sampled solvers.
Complex smoothing_G_sampled(int iota, double xi, const CVector& Fhat, const Vector& Z);

/// Trace operator of the matched problem: for source samples F(s, Z) on a
/// periodic s-window (spacing ds) times a uniform transverse grid Z,
///   T_{-1/3,+}[F] = +(1/C0) F^{-1}[ G_+[F^](xi) ],
///   T_{-1/3,-}[F] = -(1/C0) F^{-1}[ G_-[F^](xi) ],
/// normalized so the two sides sum to the load of the fractional interface
/// problem (-Delta_D)^{1/6} gamma_1 = sum_iota T_{-1/3,iota}[F].
Vector T_minus_third(int iota, const Matrix& F_sZ, double ds, const Vector& Z);

}  // namespace prandtl
