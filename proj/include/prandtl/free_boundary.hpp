#pragma once
/// \file free_boundary.hpp
/// \brief Reversal-line geometry and the stretched tangential coordinate.
///
/// For a reversed-branch profile with reversal ordinate eta_star and
/// pressure exponent n, the leading-order reversal line in physical
/// coordinates is Lambda_G(x) = eta_star * x^{(1-n)/2}.  This class carries
/// Lambda = Lambda_G + eps * Xi (Xi a smooth perturbation given on a grid),
/// together with the stretched tangential coordinate s defined by
///     s(1) = 1,   ds/dx = Lambda(x)^{-2},
/// its inverse x(s), lambda(s) := Lambda(x(s)) with derivative
/// lambda'(s) = Lambda'(x) * lambda(s)^2, and the perturbation trace
/// mu(s) := Xi(x(s)) so that lambda = lambda_G + eps * mu.
///
/// Method choice: s(x) is accumulated cell-by-cell with 16-point
/// Gauss-Legendre quadrature on a dense uniform x-grid (the integrand is
/// analytic, so each cell is exact to machine precision), and x(s) is
/// recovered by bracketed Newton iteration using the exact derivative
/// x'(s) = lambda^2.  The perturbation is evaluated with a local 6-point
/// Lagrange interpolant, which keeps Xi' smooth enough for the first-order
/// coefficient formulas downstream.
///
/// A second constructor accepts an arbitrary positive curve Lambda(x) so
/// that synthetic maps (Lambda == 1, Lambda == x, ...) can exercise the
/// coordinate machinery without a flow profile behind them.

#include <functional>
#include <stdexcept>

#include "prandtl/falkner_skan.hpp"
#include "prandtl/types.hpp"

namespace prandtl {

/// Base for coordinate-layer failures.
struct CoordsError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
/// Thrown when a map curve fails positivity/monotonicity requirements.
struct NonmonotoneMap : CoordsError {
  using CoordsError::CoordsError;
};

class FreeBoundary {
 public:
  /// Physical window x in [1, 1+L] over a reversed-branch profile.
  /// Throws std::invalid_argument if the profile has no reversal ordinate.
  FreeBoundary(const FsProfile& fs, double L, double eps = 0.0, int cells = 1024);

  /// Synthetic curve Lambda(x) with analytic derivative; no profile attached.
  FreeBoundary(std::function<double(double)> Lambda_x,
               std::function<double(double)> dLambda_dx, double L, int cells = 1024);

  /// Install perturbation values Xi(x_i) on x_nodes(); rebuilds the s-table.
  /// Only meaningful in profile mode (the synthetic curve is taken as-is).
  void set_perturbation(const Vector& xi_on_nodes);
  const Vector& x_nodes() const { return xnodes_; }

  double Lambda(double x) const;  ///< Lambda_G + eps * Xi
  double dLambda_dx(double x) const;
  double Lambda_G(double x) const { return lamG_(x); }
  double dLambda_G_dx(double x) const { return dlamG_(x); }

  double s_of_x(double x) const;
  double x_of_s(double s) const;
  double s_end() const { return s_end_; }       ///< s(1+L)
  double Lbar() const { return s_end_ - 1.0; }  ///< stretched window length

  double lambda(double s) const { return Lambda(x_of_s(s)); }
  double dlambda_ds(double s) const;
  double lambda_G(double s) const { return Lambda_G(x_of_s(s)); }
  double dlambda_G_ds(double s) const;
  double mu(double s) const { return xi(x_of_s(s)); }  ///< lambda = lambda_G + eps*mu
  double dmu_ds(double s) const;

  double L() const { return L_; }
  double eps() const { return eps_; }
  bool has_profile() const { return fs_ != nullptr; }
  double n_exponent() const { return n_; }
  double eta_star() const { return eta_star_; }
  const FsProfile& profile() const;

 private:
  void init_window(int cells);
  void rebuild();
  double xi(double x) const;  ///< perturbation value (0 if unset)
  double xi_dx(double x) const;

  const FsProfile* fs_ = nullptr;
  std::function<double(double)> lamG_, dlamG_;
  double L_ = 0.0, eps_ = 0.0, n_ = 0.0, eta_star_ = 0.0;
  double x_lo_ = 0.0, x_hi_ = 0.0, hx_ = 0.0;  ///< padded table range / cell width
  Vector xnodes_;                              ///< uniform nodes on [1, 1+L]
  Vector xi_;                                  ///< perturbation values (may be empty)
  Vector table_x_, table_s_;                   ///< padded cumulative map
  double s_end_ = 0.0;
};

}  // namespace prandtl
