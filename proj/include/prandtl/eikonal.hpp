#pragma once
/// \file eikonal.hpp
/// \brief The interface-straightening eikonal map p(s,Y) and its derivatives.
///
/// The map is the closed form obtained by integrating the degenerate ODE
/// dp/dY = (Y/p)^{1/2} W'(s,Y) from p(s,0) = 0:
///     p(s,Y) = (3/2)^{2/3} ( Int_0^Y W'(s,Y') sqrt(Y') dY' )^{2/3},  Y >= 0,
/// with the mirrored form p(s,Y) = -(3/2)^{2/3} ( Int_0^{|Y|} W'(s,-X)
/// sqrt(X) dX )^{2/3} for Y <= 0, so that sign(p) = sign(Y) and p is
/// strictly increasing whenever the shear W' stays above a positive floor.
///
/// Numerics: the square-root singularity at the origin is removed exactly by
/// the substitution Y' = t^2, leaving the analytic integrand 2 t^2 W'(t^2);
/// each evaluation integrates with a fixed panel structure (8 x 16-point
/// Gauss-Legendre on [0, sqrt|Y|]) so that p is smooth in both s and Y to
/// machine precision -- a requirement for the finite-difference consistency
/// checks downstream.  dp/dY uses the closed form (Y/p)^{1/2} W'; the second
/// derivative uses logarithmic differentiation away from the origin and a
/// centered difference of dp/dY inside a small collar where the closed form
/// is 0/0.

#include <functional>

#include "prandtl/free_boundary.hpp"
#include "prandtl/types.hpp"

namespace prandtl {

/// Thrown when the shear drops below the admissible floor on the strip.
struct DegenerateShear : CoordsError {
  using CoordsError::CoordsError;
};

class EikonalMap {
 public:
  using Field = std::function<double(double, double)>;  ///< (s, Y) -> value

  /// `Wp`: shear field on [s_lo, s_hi] x [Y_lo, Y_hi] (Y_lo < 0 < Y_hi).
  /// Optional `dWp_ds` enables the analytic s-derivative path; otherwise a
  /// centered difference in s is used.  Construction samples the strip and
  /// throws DegenerateShear if Wp < c0 anywhere on the sample grid.
  EikonalMap(Field Wp, double s_lo, double s_hi, double Y_lo, double Y_hi,
             double c0 = 0.1, Field dWp_ds = nullptr);

  double p(double s, double Y) const;
  double p_Y(double s, double Y) const;   ///< closed form (Y/p)^{1/2} W'
  double p_YY(double s, double Y) const;
  double p_s(double s, double Y) const;
  double Y_of_p(double s, double Z) const;  ///< monotone inverse in Y

  double Y_lo() const { return Y_lo_; }
  double Y_hi() const { return Y_hi_; }
  double Wp(double s, double Y) const { return Wp_(s, Y); }

 private:
  double integral(double s, double Y) const;    ///< Int_0^{|Y|} W'(+-X) sqrt X dX
  double integral_s(double s, double Y) const;  ///< same with dWp_ds in place of W'

  Field Wp_, dWp_ds_;
  double s_lo_, s_hi_, Y_lo_, Y_hi_, c0_;
};

}  // namespace prandtl
