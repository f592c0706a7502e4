#pragma once
/// \file coefficients.hpp
/// \brief First-order and zeroth-order coefficient families of the
///        straightened vorticity equation, in the (s,Y) frame (underline
///        variants) and transported to the (s,Z) frame.
///
/// The underline coefficients are assembled exactly per their defining
/// formulas from the drift w, its stream function psi, the vertical drift v,
/// the background tangential acceleration u_s, and the logarithmic ground
/// slope lambda_G'/lambda.  The inner weighted derivative (d_z / w_z)(...)
/// is applied to composite expressions by a 4th-order centered difference of
/// the expression closure -- the expressions are smooth products of analytic
/// fields, so the difference step h = 5e-4 balances truncation against
/// roundoff at ~5e-14 absolute.
///
/// The (s,Z) transport divides by p_Y^2 |W'|^2 and adds the first-order
/// map terms, verbatim:
///   tau_1 = (p_Y tau_1_ + |W'|^2 p_Y - p_Y^2 |W'|^2 Z p_s) / (p_Y^2 |W'|^2),
///   tau_i = tau_i_ / (p_Y^2 |W'|^2),      i = 0, -1, -2,
///   alpha_1 = alpha_1_ p_Y / (p_Y^2 |W'|^2),
///   alpha_i = alpha_i_ / (p_Y^2 |W'|^2),  i = 0, -1, -2.

#include <functional>

#include "prandtl/background.hpp"
#include "prandtl/eikonal.hpp"
#include "prandtl/selfsimilar.hpp"
#include "prandtl/types.hpp"

namespace prandtl {

/// Field bundle feeding the coefficient formulas.  The drift w is the field
/// being straightened (background plus perturbation); u_s is the tangential
/// acceleration of the background drift; psi its stream function; v the
/// vertical drift; lam / loglam_G the boundary scalars.
struct FlowField {
  virtual ~FlowField() = default;
  virtual double w(double s, double z, int dz) const = 0;    ///< dz <= 3
  virtual double w_s(double s, double z, int dz) const = 0;  ///< d/ds d^dz/dz^dz, dz <= 1
  virtual double psi(double s, double z, int dz) const = 0;  ///< dz <= 3
  virtual double v(double s, double z) const = 0;
  virtual double u_s(double s, double z) const = 0;
  virtual double lam(double s) const = 0;
  virtual double loglam_G(double s) const = 0;  ///< lambda_G'(s) / lambda(s)
};

/// FlowField view of the pure self-similar background (drift w == u).
class BackgroundFlowField : public FlowField {
 public:
  explicit BackgroundFlowField(const BackgroundFields& bg) : bg_(&bg) {}
  double w(double s, double z, int dz) const override { return bg_->u(s, z, dz); }
  double w_s(double s, double z, int dz) const override { return bg_->u_s(s, z, dz); }
  double psi(double s, double z, int dz) const override { return bg_->psi(s, z, dz); }
  double v(double s, double z) const override { return bg_->v(s, z); }
  double u_s(double s, double z) const override { return bg_->u_s(s, z, 0); }
  double lam(double s) const override { return bg_->boundary().lambda(s); }
  double loglam_G(double s) const override {
    return bg_->boundary().dlambda_G_ds(s) / bg_->boundary().lambda(s);
  }

 private:
  const BackgroundFields* bg_;
};

/// (s,Y)-frame coefficients (evaluated at the z preimage of Y).
struct UnderlineCoeffs {
  double t1, t0, tm1, tm2;
  double a1, a0, am1, am2;
};

UnderlineCoeffs underline_coeffs(const FlowField& f, double s, double z);

/// (s,Z)-frame coefficients.  t2 is the optional second-order correction
/// used by the frozen-coefficient spectral study; zero in the base model.
struct SzCoeffs {
  double t1, t0, tm1, tm2, t2;
  double a1, a0, am1, am2;
};

SzCoeffs coeffs_sz(const UnderlineCoeffs& u, double Z, double p_Y, double p_s,
                   double Wp);

/// Coefficient fields sampled on a tensor grid of the (s,Z) strip, with the
/// matching (s,Y)-frame samples retained for diagnostics.
struct CoeffSet {
  Vector s_nodes, Z_nodes;
  Matrix t1, t0, tm1, tm2, t2;  ///< (s index) x (Z index)
  Matrix a1, a0, am1, am2;
  Matrix t1_u, t0_u, tm1_u, tm2_u;  ///< underline variants at the same nodes
  double sup_report = 0.0;          ///< max |tau_i| over the grid (diagnostic)
};

/// Assemble the coefficient fields: for each (s, Z) node the chain
/// Z -> Y -> z runs through the eikonal inverse and the straightening
/// inverse, then the formulas above are evaluated.
CoeffSet coefficients(const FlowField& f, const Straightening& st, const EikonalMap& map,
                      const Vector& s_nodes, const Vector& Z_nodes);

/// The interface good unknown: Omega = (u_z - (w_zz/w_z) u) / w_z^2.
inline double good_unknown_omega(double u, double u_z, double w_z, double w_zz) {
  return (u_z - (w_zz / w_z) * u) / (w_z * w_z);
}

}  // namespace prandtl
