/// \file selfsimilar.cpp
/// \brief Frame-change evaluation and monotone strip straightening.

#include "prandtl/selfsimilar.hpp"

#include <cmath>

namespace prandtl {

SelfSimilarField::SelfSimilarField(const FreeBoundary& fb,
                                   std::function<double(double, double)> f_xy)
    : fb_(&fb), f_(std::move(f_xy)) {
  // Positivity of Lambda over the window was verified when the map table was
  // built; re-check the window ends as a cheap guard.
  if (!(fb.Lambda(1.0) > 0.0) || !(fb.Lambda(1.0 + fb.L()) > 0.0))
    throw NonmonotoneMap("build_selfsimilar: Lambda must be positive");
}

double SelfSimilarField::operator()(double s, double z) const {
  const double x = fb_->x_of_s(s);
  return f_(x, z * fb_->Lambda(x));
}

SelfSimilarField::Jacobian SelfSimilarField::jac(double s, double z) const {
  Jacobian J;
  J.x = fb_->x_of_s(s);
  J.lam = fb_->Lambda(J.x);
  J.dlam_dx = fb_->dLambda_dx(J.x);
  J.y = z * J.lam;
  J.z = z;
  return J;
}

void SelfSimilarField::xy_from_sz(const Jacobian& J, double Fs, double Fz, double& Fx,
                                  double& Fy) {
  Fx = Fs / (J.lam * J.lam) - J.z * (J.dlam_dx / J.lam) * Fz;
  Fy = Fz / J.lam;
}

void SelfSimilarField::sz_from_xy(const Jacobian& J, double Fx, double Fy, double& Fs,
                                  double& Fz) {
  Fz = J.lam * Fy;
  Fs = J.lam * J.lam * (Fx + J.z * J.dlam_dx * Fy);
}

Straightening::Straightening(std::function<double(double, double)> w,
                             std::function<double(double, double)> wz, double s_lo,
                             double s_hi, double delta1, double c0)
    : w_(std::move(w)), wz_(std::move(wz)), s_lo_(s_lo), s_hi_(s_hi), delta1_(delta1),
      c0_(c0) {
  // Sample the strip: the shear floor guarantees invertibility.
  const int ns = 21, nz = 41;
  for (int i = 0; i < ns; ++i) {
    const double s = s_lo_ + (s_hi_ - s_lo_) * i / (ns - 1);
    for (int j = 0; j < nz; ++j) {
      const double z = 1.0 - delta1_ + 2.0 * delta1_ * j / (nz - 1);
      if (!(wz_(s, z) >= c0_))
        throw NonmonotoneProfile("Straightening: shear below floor on strip");
    }
  }
}

double Straightening::z_of_Y(double s, double Y) const {
  double lo = 1.0 - delta1_, hi = 1.0 + delta1_;
  const double w_lo = w_(s, lo), w_hi = w_(s, hi);
  if (Y < w_lo - 1e-12 || Y > w_hi + 1e-12)
    throw std::domain_error("Straightening::z_of_Y: Y outside strip image");
  // Newton from the secant seed with bisection safeguard.
  double z = lo + (hi - lo) * (Y - w_lo) / (w_hi - w_lo);
  for (int it = 0; it < 60; ++it) {
    const double f = w_(s, z) - Y;
    if (f > 0.0)
      hi = z;
    else
      lo = z;
    const double step = f / wz_(s, z);
    double zn = z - step;
    if (!(zn > lo && zn < hi)) zn = 0.5 * (lo + hi);  // safeguard
    if (std::abs(zn - z) < 1e-15 * (1.0 + std::abs(z))) return zn;
    z = zn;
  }
  return z;
}

}  // namespace prandtl
