/// \file background.cpp
/// \brief Analytic evaluation of the self-similar background fields.

#include "prandtl/background.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "prandtl/quadrature.hpp"

namespace prandtl {

namespace {
constexpr int kMaxLadder = 24;  ///< profile derivative budget per evaluation
}

BackgroundFields::BackgroundFields(const FreeBoundary& fb)
    : fb_(&fb), fs_(&fb.profile()), n_(fb.n_exponent()) {}

double BackgroundFields::u_physical(double x, double y) const {
  const double eta = y * std::pow(x, -0.5 * (1.0 - n_));
  return std::pow(x, n_) * fs_->value(eta, 1);
}

double BackgroundFields::uy_physical(double x, double y) const {
  const double ex = -0.5 * (1.0 - n_);
  const double eta = y * std::pow(x, ex);
  return std::pow(x, n_ + ex) * fs_->value(eta, 2);
}

BackgroundFields::SGeom BackgroundFields::geom(double s) const {
  SGeom g;
  g.s = s;
  g.x = fb_->x_of_s(s);
  g.lam = fb_->Lambda(g.x);
  g.dlam = fb_->dLambda_dx(g.x) * g.lam * g.lam;  // lambda'(s) = Lambda' x'(s)
  const double xm = std::pow(g.x, -0.5 * (1.0 - n_));
  const double xp = g.lam * g.lam;  // x'(s)
  g.A = g.lam * xm;
  // A'(s) = lambda' x^{-(1-n)/2} + lambda * (-(1-n)/2) x^{-(1-n)/2 - 1} x'(s)
  g.dA = xm * (g.dlam - 0.5 * (1.0 - n_) * g.lam * xp / g.x);
  g.Pu = std::pow(g.x, n_);
  g.dPu = n_ * std::pow(g.x, n_ - 1.0) * xp;
  const double xh = std::pow(g.x, 0.5 * (1.0 + n_));
  g.Pp = xh / g.lam;
  // (x^{(1+n)/2}/lambda)' = x^{(1+n)/2} [ (1+n) lambda / (2x) - lambda'/lambda^2 ]
  g.dPp = xh * (0.5 * (1.0 + n_) * g.lam / g.x - g.dlam / (g.lam * g.lam));
  return g;
}

double BackgroundFields::u(const SGeom& g, double z, int dz) const {
  double d[kMaxLadder + 1];
  fs_->derivatives(g.A * z, dz + 1, d);
  return g.Pu * std::pow(g.A, dz) * d[dz + 1];
}

double BackgroundFields::psi(const SGeom& g, double z, int dz) const {
  double d[kMaxLadder + 1];
  fs_->derivatives(g.A * z, dz + 1, d);
  return g.Pp * std::pow(g.A, dz) * d[dz];
}

double BackgroundFields::u_s(const SGeom& g, double z, int dz) const {
  double d[kMaxLadder + 1];
  fs_->derivatives(g.A * z, dz + 2, d);
  const double Ak = std::pow(g.A, dz);
  const double dAk = dz == 0 ? 0.0 : dz * std::pow(g.A, dz - 1) * g.dA;
  return g.dPu * Ak * d[dz + 1] + g.Pu * dAk * d[dz + 1] +
         g.Pu * Ak * d[dz + 2] * g.dA * z;
}

double BackgroundFields::psi_s(const SGeom& g, double z, int dz) const {
  double d[kMaxLadder + 1];
  fs_->derivatives(g.A * z, dz + 2, d);
  const double Ak = std::pow(g.A, dz);
  const double dAk = dz == 0 ? 0.0 : dz * std::pow(g.A, dz - 1) * g.dA;
  return g.dPp * Ak * d[dz] + g.Pp * dAk * d[dz] + g.Pp * Ak * d[dz + 1] * g.dA * z;
}

BoundaryData designed_boundary_data(double c_right, double c_left) {
  BoundaryData d;
  d.u_right = [c_right](double z) {
    return -c_right * z * (1.0 - 2.0 * z * z * z + z * z * z * z);
  };
  d.f_left = [c_left](double z) {
    const double t = z - 1.0;
    return c_left * z * std::exp(-t * t);
  };
  return d;
}

Vector left_velocity_from_vorticity(const BoundaryData& data, double gamma0_1,
                                    const std::function<double(double)>& wz,
                                    const Vector& z_nodes) {
  const double wz1 = wz(1.0);
  if (std::abs(wz1) < 1e-12)
    throw DegenerateWeight("left_velocity_from_vorticity: wz(1) vanishes");
  auto ratio = [&](double t) {
    const double w = wz(t);
    if (std::abs(w) < 1e-12)
      throw DegenerateWeight("left_velocity_from_vorticity: wz vanishes on path");
    return data.f_left(t) / w;
  };
  Vector out(z_nodes.size());
  // March the cumulative integral through the sorted order of the requested
  // nodes so each gap is integrated once.
  std::vector<int> order(z_nodes.size());
  for (int i = 0; i < static_cast<int>(order.size()); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return z_nodes[a] < z_nodes[b]; });
  double acc = 0.0, z_prev = 1.0, w_prev = wz1;
  for (int idx : order) {
    const double z = z_nodes[idx];
    // A weight zero between samples flips the sign without ever landing a
    // quadrature point on it; scan the gap midpoint and endpoint for sign
    // changes before trusting the integral.
    for (double zc : {0.5 * (z_prev + z), z}) {
      const double w = wz(zc);
      if (std::abs(w) < 1e-12 || w * w_prev < 0.0)
        throw DegenerateWeight("left_velocity_from_vorticity: wz vanishes on path");
      w_prev = w;
    }
    acc += integrate_adaptive(ratio, z_prev, z, 1e-12);
    z_prev = z;
    out[idx] = wz(z) * (gamma0_1 / wz1 + acc);
  }
  return out;
}

}  // namespace prandtl
