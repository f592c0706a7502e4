/// \file eikonal.cpp
/// \brief Closed-form eikonal map evaluation with fixed-panel quadrature.

#include "prandtl/eikonal.hpp"

#include <cmath>

#include "prandtl/quadrature.hpp"

namespace prandtl {

namespace {
constexpr int kPanels = 8;            ///< fixed GL16 panels per evaluation
const double kPow32 = std::pow(1.5, 2.0 / 3.0);  ///< (3/2)^{2/3}
}  // namespace

EikonalMap::EikonalMap(Field Wp, double s_lo, double s_hi, double Y_lo, double Y_hi,
                       double c0, Field dWp_ds)
    : Wp_(std::move(Wp)), dWp_ds_(std::move(dWp_ds)), s_lo_(s_lo), s_hi_(s_hi),
      Y_lo_(Y_lo), Y_hi_(Y_hi), c0_(c0) {
  if (!(Y_lo_ < 0.0 && Y_hi_ > 0.0))
    throw std::invalid_argument("EikonalMap: strip must contain Y = 0");
  const int ns = 21, ny = 41;
  for (int i = 0; i < ns; ++i) {
    const double s = s_lo_ + (s_hi_ - s_lo_) * i / (ns - 1);
    for (int j = 0; j < ny; ++j) {
      const double Y = Y_lo_ + (Y_hi_ - Y_lo_) * j / (ny - 1);
      if (!(Wp_(s, Y) >= c0_))
        throw DegenerateShear("EikonalMap: shear below floor on strip");
    }
  }
}

double EikonalMap::integral(double s, double Y) const {
  const double T = std::sqrt(std::abs(Y));
  const double sgn = Y >= 0.0 ? 1.0 : -1.0;
  auto g = [&](double t) { return 2.0 * t * t * Wp_(s, sgn * t * t); };
  double acc = 0.0;
  for (int k = 0; k < kPanels; ++k)
    acc += integrate_gl16(g, T * k / kPanels, T * (k + 1) / kPanels);
  return acc;
}

double EikonalMap::integral_s(double s, double Y) const {
  const double T = std::sqrt(std::abs(Y));
  const double sgn = Y >= 0.0 ? 1.0 : -1.0;
  auto g = [&](double t) { return 2.0 * t * t * dWp_ds_(s, sgn * t * t); };
  double acc = 0.0;
  for (int k = 0; k < kPanels; ++k)
    acc += integrate_gl16(g, T * k / kPanels, T * (k + 1) / kPanels);
  return acc;
}

double EikonalMap::p(double s, double Y) const {
  if (Y == 0.0) return 0.0;
  const double I = integral(s, Y);
  const double mag = kPow32 * std::pow(I, 2.0 / 3.0);
  return Y >= 0.0 ? mag : -mag;
}

double EikonalMap::p_Y(double s, double Y) const {
  if (Y == 0.0) return std::pow(Wp_(s, 0.0), 2.0 / 3.0);
  const double ratio = Y / p(s, Y);  // nonnegative by construction
  return std::sqrt(ratio) * Wp_(s, Y);
}

double EikonalMap::p_YY(double s, double Y) const {
  const double scale = std::max(std::abs(Y_lo_), Y_hi_);
  const double collar = 1e-3 * scale;
  if (std::abs(Y) < collar) {
    // the logarithmic form is 0/0 at the origin; p_Y is smooth, so a short
    // centered difference is accurate here
    const double h = collar;
    return (p_Y(s, Y + h) - p_Y(s, Y - h)) / (2.0 * h);
  }
  // log-differentiate p_Y = (Y/p)^{1/2} W':
  //   p_YY / p_Y = (1 - Y p_Y / p) / (2Y) + W'_Y / W'
  const double pv = p(s, Y), py = p_Y(s, Y);
  const double hw = 1e-4 * std::max(1.0, scale);
  const double wY = (-Wp_(s, Y + 2 * hw) + 8.0 * Wp_(s, Y + hw) - 8.0 * Wp_(s, Y - hw) +
                     Wp_(s, Y - 2 * hw)) /
                    (12.0 * hw);
  return py * ((1.0 - Y * py / pv) / (2.0 * Y) + wY / Wp_(s, Y));
}

double EikonalMap::p_s(double s, double Y) const {
  if (Y == 0.0) return 0.0;
  if (dWp_ds_) {
    // p = +-(3/2 I)^{2/3}  =>  p_s = (2/3) p I_s / I
    const double I = integral(s, Y);
    return (2.0 / 3.0) * p(s, Y) * integral_s(s, Y) / I;
  }
  const double h = 1e-4 * std::max(1.0, std::abs(s));
  return (p(s + h, Y) - p(s - h, Y)) / (2.0 * h);
}

double EikonalMap::Y_of_p(double s, double Z) const {
  if (Z == 0.0) return 0.0;
  double lo, hi;
  if (Z > 0.0) {
    lo = 0.0;
    hi = Y_hi_;
    if (Z > p(s, hi) * (1.0 + 1e-12))
      throw std::domain_error("EikonalMap::Y_of_p: Z above strip image");
  } else {
    lo = Y_lo_;
    hi = 0.0;
    if (Z < p(s, lo) * (1.0 + 1e-12))
      throw std::domain_error("EikonalMap::Y_of_p: Z below strip image");
  }
  // Newton on the monotone map with bisection safeguard.
  double Y = Z / std::pow(Wp_(s, 0.0), 2.0 / 3.0);  // unit-slope seed
  if (!(Y > lo && Y < hi)) Y = 0.5 * (lo + hi);
  for (int it = 0; it < 80; ++it) {
    const double f = p(s, Y) - Z;
    if (f > 0.0)
      hi = Y;
    else
      lo = Y;
    double Yn = Y - f / p_Y(s, Y);
    if (!(Yn > lo && Yn < hi)) Yn = 0.5 * (lo + hi);
    if (std::abs(Yn - Y) < 1e-15 * (1.0 + std::abs(Y))) return Yn;
    Y = Yn;
  }
  return Y;
}

}  // namespace prandtl
