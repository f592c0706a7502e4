/// \file norms.cpp
/// \brief Discrete norms for strip fields and interface traces.

#include "prandtl/norms.hpp"

#include <cmath>
#include <limits>

#include "prandtl/fftutil.hpp"

namespace prandtl {

double lp_norm(const Vector& v, double p, double h) {
  if (std::isinf(p)) return v.cwiseAbs().maxCoeff();
  double acc = 0.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) acc += std::pow(std::abs(v[i]), p) * h;
  return std::pow(acc, 1.0 / p);
}

Vector d_s(const Vector& row, double ds) {
  const double nyquist = kPi / ds;
  return apply_multiplier(row, ds, [nyquist](double xi) {
    if (std::abs(xi) >= nyquist * (1.0 - 1e-12)) return Complex(0.0, 0.0);
    return Complex(0.0, xi);
  });
}

double interface_norm(const Matrix& field, double ds) {
  double n0 = 0.0, n1 = 0.0, n2 = 0.0;
  for (Eigen::Index j = 0; j < field.cols(); ++j) {
    const Vector row = field.col(j);
    n0 = std::max(n0, lp_norm(row, 6.0, ds));
    const Vector r1 = d_s(row, ds);
    n1 = std::max(n1, lp_norm(r1, 2.5, ds));
    const Vector r2 = apply_bessel_power(d_s(r1, ds), ds, -1.0 / 3.0);
    n2 = std::max(n2, lp_norm(r2, 2.5, ds));
  }
  return n0 + n1 + n2;
}

double trace_norm(const Vector& g1, const Vector& g2, const Vector& g3, double ds) {
  return lp_norm(apply_bessel_power(g1, ds, 1.0 / 3.0), 2.5, ds) +
         lp_norm(g2, 2.5, ds) +
         lp_norm(apply_bessel_power(g3, ds, -1.0 / 3.0), 2.5, ds);
}

}  // namespace prandtl
