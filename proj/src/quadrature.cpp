/** \file quadrature.cpp
 *  \brief Gauss-Legendre tables and uniform-grid quartic cell weights.
 */
#include "prandtl/quadrature.hpp"

namespace prandtl {

const std::array<double, 16> GaussLegendre16::nodes = {
    -0.9894009349916499326, -0.94457502307323257608, -0.86563120238783174388,
    -0.7554044083550030339, -0.61787624440264374845, -0.45801677765722738634,
    -0.28160355077925891323, -0.095012509837637440185, 0.095012509837637440185,
    0.28160355077925891323, 0.45801677765722738634, 0.61787624440264374845,
    0.7554044083550030339, 0.86563120238783174388, 0.94457502307323257608,
    0.9894009349916499326};

const std::array<double, 16> GaussLegendre16::weights = {
    0.027152459411754094852, 0.062253523938647892863, 0.09515851168249278481,
    0.12462897125553387205, 0.14959598881657673208, 0.16915651939500253819,
    0.18260341504492358887, 0.18945061045506849629, 0.18945061045506849629,
    0.18260341504492358887, 0.16915651939500253819, 0.14959598881657673208,
    0.12462897125553387205, 0.09515851168249278481, 0.062253523938647892863,
    0.027152459411754094852};

std::vector<double> uniform_breaks(double a, double b, int n) {
  std::vector<double> v(n + 1);
  for (int i = 0; i <= n; ++i) v[i] = a + (b - a) * i / n;
  return v;
}

std::vector<double> graded_breaks(double a, double b, double h0, double ratio) {
  std::vector<double> v{a};
  double h = h0;
  double x = a;
  const double dir = (b > a) ? 1.0 : -1.0;
  while (dir * (b - x) > 1e-14 * (std::fabs(a) + std::fabs(b) + 1.0)) {
    x += dir * h;
    if (dir * (b - x) <= 0.0) {
      x = b;
    }
    v.push_back(x);
    h *= ratio;
  }
  return v;
}

void cell_weights_quartic(double t, double w[5]) {
  // integral of the Lagrange basis L_k over [t, t+1], nodes {0,1,2,3,4}
  // L_k(x) = prod_{j != k} (x - j)/(k - j); integrate the monomial form.
  for (int k = 0; k < 5; ++k) {
    // expand prod_{j != k} (x - j) = sum c_m x^m
    double c[5] = {1, 0, 0, 0, 0};
    int deg = 0;
    double denom = 1.0;
    for (int j = 0; j < 5; ++j) {
      if (j == k) continue;
      denom *= (k - j);
      for (int m = deg; m >= 0; --m) {
        c[m + 1] += c[m];
        c[m] *= -static_cast<double>(j);
      }
      ++deg;
    }
    double itg = 0.0;
    double tp0 = t, tp1 = t + 1.0;
    double pow0 = 1.0, pow1 = 1.0;
    for (int m = 0; m <= 4; ++m) {
      pow0 *= tp0;
      pow1 *= tp1;
      itg += c[m] * (pow1 - pow0) / (m + 1);
    }
    w[k] = itg / denom;
  }
}

}  // namespace prandtl
