/** \file fftutil.cpp
 *  \brief FFT wrappers and frequency bookkeeping (kissfft backend).
 */
#include "prandtl/fftutil.hpp"

#include <unsupported/Eigen/FFT>

namespace prandtl {

FrequencyGrid frequency_grid(int n, double ds) {
  FrequencyGrid g;
  g.n = n;
  g.ds = ds;
  g.window = n * ds;
  g.xi.resize(n - 1);
  for (int k = 1; k < n; ++k) {
    const int kk = (k <= n / 2) ? k : k - n;
    g.xi[k - 1] = 2.0 * kPi * kk / g.window;
  }
  return g;
}

CVector fft_forward(const CVector& x) {
  Eigen::FFT<double> fft;
  CVector X(x.size());
  fft.fwd(X, x);
  return X;
}

CVector fft_forward(const Vector& x) {
  CVector xc = x.cast<Complex>();
  return fft_forward(xc);
}

CVector fft_inverse(const CVector& X) {
  Eigen::FFT<double> fft;
  CVector x(X.size());
  fft.inv(x, X);
  return x;
}

Vector fft_inverse_real(const CVector& X) { return fft_inverse(X).real(); }

Vector apply_multiplier(const Vector& x, double ds,
                        const std::function<Complex(double)>& m) {
  const int n = static_cast<int>(x.size());
  FrequencyGrid g = frequency_grid(n, ds);
  CVector X = fft_forward(x);
  for (int k = 0; k < n; ++k) X[k] *= m(g.at(k));
  return fft_inverse_real(X);
}

Vector apply_bessel_power(const Vector& x, double ds, double alpha) {
  return apply_multiplier(x, ds, [alpha](double xi) {
    return Complex(std::pow(1.0 + xi * xi, 0.5 * alpha), 0.0);
  });
}

Vector trig_interpolate(const CVector& X, double ds, double s0, const Vector& x) {
  const int n = static_cast<int>(X.size());
  FrequencyGrid g = frequency_grid(n, ds);
  Vector out(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    Complex acc = 0.0;
    const double d = x[i] - s0;
    for (int k = 0; k < n; ++k) {
      const double ph = g.at(k) * d;
      acc += X[k] * Complex(std::cos(ph), std::sin(ph));
    }
    out[i] = acc.real() / n;
  }
  return out;
}

namespace {

/// sin(u)/u with the removable singularity handled by the series.
double sinc(double u) {
  if (std::abs(u) < 1e-4) return 1.0 - u * u / 6.0;
  return std::sin(u) / u;
}

}  // namespace

CVector hat_interpolant_modes(const Vector& u, const Vector& nodes, double h, int n,
                              double ds, double s0) {
  FrequencyGrid g = frequency_grid(n, ds);
  CVector X = CVector::Zero(n);
  for (int k = 0; k < n; ++k) {
    const double xi = g.at(k);
    Complex acc = 0.0;
    for (Eigen::Index i = 0; i < u.size(); ++i) {
      const double ph = -xi * (nodes[i] - s0);
      acc += u[i] * Complex(std::cos(ph), std::sin(ph));
    }
    const double shape = sinc(0.5 * xi * h);
    X[k] = acc * (h / ds) * (shape * shape);
  }
  return X;
}

}  // namespace prandtl
