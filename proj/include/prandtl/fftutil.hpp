#pragma once
/// \file fftutil.hpp
/// \brief Discrete Fourier bookkeeping on periodic windows: signed
///        frequency grids, forward/inverse transforms, and multiplier
///        application on real samples.
///
/// Conventions: forward transform X_k = sum_j x_j e^{-2 pi i jk/n}
/// (unscaled), inverse scaled by 1/n.  The signed frequency of storage
/// index k is xi_k = 2 pi k~ / (n ds) with k~ = k for k <= n/2 and k - n
/// beyond, so a Fourier multiplier m is applied as X_k -> m(xi_k) X_k and
/// real inputs stay real whenever m(-xi) = conj(m(xi)).

#include <functional>

#include "prandtl/types.hpp"

namespace prandtl {

/// Frequency bookkeeping for an n-sample window of length n * ds.  The zero
/// frequency is excluded from storage (its treatment is operator-specific);
/// `xi` holds the nonzero signed frequencies in FFT storage order k=1..n-1.
struct FrequencyGrid {
  Vector xi;
  double ds = 0.0;
  double window = 0.0;  ///< n * ds
  int n = 0;

  /// Signed frequency of storage index k in [0, n); 0 at k = 0.
  double at(int k) const { return k == 0 ? 0.0 : xi[k - 1]; }
};

FrequencyGrid frequency_grid(int n, double ds);

CVector fft_forward(const CVector& x);
CVector fft_forward(const Vector& x);
CVector fft_inverse(const CVector& X);     ///< scaled by 1/n
Vector fft_inverse_real(const CVector& X); ///< real part of the scaled inverse

/// F^{-1}[ m(xi) F[x] ] on a periodic window with spacing ds.
Vector apply_multiplier(const Vector& x, double ds,
                        const std::function<Complex(double)>& m);

/// Bessel-potential power <d_s>^alpha: multiplier (1 + xi^2)^{alpha/2}.
Vector apply_bessel_power(const Vector& x, double ds, double alpha);

/// Real part of the trigonometric interpolant with DFT modes X (storage
/// order, length n) on a window of spacing ds anchored at s0, evaluated at
/// arbitrary points: f(x) = Re (1/n) sum_k X_k e^{i xi_k (x - s0)}.  This is
/// the exact inverse DFT at grid points and extends it off-grid.
Vector trig_interpolate(const CVector& X, double ds, double s0, const Vector& x);

/// DFT modes (storage order, length n) of the piecewise-linear interpolant
/// through nodal values u at `nodes` (uniform spacing h), zero-extended off
/// its support: the hat spectrum gives
///   X_k = (h/ds) sinc^2(xi_k h/2) sum_i u_i e^{-i xi_k (nodes_i - s0)},
/// the continuum transform divided by ds so the pair is consistent with the
/// discrete convention above.
CVector hat_interpolant_modes(const Vector& u, const Vector& nodes, double h, int n,
                              double ds, double s0);

}  // namespace prandtl
