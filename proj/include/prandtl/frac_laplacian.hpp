#pragma once
/// \file frac_laplacian.hpp
/// \brief One-third-order Dirichlet fractional Laplacian on an interval
///        with exterior-zero extension: kernel collocation with exact
///        hat-function antiderivatives, a Fourier-multiplier path on a
///        padded window, and the interface Poisson solve.
///
/// The operator acting on an exterior-zero trace u supported on
/// I = (a, a + Lbar) is
///
///   A u(x) = c * [ p.v. Int_I (u(x) - u(y)) |x-y|^{-4/3} dy
///                  + u(x) * 3 ((x-a)^{-1/3} + (a+Lbar-x)^{-1/3}) ],
///   c = 4^{1/6} Gamma(2/3) / (sqrt(pi) |Gamma(-1/6)|),
///
/// which equals the Fourier multiplier |xi|^{1/3} applied to the zero
/// extension.  On a uniform grid with hat-function interpolation every
/// cell integral has a closed form (antiderivatives -3 sgn(r)|r|^{-1/3}
/// and (3/2)|r|^{2/3}), the principal value cancels structurally on the
/// two cells adjacent to the collocation point, and the resulting matrix
/// is symmetric positive definite.

#include <optional>
#include <stdexcept>

#include "prandtl/types.hpp"

namespace prandtl {

/// Thrown when the discrete interface operator is rank-deficient (should
/// not occur: the fractional Dirichlet Laplacian is positive definite).
struct SingularSystem : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// c_{1,1/6}: the constant matching the kernel form to |xi|^{1/3}.
double riesz_constant_16();

/// Uniform interior collocation grid on (a, a + Lbar): nodes
/// x_i = a + i h, i = 1..N, h = Lbar/(N+1).  Endpoint values of
/// exterior-zero traces are identically zero and are not stored, so the
/// extension by zero is exact by construction.
struct TraceGrid {
  double a = 1.0;
  double Lbar = 1.0;
  int N = 256;

  double h() const { return Lbar / (N + 1); }
  double b() const { return a + Lbar; }
  Vector nodes() const;
};

/// Collocation matrix of the operator above: N x N, symmetric Toeplitz
/// plus the diagonal exterior part, positive definite.
Matrix frac_laplacian_matrix(const TraceGrid& grid);

/// Kernel path: the matrix action on interior samples.
Vector frac_laplacian_apply(const TraceGrid& grid, const Vector& u);

/// Multiplier path: sample the hat interpolant of u (zero-extended) onto a
/// periodic window `pad` times the interval length at `refine`-fold finer
/// spacing, apply |xi|^{1/3}, restrict to the interior nodes, then remove
/// the periodization exactly via the image identity
///   A_line u = A_per u + c sum_{n != 0} Int u(y) |x - y - nW|^{-4/3} dy,
/// whose smooth far-field integrals have closed forms for hats.  Acting on
/// the same piecewise-linear object as the kernel path makes the two a
/// genuine cross-check; the remaining spectral truncation of the hat kinks
/// is O((refine N)^{-2/3}).
Vector frac_laplacian_multiplier(const TraceGrid& grid, const Vector& u, int pad = 8,
                                 int refine = 16);

/// Solve A gamma = G on the grid by partial-pivot LU.
Vector solve_interface(const TraceGrid& grid, const Vector& G);

/// Image-interaction matrix: (C u)(x_i) collects the kernel integrals of
/// the interval hat interpolant against its periodic images at spacing
/// `window`,
///   (C u)(x_i) = c sum_{n != 0} Int_I u(y) |x_i - y - n window|^{-4/3} dy,
/// with exact hat antiderivatives for |n| <= images_exact and a monopole
/// midpoint tail beyond.  Since A_line = A_per + C on exterior-zero traces,
/// subtracting C from the collocation matrix yields the operator realized
/// by Fourier modes on a periodic window of that length.
Matrix periodic_image_correction(const TraceGrid& grid, double window,
                                 int images_exact = 8);

/// Solve (A - C) gamma = G: the interface solve consistent with a load
/// assembled from Fourier modes on a periodic window of length `window`
/// (which must exceed the interval length).
Vector solve_interface_periodic(const TraceGrid& grid, const Vector& G, double window);

/// Exterior-zero trace samples with lazily cached norms.
class TraceFunction {
 public:
  TraceFunction(TraceGrid grid, Vector samples);

  const TraceGrid& grid() const { return grid_; }
  const Vector& samples() const { return samples_; }

  double l2() const;              ///< sqrt(h) |u|_2
  double sup() const;
  double seminorm_third() const;  ///< sqrt(h u^T A u): order-1/3 energy

 private:
  TraceGrid grid_;
  Vector samples_;
  mutable std::optional<double> l2_, sup_, semi_;
};

/// Convenience overload returning the solved trace with its grid.
TraceFunction solve_interface(const TraceFunction& G);

}  // namespace prandtl
