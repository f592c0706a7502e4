/** \file frac_laplacian.cpp
 *  \brief Kernel-collocation and multiplier paths for the one-third-order
 *         Dirichlet fractional Laplacian, and the interface solve.
 */
#include "prandtl/frac_laplacian.hpp"

#include <cmath>

#include <Eigen/LU>

#include "prandtl/fftutil.hpp"

namespace prandtl {

namespace {

/// Antiderivative of |r|^{-4/3}.
double I0(double r) { return -3.0 * (r >= 0 ? 1.0 : -1.0) * std::pow(std::abs(r), -1.0 / 3.0); }
/// Antiderivative of r |r|^{-4/3}.
double I1(double r) { return 1.5 * std::cbrt(r * r); }

}  // namespace

double riesz_constant_16() {
  const double g23 = std::tgamma(2.0 / 3.0);
  const double g56 = std::tgamma(5.0 / 6.0);  // |Gamma(-1/6)| = 6 Gamma(5/6)
  return std::cbrt(2.0) * g23 / (std::sqrt(kPi) * 6.0 * g56);
}

Vector TraceGrid::nodes() const {
  Vector x(N);
  const double hh = h();
  for (int i = 0; i < N; ++i) x[i] = a + (i + 1) * hh;
  return x;
}

Matrix frac_laplacian_matrix(const TraceGrid& grid) {
  const int N = grid.N;
  const double hh = grid.h();
  const double c = riesz_constant_16();
  Matrix A = Matrix::Zero(N, N);

  for (int i = 1; i <= N; ++i) {
    const double xi = grid.a + i * hh;
    // Exterior part: closed-form power-law integrals over both tails.
    A(i - 1, i - 1) += c * 3.0 *
                       (std::pow(xi - grid.a, -1.0 / 3.0) + std::pow(grid.b() - xi, -1.0 / 3.0));
    // Interior cells [y_k, y_{k+1}], k = 0..N, with u piecewise linear:
    // u(x_i) - u(y) = P + Q r in r = y - x_i, where
    //   P = u_i - u_k - (u_{k+1} - u_k) r0/h,  Q = -(u_{k+1} - u_k)/h,
    // integrated exactly against |r|^{-4/3}.  On the two cells touching
    // x_i the coefficient P vanishes identically (the principal value
    // cancels structurally) and only the finite Q-part remains.
    for (int k = 0; k <= N; ++k) {
      const double r0 = (k - i) * hh;
      const double r1 = (k + 1 - i) * hh;
      const double dI1 = I1(r1) - I1(r0);
      const bool adjacent = (k == i - 1 || k == i);
      const double dI0 = adjacent ? 0.0 : I0(r1) - I0(r0);
      // coefficient of u_i from the P-part
      if (!adjacent) A(i - 1, i - 1) += c * dI0;
      // coefficients of u_k and u_{k+1} (skip the stored-zero endpoints)
      if (k >= 1) A(i - 1, k - 1) += c * ((-1.0 - r0 / hh) * dI0 + dI1 / hh);
      if (k + 1 <= N) A(i - 1, k) += c * ((r0 / hh) * dI0 - dI1 / hh);
    }
  }
  return A;
}

Vector frac_laplacian_apply(const TraceGrid& grid, const Vector& u) {
  return frac_laplacian_matrix(grid) * u;
}

Vector frac_laplacian_multiplier(const TraceGrid& grid, const Vector& u, int pad,
                                 int refine) {
  const int N = grid.N;
  const double hh = grid.h();
  const double hf = hh / refine;
  const double W = pad * grid.Lbar;
  const double c = riesz_constant_16();

  // The discrete trace is the hat interpolant of the samples; linear
  // interpolation onto the refined window grid is exact for it, so both
  // evaluation paths act on the same function.  Spectral truncation of the
  // hat kinks decays like (refine N)^{-2/3}.
  const int n = pad * (N + 1) * refine;
  const int off = ((pad - 1) / 2) * (N + 1) * refine;
  Vector ext = Vector::Zero(n);
  for (int i = 0; i <= N; ++i) {
    const double u0 = i == 0 ? 0.0 : u[i - 1];
    const double u1 = i == N ? 0.0 : u[i];
    for (int r = 0; r < refine; ++r)
      ext[off + i * refine + r] = u0 + (u1 - u0) * (static_cast<double>(r) / refine);
  }
  const Vector out = apply_multiplier(
      ext, hf, [](double xi) { return Complex(std::cbrt(std::abs(xi)), 0.0); });
  Vector res(N);
  for (int i = 1; i <= N; ++i) res[i - 1] = out[off + i * refine];

  // De-periodization: the window multiplier realizes the periodic
  // operator, and A_line = A_per + c sum_{n != 0} Int_I u(y) K(x-y-nW) dy.
  // The image integrals are smooth, so the same closed-form hat
  // antiderivatives evaluate them exactly; beyond kImagesExact windows a
  // monopole midpoint-rule tail (error O((mW)^{-10/3})) closes the sum.
  constexpr int kImagesExact = 8;
  const double M0 = hh * u.sum();  // integral of the hat interpolant
  const double cI = grid.a + 0.5 * grid.Lbar;
  for (int i = 1; i <= N; ++i) {
    const double xi = grid.a + i * hh;
    double corr = 0.0;
    for (int img = -kImagesExact; img <= kImagesExact; ++img) {
      if (img == 0) continue;
      const double xs = xi - img * W;  // kernel centered at the image point
      for (int k = 0; k <= N; ++k) {
        const double uk = k == 0 ? 0.0 : u[k - 1];
        const double uk1 = k == N ? 0.0 : u[k];
        const double slope = (uk1 - uk) / hh;
        const double r0 = grid.a + k * hh - xs;
        const double r1 = r0 + hh;
        const double A = uk - slope * r0;
        corr += A * (I0(r1) - I0(r0)) + slope * (I1(r1) - I1(r0));
      }
    }
    const double m = kImagesExact + 0.5;
    corr += (M0 / W) * 3.0 *
            (std::pow(m * W - (xi - cI), -1.0 / 3.0) + std::pow(m * W + (xi - cI), -1.0 / 3.0));
    res[i - 1] += c * corr;
  }
  return res;
}

Vector solve_interface(const TraceGrid& grid, const Vector& G) {
  const Matrix A = frac_laplacian_matrix(grid);
  Eigen::PartialPivLU<Matrix> lu(A);
  const Vector diag = lu.matrixLU().diagonal().cwiseAbs();
  if (diag.minCoeff() < 1e-12 * diag.maxCoeff())
    throw SingularSystem("solve_interface: discrete operator is rank-deficient");
  return lu.solve(G);
}

Matrix periodic_image_correction(const TraceGrid& grid, double window, int images_exact) {
  if (window <= grid.Lbar)
    throw std::invalid_argument("periodic_image_correction: window must exceed the interval");
  const int N = grid.N;
  const double hh = grid.h();
  const double c = riesz_constant_16();
  const double cI = grid.a + 0.5 * grid.Lbar;
  Matrix C = Matrix::Zero(N, N);
  for (int i = 1; i <= N; ++i) {
    const double xi = grid.a + i * hh;
    for (int img = -images_exact; img <= images_exact; ++img) {
      if (img == 0) continue;
      const double xs = xi - img * window;  // kernel centered at the image point
      for (int k = 0; k <= N; ++k) {
        // hat interpolant on cell k: u(y) = u_k + slope (r - r0), r = y - xs
        const double r0 = grid.a + k * hh - xs;
        const double r1 = r0 + hh;
        const double dI0 = I0(r1) - I0(r0);
        const double dI1 = I1(r1) - I1(r0);
        const double lin = (dI1 - r0 * dI0) / hh;  // coefficient of the slope term
        if (k >= 1) C(i - 1, k - 1) += c * (dI0 - lin);
        if (k + 1 <= N) C(i - 1, k) += c * lin;
      }
    }
    // Midpoint monopole tail: each remote image contributes its mass at the
    // interval center to O((m window)^{-10/3}).
    const double m = images_exact + 0.5;
    const double tail =
        c * hh * 3.0 / window *
        (std::pow(m * window - (xi - cI), -1.0 / 3.0) +
         std::pow(m * window + (xi - cI), -1.0 / 3.0));
    for (int k = 0; k < N; ++k) C(i - 1, k) += tail;
  }
  return C;
}

Vector solve_interface_periodic(const TraceGrid& grid, const Vector& G, double window) {
  const Matrix A = frac_laplacian_matrix(grid) - periodic_image_correction(grid, window);
  Eigen::PartialPivLU<Matrix> lu(A);
  const Vector diag = lu.matrixLU().diagonal().cwiseAbs();
  if (diag.minCoeff() < 1e-12 * diag.maxCoeff())
    throw SingularSystem("solve_interface_periodic: discrete operator is rank-deficient");
  return lu.solve(G);
}

TraceFunction::TraceFunction(TraceGrid grid, Vector samples)
    : grid_(grid), samples_(std::move(samples)) {}

double TraceFunction::l2() const {
  if (!l2_) l2_ = std::sqrt(grid_.h()) * samples_.norm();
  return *l2_;
}

double TraceFunction::sup() const {
  if (!sup_) sup_ = samples_.size() ? samples_.cwiseAbs().maxCoeff() : 0.0;
  return *sup_;
}

double TraceFunction::seminorm_third() const {
  if (!semi_) {
    const Matrix A = frac_laplacian_matrix(grid_);
    semi_ = std::sqrt(grid_.h() * samples_.dot(A * samples_));
  }
  return *semi_;
}

TraceFunction solve_interface(const TraceFunction& G) {
  return TraceFunction(G.grid(), solve_interface(G.grid(), G.samples()));
}

}  // namespace prandtl
