/** \file test_frac_laplacian.cpp
 *  \brief Fractional interface operator tests: frozen-oracle point values,
 *         dual-path agreement, symmetry/positivity, interval rescaling,
 *         inverse consistency, and grid convergence of the trace solve.
 */
#include <cmath>

#include <Eigen/Eigenvalues>

#include "doctest.h"
#include "prandtl/frac_laplacian.hpp"
#include "prandtl/types.hpp"

using namespace prandtl;

namespace {

/// Frozen by tools/oracles/frac_oracle.py (mpmath, 40 digits): the Riesz
/// normalization constant and p.v. kernel evaluations with a different
/// regularization (linearization subtraction) from the library's exact
/// hat antiderivatives.
constexpr double kRieszRef = 0.14212210334603234;
constexpr double kSinAtQuarter = 0.8586463302252618;   // u = sin(pi(s-1)) on (1,2), x = 1.25
constexpr double kSinAtHalf = 1.3159678627070066;      // same trace, x = 1.5
constexpr double kBumpAtQuarter = 1.6243543897878594;  // quadratic bump on (1,1.5), x = 1.25

Vector sample(const TraceGrid& g, double (*f)(double)) {
  Vector u(g.N);
  const Vector x = g.nodes();
  for (int i = 0; i < g.N; ++i) u[i] = f(x[i]);
  return u;
}

double sin_trace(double x) { return std::sin(kPi * (x - 1.0)); }
double bump_trace(double x) { return (x - 1.0) * (1.5 - x) / (0.25 * 0.25); }
double gauss_load(double x) { return std::exp(-10.0 * (x - 1.4) * (x - 1.4)); }

}  // namespace

TEST_CASE("Riesz constant matches the gamma-function closed form") {
  // Property: 4^{1/6} Gamma(2/3)/(sqrt(pi)|Gamma(-1/6)|) to 1e-13.
  CHECK(std::abs(riesz_constant_16() - kRieszRef) < 1e-13);
}

TEST_CASE("collocation matrix is symmetric positive definite") {
  const TraceGrid g{1.0, 1.0, 96};
  const Matrix A = frac_laplacian_matrix(g);
  // Symmetry to rounding: uniform grids make the kernel part Toeplitz.
  CHECK((A - A.transpose()).cwiseAbs().maxCoeff() < 1e-12 * A.cwiseAbs().maxCoeff());
  Eigen::SelfAdjointEigenSolver<Matrix> eig(0.5 * (A + A.transpose()));
  CHECK(eig.eigenvalues().minCoeff() > 0.0);
  // The exterior-zero form is coercive: smallest eigenvalue stays away
  // from zero on the unit interval.
  CHECK(eig.eigenvalues().minCoeff() > 0.5);
}

TEST_CASE("kernel path reproduces the frozen p.v. oracle values") {
  // Property: hat-collocation application of the sine trace matches the
  // independent mpmath principal-value quadrature to 3e-4 (limited by the
  // piecewise-linear interpolation of the trace).
  const TraceGrid g{1.0, 1.0, 255};  // h = 1/256: x = 1.25, 1.5 are nodes
  const Vector Au = frac_laplacian_apply(g, sample(g, sin_trace));
  CHECK(std::abs(Au[63] - kSinAtQuarter) < 3e-4);   // x = 1 + 64/256
  CHECK(std::abs(Au[127] - kSinAtHalf) < 3e-4);     // x = 1 + 128/256

  const TraceGrid gb{1.0, 0.5, 255};  // h = 0.5/256: x = 1.25 is node 128
  const Vector Ab = frac_laplacian_apply(gb, sample(gb, bump_trace));
  CHECK(std::abs(Ab[127] - kBumpAtQuarter) < 3e-4);
}

TEST_CASE("multiplier and kernel paths agree interiorly") {
  // Property: |xi|^{1/3} on the padded zero extension equals the p.v.
  // kernel form within 1e-4 relative at interior nodes at least five
  // cells from the endpoints.
  const TraceGrid g{1.0, 1.0, 256};
  const Vector u = sample(g, sin_trace);
  const Vector kernel = frac_laplacian_apply(g, u);
  const Vector mult = frac_laplacian_multiplier(g, u);
  const double scale = kernel.cwiseAbs().maxCoeff();
  double worst = 0.0;
  for (int i = 5; i < g.N - 5; ++i)
    worst = std::max(worst, std::abs(kernel[i] - mult[i]));
  CHECK(worst < 1e-4 * scale);
}

TEST_CASE("interval rescaling carries the exact one-third power") {
  // Property: the matrix on length Lbar equals Lbar^{-1/3} times the
  // unit-interval matrix (same N), to rounding; hence sigma_min * L^{1/3}
  // is constant across a decade of lengths to well under 1%.
  const int N = 64;
  const Matrix A1 = frac_laplacian_matrix({1.0, 1.0, N});
  for (double L : {0.2, 0.5, 2.0}) {
    CAPTURE(L);
    const Matrix AL = frac_laplacian_matrix({1.0, L, N});
    const Matrix scaled = std::cbrt(L) * AL;
    CHECK((scaled - A1).cwiseAbs().maxCoeff() < 1e-12 * A1.cwiseAbs().maxCoeff());
  }
  Eigen::SelfAdjointEigenSolver<Matrix> e1(A1);
  Eigen::SelfAdjointEigenSolver<Matrix> e2(frac_laplacian_matrix({1.0, 0.1, N}));
  const double c1 = e1.eigenvalues().minCoeff();
  const double c2 = e2.eigenvalues().minCoeff() * std::cbrt(0.1);
  CHECK(std::abs(c2 - c1) < 0.01 * c1);
}

TEST_CASE("interface solve: zero load, inverse consistency, residual") {
  const TraceGrid g{1.0, 1.0, 256};

  SUBCASE("zero load gives the zero trace") {
    const Vector gamma = solve_interface(g, Vector::Zero(g.N));
    CHECK(gamma.cwiseAbs().maxCoeff() < 1e-14);
  }
  SUBCASE("applying then solving returns the manufactured trace") {
    // Property: gamma = A^{-1}(A v) recovers v to 1e-6 (direct solver:
    // observed at rounding level; the bound is the contract).
    const Vector v = sample(g, sin_trace);
    const Vector G = frac_laplacian_apply(g, v);
    const Vector gamma = solve_interface(g, G);
    CHECK((gamma - v).cwiseAbs().maxCoeff() < 1e-6);
    // Discrete L2 residual of the solve at 1e-8.
    const Vector r = frac_laplacian_apply(g, gamma) - G;
    CHECK(std::sqrt(g.h()) * r.norm() < 1e-8);
  }
}

TEST_CASE("trace solve converges under grid halving") {
  // Property: against the next-finer nested grid, the sup-norm change
  // contracts consistently with an h^{1/3} rate (ratio <= 0.92 per
  // halving; the pure rate would give 2^{-1/3} = 0.794).
  auto solve_on = [](int N) {
    const TraceGrid g{1.0, 1.0, N};
    return solve_interface(g, sample(g, gauss_load));
  };
  const Vector g65 = solve_on(64), g130 = solve_on(129), g260 = solve_on(259);
  double d1 = 0.0, d2 = 0.0;
  for (int i = 1; i <= 64; ++i)
    d1 = std::max(d1, std::abs(g130[2 * i - 1] - g65[i - 1]));
  for (int j = 1; j <= 129; ++j)
    d2 = std::max(d2, std::abs(g260[2 * j - 1] - g130[j - 1]));
  CHECK(d1 < 0.1);
  CHECK(d2 <= 0.92 * d1);
}

TEST_CASE("trace functions cache norms consistently") {
  const TraceGrid g{1.0, 1.0, 128};
  TraceFunction u(g, sample(g, sin_trace));
  CHECK(u.sup() == doctest::Approx(1.0).epsilon(1e-3));
  // L2 of sin over (0,1) is 1/sqrt(2).
  CHECK(u.l2() == doctest::Approx(std::sqrt(0.5)).epsilon(1e-3));
  // Energy agrees with the explicit quadratic form.
  const Vector Au = frac_laplacian_apply(g, u.samples());
  CHECK(u.seminorm_third() ==
        doctest::Approx(std::sqrt(g.h() * u.samples().dot(Au))).epsilon(1e-12));
  // Convenience overload matches the vector path.
  TraceFunction gamma = solve_interface(TraceFunction(g, Au));
  CHECK((gamma.samples() - u.samples()).cwiseAbs().maxCoeff() < 1e-8);
}
