/** \file test_airy_solve.cpp
 *  \brief Frequency-side half-line solver tests: homogeneous basis ratios,
 *         manufactured-solution recovery, Neumann trace structure, the
 *         Wronskian multiplier identity, smoothing functionals, and the
 *         discrete trace operator.
 */
#include <cmath>
#include <complex>
#include <functional>
#include <vector>

#include "doctest.h"
#include "prandtl/airy_solve.hpp"
#include "prandtl/complex_airy.hpp"
#include "prandtl/fftutil.hpp"
#include "prandtl/quadrature.hpp"
#include "prandtl/types.hpp"

using namespace prandtl;

namespace {

const std::function<Complex(double)> kZeroForcing = [](double) {
  return Complex(0.0, 0.0);
};

/// Manufactured upper-side solution w*(Z) = (1 + Z) e^{-Z}: w*(0) = 1,
/// w*'(0) = 0, and i xi Z w* - w*'' gives the forcing below.
Complex mms_upper(double Z) { return Complex((1.0 + Z) * std::exp(-Z), 0.0); }
std::function<Complex(double)> mms_upper_forcing(double xi) {
  return [xi](double Z) {
    const double e = std::exp(-Z);
    return Complex(0.0, xi) * (Z * (1.0 + Z) * e) - Complex((Z - 1.0) * e, 0.0);
  };
}

/// Mirror solution on the lower side: w*(Z) = (1 - Z) e^{Z} for Z <= 0.
Complex mms_lower(double Z) { return Complex((1.0 - Z) * std::exp(Z), 0.0); }
std::function<Complex(double)> mms_lower_forcing(double xi) {
  return [xi](double Z) {
    const double e = std::exp(Z);
    return Complex(0.0, xi) * (Z * (1.0 - Z) * e) + Complex((1.0 + Z) * e, 0.0);
  };
}

double cabs(Complex z) { return std::abs(z); }

}  // namespace

TEST_CASE("frequency grid and transform round trips") {
  // Property: signed frequencies follow the half-spectrum wrap
  // xi_k = 2 pi k~/(n ds), and inverse(forward) is the identity to 1e-12.
  const int n = 8;
  const double ds = 0.5;
  FrequencyGrid g = frequency_grid(n, ds);
  CHECK(g.n == n);
  CHECK(g.window == doctest::Approx(4.0));
  CHECK(g.at(0) == 0.0);
  CHECK(g.at(1) == doctest::Approx(2.0 * kPi / 4.0));
  CHECK(g.at(4) == doctest::Approx(2.0 * kPi * 4.0 / 4.0));   // Nyquist kept positive
  CHECK(g.at(5) == doctest::Approx(-2.0 * kPi * 3.0 / 4.0));
  CHECK(g.at(7) == doctest::Approx(-2.0 * kPi / 4.0));

  CVector x(n);
  for (int j = 0; j < n; ++j)
    x[j] = Complex(std::sin(1.7 * j + 0.3), std::cos(0.9 * j - 1.1));
  const CVector back = fft_inverse(fft_forward(x));
  CHECK((back - x).cwiseAbs().maxCoeff() < 1e-12);

  // Real input has a Hermitian spectrum.
  Vector xr(n);
  for (int j = 0; j < n; ++j) xr[j] = std::cos(2.3 * j);
  const CVector X = fft_forward(xr);
  for (int k = 1; k < n; ++k)
    CHECK(cabs(X[n - k] - std::conj(X[k])) < 1e-12);
}

TEST_CASE("Fourier multiplier application and Bessel powers") {
  const int n = 64;
  const double ds = 2.0 * kPi / n;
  Vector x(n);
  for (int j = 0; j < n; ++j) {
    const double s = j * ds;
    x[j] = std::sin(2.0 * s) + 0.3 * std::cos(5.0 * s);
  }

  SUBCASE("identity multiplier returns the input") {
    const Vector y = apply_multiplier(x, ds, [](double) { return Complex(1.0, 0.0); });
    CHECK((y - x).cwiseAbs().maxCoeff() < 1e-13);
  }
  SUBCASE("i xi differentiates band-limited samples") {
    // Property: m(xi) = i xi maps sin(3 s) to 3 cos(3 s) to 1e-10.
    Vector s3(n), expect(n);
    for (int j = 0; j < n; ++j) {
      s3[j] = std::sin(3.0 * j * ds);
      expect[j] = 3.0 * std::cos(3.0 * j * ds);
    }
    const Vector y = apply_multiplier(s3, ds, [](double xi) { return Complex(0.0, xi); });
    CHECK((y - expect).cwiseAbs().maxCoeff() < 1e-10);
  }
  SUBCASE("Bessel powers fix constants and invert pairwise") {
    const Vector c = Vector::Constant(n, 0.7);
    CHECK((apply_bessel_power(c, ds, 1.0 / 3.0) - c).cwiseAbs().maxCoeff() < 1e-13);
    const Vector y = apply_bessel_power(apply_bessel_power(x, ds, 1.0 / 3.0), ds, -1.0 / 3.0);
    CHECK((y - x).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("homogeneous half-line solves reproduce the Airy basis ratios") {
  // Property: with zero forcing, the upper solution is ai(rho Z)/ai(0) and
  // the lower one is B_{-sgn xi}(rho Z)/ai(0), matched to 1e-10.
  const Complex gamma1(0.8, -0.35);
  for (double xi : {0.5, -0.5, 3.0, -3.0, 40.0}) {
    CAPTURE(xi);
    const Complex rho = airy_rho(xi);
    const int sigma = xi > 0 ? -1 : +1;

    HalfLineSolution up = solve_upper(xi, gamma1, kZeroForcing);
    HalfLineSolution lo = solve_lower(xi, gamma1, kZeroForcing);
    for (double Z : {0.0, 0.15, 0.8, 1.7, 3.2}) {
      CAPTURE(Z);
      const Complex expect_up = gamma1 * airy(rho * Z).ai / kAi0;
      CHECK(cabs(up(Z) - expect_up) < 1e-10);
      const Complex expect_lo = gamma1 * rotated_basis(rho * (-Z), sigma).B / kAi0;
      CHECK(cabs(lo(-Z) - expect_lo) < 1e-10);
    }
    CHECK(cabs(up(0.0) - gamma1) < 1e-12);
    CHECK(cabs(lo(0.0) - gamma1) < 1e-12);
  }
}

TEST_CASE("Wronskian multiplier identity and rotational structure") {
  const double C0 = wronskian_c0();
  CHECK(C0 == doctest::Approx(1.0 / (2.0 * kPi * kAi0 * kAi0)).epsilon(1e-14));
  CHECK(C0 > 1.0);  // 1.26268...: the interface load is uniformly elliptic

  // Property: M(xi) = C0 e^{-i sgn(xi) pi/6} exactly; verified to 1e-10 at
  // xi = +-1 and under conjugation.
  const Complex M1 = wronskian_multiplier(1.0);
  CHECK(cabs(M1 - C0 * std::polar(1.0, -kPi / 6.0)) < 1e-10);
  CHECK(cabs(wronskian_multiplier(-1.0) - std::conj(M1)) < 1e-10);

  // Property: (i xi)^{1/3} M(xi) = C0 |xi|^{1/3} is real and positive on a
  // log-spaced grid of both signs (relative error 1e-10).
  for (double mag : {0.01, 0.1, 1.0, 10.0, 100.0}) {
    for (double sgn : {1.0, -1.0}) {
      const double xi = sgn * mag;
      CAPTURE(xi);
      const Complex prod = airy_rho(xi) * wronskian_multiplier(xi);
      const double expect = C0 * std::cbrt(mag);
      CHECK(std::abs(prod.real() - expect) < 1e-10 * expect);
      CHECK(std::abs(prod.imag()) < 1e-12 * expect);
    }
  }
}

TEST_CASE("homogeneous Neumann traces give the one-sided multipliers") {
  // Property: with zero forcing, d/dZ at the interface is rho M_+ gamma1
  // above and rho M_- gamma1 below, to 1e-10 of scale.
  const Complex gamma1(1.3, 0.4);
  for (double xi : {0.7, -0.7, 12.0, -12.0}) {
    CAPTURE(xi);
    const Complex rho = airy_rho(xi);
    const int sigma = xi > 0 ? -1 : +1;
    const Complex Mp(kAip0 / kAi0, 0.0);
    const Complex Mm = std::polar(1.0, -sigma * 2.0 * kPi / 3.0) * kAip0 / kAi0;

    HalfLineSolution up = solve_upper(xi, gamma1, kZeroForcing);
    HalfLineSolution lo = solve_lower(xi, gamma1, kZeroForcing);
    const double scale = cabs(rho * gamma1);
    CHECK(cabs(up.neumann() - rho * Mp * gamma1) < 1e-10 * scale);
    CHECK(cabs(lo.neumann() - rho * Mm * gamma1) < 1e-10 * scale);

    // Difference of the one-sided traces reproduces the multiplier times
    // the Dirichlet value: the matched-problem load is C0 |xi|^{1/3}.
    const Complex diff = lo.neumann() - up.neumann();
    CHECK(cabs(diff - rho * wronskian_multiplier(xi) * gamma1) < 1e-10 * scale);
    CHECK(cabs(diff - wronskian_c0() * std::cbrt(std::abs(xi)) * gamma1) < 1e-9 * scale);
  }
}

TEST_CASE("manufactured solution recovery across the frequency range") {
  // Property: the forced solves reproduce w* = (1 +- Z) e^{-+Z} to 1e-6 in
  // value and Neumann trace over |xi| in [0.1, 100].
  for (double mag : {0.1, 1.0, 10.0, 100.0}) {
    for (double sgn : {1.0, -1.0}) {
      const double xi = sgn * mag;
      CAPTURE(xi);
      HalfLineSolution up = solve_upper(xi, Complex(1.0, 0.0), mms_upper_forcing(xi));
      HalfLineSolution lo = solve_lower(xi, Complex(1.0, 0.0), mms_lower_forcing(xi));
      for (double Z : {0.0, 0.3, 1.0, 2.5, 5.0, 8.0}) {
        CAPTURE(Z);
        CHECK(cabs(up(Z) - mms_upper(Z)) < 1e-6);
        CHECK(cabs(lo(-Z) - mms_lower(-Z)) < 1e-6);
      }
      CHECK(cabs(up.neumann()) < 1e-6);  // w*'(0) = 0
      CHECK(cabs(lo.neumann()) < 1e-6);
    }
  }
}

TEST_CASE("solutions satisfy the transverse ODE pointwise") {
  // Property: i xi Z w - w'' = F at interior points, with w'' formed by a
  // five-point difference of the solver field; residual below 1e-8.
  const double h = 2e-3;
  for (double xi : {0.5, -0.5, 10.0, -10.0}) {
    CAPTURE(xi);
    auto Fp = mms_upper_forcing(xi);
    auto Fm = mms_lower_forcing(xi);
    HalfLineSolution up = solve_upper(xi, Complex(1.0, 0.0), Fp);
    HalfLineSolution lo = solve_lower(xi, Complex(1.0, 0.0), Fm);
    for (double Z : {0.3, 1.1, 2.2}) {
      CAPTURE(Z);
      const Complex wpp_u = (-up(Z + 2 * h) + 16.0 * up(Z + h) - 30.0 * up(Z) +
                             16.0 * up(Z - h) - up(Z - 2 * h)) /
                            (12.0 * h * h);
      CHECK(cabs(Complex(0.0, xi) * Z * up(Z) - wpp_u - Fp(Z)) < 1e-8);
      const double Zm = -Z;
      const Complex wpp_l = (-lo(Zm + 2 * h) + 16.0 * lo(Zm + h) - 30.0 * lo(Zm) +
                             16.0 * lo(Zm - h) - lo(Zm - 2 * h)) /
                            (12.0 * h * h);
      CHECK(cabs(Complex(0.0, xi) * Zm * lo(Zm) - wpp_l - Fm(Zm)) < 1e-8);
    }
  }
}

TEST_CASE("Neumann trace splits into multiplier part plus smoothing functional") {
  // Property: trace = rho M_iota gamma1 + G_iota[F] with both evaluated on
  // the same transverse cut; agreement to 1e-10 of scale.
  const Complex gamma1(0.6, 0.25);
  for (double xi : {0.8, -2.5, 15.0}) {
    CAPTURE(xi);
    const Complex rho = airy_rho(xi);
    const int sigma = xi > 0 ? -1 : +1;
    const Complex Mp(kAip0 / kAi0, 0.0);
    const Complex Mm = std::polar(1.0, -sigma * 2.0 * kPi / 3.0) * kAip0 / kAi0;
    auto Fp = mms_upper_forcing(xi);
    auto Fm = mms_lower_forcing(xi);

    HalfLineSolution up = solve_upper(xi, gamma1, Fp);
    HalfLineSolution lo = solve_lower(xi, gamma1, Fm);
    const Complex Gp = smoothing_G(+1, xi, Fp);
    const Complex Gm = smoothing_G(-1, xi, Fm);
    const double scale = std::max(1.0, cabs(rho * gamma1));
    CHECK(cabs(up.neumann() - (rho * Mp * gamma1 + Gp)) < 1e-10 * scale);
    CHECK(cabs(lo.neumann() - (rho * Mm * gamma1 + Gm)) < 1e-10 * scale);
  }
}

TEST_CASE("Dirichlet data from the load balance equalizes the Neumann traces") {
  // Property: choosing C0 |xi|^{1/3} gamma1 = G_+[F_+] - G_-[F_-] makes the
  // one-sided Neumann traces agree to 1e-9: the interface condition of the
  // matched transmission problem.
  auto Fp = [](double Z) { return Complex(std::exp(-1.3 * Z) * (1.0 + 0.5 * Z), 0.2 * std::exp(-2.0 * Z)); };
  auto Fm = [](double Z) { return Complex(0.7 * (1.0 + 0.25 * Z * Z) * std::exp(1.1 * Z), -0.1 * std::exp(0.8 * Z)); };
  for (double xi : {0.7, -3.0}) {
    CAPTURE(xi);
    const Complex Gp = smoothing_G(+1, xi, Fp);
    const Complex Gm = smoothing_G(-1, xi, Fm);
    const Complex gamma1 = (Gp - Gm) / (wronskian_c0() * std::cbrt(std::abs(xi)));
    HalfLineSolution up = solve_upper(xi, gamma1, Fp);
    HalfLineSolution lo = solve_lower(xi, gamma1, Fm);
    CHECK(cabs(up.neumann() - lo.neumann()) < 1e-9 * std::max(1.0, cabs(up.neumann())));
  }
}

TEST_CASE("hermitian symmetry under frequency reflection") {
  // Property: real physical sources satisfy F^(-xi) = conj(F^(xi)); the
  // solver then returns the conjugate field, so inverse transforms stay
  // real.  Checked to 1e-12.
  const double xi = 1.8;
  const Complex gamma1(0.45, -0.2);
  auto F = [](double Z) { return Complex(std::exp(-0.7 * Z * Z), 0.3 * Z * std::exp(-Z * Z)); };
  auto Fc = [&](double Z) { return std::conj(F(Z)); };

  HalfLineSolution a = solve_upper(xi, gamma1, F);
  HalfLineSolution b = solve_upper(-xi, std::conj(gamma1), Fc);
  for (double Z : {0.0, 0.4, 1.3, 2.6}) {
    CAPTURE(Z);
    CHECK(cabs(b(Z) - std::conj(a(Z))) < 1e-12);
  }
  CHECK(cabs(b.neumann() - std::conj(a.neumann())) < 1e-12);

  HalfLineSolution c = solve_lower(xi, gamma1, F);
  HalfLineSolution d = solve_lower(-xi, std::conj(gamma1), Fc);
  for (double Z : {-0.3, -1.5}) CHECK(cabs(d(Z) - std::conj(c(Z))) < 1e-12);
}

TEST_CASE("narrow transverse source reduces to a kernel point value") {
  // Property: for a Gaussian of width 0.01 at Z0 = 1.3, the smoothing
  // functional equals sqrt(pi) w ai(rho Z0)/ai(0) to 1.5e-3 relative (the
  // quadratic correction is O(w^2)); this is the needle-source picture of
  // the trace operator.
  const double xi = 2.0, Z0 = 1.3, w = 0.01;
  auto bump = [=](double Z) {
    const double t = (Z - Z0) / w;
    return Complex(std::exp(-t * t), 0.0);
  };
  const Complex rho = airy_rho(xi);
  const Complex expect = std::sqrt(kPi) * w * airy(rho * Z0).ai / kAi0;
  const Complex got = smoothing_G(+1, xi, bump);
  CHECK(cabs(got - expect) < 1.5e-3 * cabs(expect));
}

TEST_CASE("sampled-grid solver agrees with the panel solver") {
  // Property: the uniform-grid quartic-cell solve matches the graded-panel
  // solve to 1e-7 and the manufactured solution to 1e-6 (h = 0.01).
  const int n = 1201;
  const double Zmax = 12.0;
  for (double xi : {2.0, -2.0}) {
    CAPTURE(xi);
    Vector Zu = Vector::LinSpaced(n, 0.0, Zmax);
    CVector Fu(n);
    auto Fp = mms_upper_forcing(xi);
    for (int i = 0; i < n; ++i) Fu[i] = Fp(Zu[i]);
    SampledHalfLine su = solve_upper_sampled(xi, Complex(1.0, 0.0), Fu, Zu);
    HalfLineSolution up = solve_upper(xi, Complex(1.0, 0.0), Fp, Zmax);
    for (int i : {0, 120, 500, 800}) {
      CAPTURE(i);
      CHECK(cabs(su.omega[i] - mms_upper(Zu[i])) < 1e-6);
      CHECK(cabs(su.omega[i] - up(Zu[i])) < 1e-7);
    }
    CHECK(cabs(su.neumann - up.neumann()) < 1e-7);

    Vector Zl = Vector::LinSpaced(n, -Zmax, 0.0);
    CVector Fl(n);
    auto Fm = mms_lower_forcing(xi);
    for (int i = 0; i < n; ++i) Fl[i] = Fm(Zl[i]);
    SampledHalfLine sl = solve_lower_sampled(xi, Complex(1.0, 0.0), Fl, Zl);
    HalfLineSolution lo = solve_lower(xi, Complex(1.0, 0.0), Fm, Zmax);
    for (int i : {n - 1, n - 121, n - 501, n - 801}) {
      CAPTURE(i);
      CHECK(cabs(sl.omega[i] - mms_lower(Zl[i])) < 1e-6);
      CHECK(cabs(sl.omega[i] - lo(Zl[i])) < 1e-7);
    }
    CHECK(cabs(sl.neumann - lo.neumann()) < 1e-7);
  }

  // Sampled smoothing functional against the adaptive one.
  const double xi = 2.0;
  Vector Zu = Vector::LinSpaced(n, 0.0, Zmax);
  CVector Fu(n);
  auto Fp = mms_upper_forcing(xi);
  for (int i = 0; i < n; ++i) Fu[i] = Fp(Zu[i]);
  CHECK(cabs(smoothing_G_sampled(+1, xi, Fu, Zu) - smoothing_G(+1, xi, Fp, Zmax)) < 1e-8);
}

TEST_CASE("trace operator: normalization, zero map, and dyadic decay") {
  SUBCASE("zero sources map to zero") {
    const Vector Z = Vector::LinSpaced(31, 0.0, 6.0);
    const Vector T = T_minus_third(+1, Matrix::Zero(64, 31), 0.1, Z);
    CHECK(T.cwiseAbs().maxCoeff() < 1e-15);
  }

  SUBCASE("single mode reproduces the smoothing functional") {
    // Property: for F = cos(k0 s) b(Z) on a 2 pi window,
    // T_{-1/3,+}[F](s) = (1/C0) Re[G_+[b](k0) e^{i k0 s}] to 1e-7.
    const int ns = 64, nz = 501, k0 = 5;
    const double ds = 2.0 * kPi / ns, Zmax = 10.0;
    const Vector Z = Vector::LinSpaced(nz, 0.0, Zmax);
    auto b = [](double z) { return (1.0 + z) * std::exp(-z); };
    Matrix F(ns, nz);
    for (int j = 0; j < ns; ++j)
      for (int i = 0; i < nz; ++i) F(j, i) = std::cos(k0 * j * ds) * b(Z[i]);
    const Vector T = T_minus_third(+1, F, ds, Z);
    const Complex G = smoothing_G(+1, static_cast<double>(k0),
                                  [&](double z) { return Complex(b(z), 0.0); }, Zmax);
    for (int j = 0; j < ns; ++j) {
      const Complex phase = std::polar(1.0, k0 * j * ds);
      CHECK(std::abs(T[j] - (G * phase).real() / wronskian_c0()) < 1e-7);
    }

    // Lower side carries the opposite orientation sign.
    const Vector Zl = Vector::LinSpaced(nz, -Zmax, 0.0);
    Matrix Fl(ns, nz);
    for (int j = 0; j < ns; ++j)
      for (int i = 0; i < nz; ++i) Fl(j, i) = std::cos(k0 * j * ds) * b(-Zl[i]);
    const Vector Tl = T_minus_third(-1, Fl, ds, Zl);
    const Complex Gl = smoothing_G(-1, static_cast<double>(k0),
                                   [&](double z) { return Complex(b(-z), 0.0); }, Zmax);
    for (int j = 0; j < ns; j += 7) {
      const Complex phase = std::polar(1.0, k0 * j * ds);
      CHECK(std::abs(Tl[j] + (Gl * phase).real() / wronskian_c0()) < 1e-7);
    }
  }

  SUBCASE("oscillatory sources smooth at the one-third rate") {
    // Property: for F = cos(k s) e^{-Z^2} the amplitude of T scales like
    // k^{-1/3}; a least-squares fit over k in {16, 32, 64, 128} gives a
    // slope within 0.05 of -1/3.
    const int nz = 301;
    const double Zmax = 6.0;
    const Vector Z = Vector::LinSpaced(nz, 0.0, Zmax);
    std::vector<double> logk, logamp;
    for (int k : {16, 32, 64, 128}) {
      const int ns = 4 * k;
      const double ds = 2.0 * kPi / ns;
      Matrix F(ns, nz);
      for (int j = 0; j < ns; ++j)
        for (int i = 0; i < nz; ++i)
          F(j, i) = std::cos(k * j * ds) * std::exp(-Z[i] * Z[i]);
      const Vector T = T_minus_third(+1, F, ds, Z);
      // Amplitude via the RMS of the pure sinusoid: exact for sampled
      // cosines regardless of phase alignment.
      const double amp = std::sqrt(2.0 * T.squaredNorm() / ns);
      logk.push_back(std::log(static_cast<double>(k)));
      logamp.push_back(std::log(amp));
    }
    const int m = static_cast<int>(logk.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (int i = 0; i < m; ++i) {
      sx += logk[i];
      sy += logamp[i];
      sxx += logk[i] * logk[i];
      sxy += logk[i] * logamp[i];
    }
    const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    CHECK(std::abs(slope + 1.0 / 3.0) < 0.05);
  }
}
