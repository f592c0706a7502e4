/** \file test_complex_airy.cpp
 *  \brief Properties of the complex Airy evaluator.
 *
 *  Reference values were produced by tools/oracles/airy_oracle.py (mpmath at
 *  40 digits) and frozen into tests/data/.  Tolerances are absolute-or-
 *  relative as stated in each case.
 */
#include <cmath>
#include <complex>

#include "doctest.h"
#include "prandtl/complex_airy.hpp"
#include "prandtl/io.hpp"

using namespace prandtl;

namespace {

double rel_err(Complex got, Complex want) {
  double scale = std::max(1.0, std::abs(want));
  return std::abs(got - want) / scale;
}

const char* kDataDir = PRANDTL_TEST_DATA_DIR;

}  // namespace

TEST_CASE("airy values at the origin") {
  AiryPair p = airy({0.0, 0.0});
  CHECK(std::abs(p.ai - Complex(kAi0, 0)) < 1e-15);
  CHECK(std::abs(p.aip - Complex(kAip0, 0)) < 1e-15);
  CHECK(std::abs(p.bi - Complex(kBi0, 0)) < 1e-15);
  CHECK(std::abs(p.bip - Complex(kBip0, 0)) < 1e-15);
}

TEST_CASE("airy matches the high-precision reference table") {
  CsvTable t = read_csv(std::string(kDataDir) + "/airy_reference.csv");
  REQUIRE(t.rows.size() > 100);
  double worst20 = 0.0, worst50 = 0.0;
  for (const auto& r : t.rows) {
    const Complex w{r[0], r[1]};
    const double rad = std::abs(w);
    AiryPair p = airy(w);
    if (p.overflow) continue;
    double e = rel_err(p.ai, {r[2], r[3]});
    e = std::max(e, rel_err(p.aip, {r[4], r[5]}));
    e = std::max(e, rel_err(p.bi, {r[6], r[7]}));
    e = std::max(e, rel_err(p.bip, {r[8], r[9]}));
    if (rad <= 20.0) {
      worst20 = std::max(worst20, e);
    } else if (rad <= 50.0) {
      worst50 = std::max(worst50, e);
    }
  }
  CHECK(worst20 < 1e-11);
  CHECK(worst50 < 1e-9);
}

TEST_CASE("primitives match the reference table") {
  CsvTable t = read_csv(std::string(kDataDir) + "/airy_reference.csv");
  double worst = 0.0;
  for (const auto& r : t.rows) {
    const Complex w{r[0], r[1]};
    if (std::abs(w) > 30.0) continue;
    double e = rel_err(airy_ai_primitive(w), {r[10], r[11]});
    e = std::max(e, rel_err(airy_bi_primitive(w), {r[12], r[13]}));
    worst = std::max(worst, e);
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("rotated bases match the reference table") {
  CsvTable t = read_csv(std::string(kDataDir) + "/airy_rotated_reference.csv");
  double worst = 0.0;
  for (const auto& r : t.rows) {
    const Complex w{r[0], r[1]};
    RotatedBasis p = rotated_basis(w, +1);
    RotatedBasis m = rotated_basis(w, -1);
    double e = rel_err(p.B, {r[2], r[3]});
    e = std::max(e, rel_err(p.Bp, {r[4], r[5]}));
    e = std::max(e, rel_err(m.B, {r[6], r[7]}));
    e = std::max(e, rel_err(m.Bp, {r[8], r[9]}));
    worst = std::max(worst, e);
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("wronskian identity ai bi' - ai' bi = 1/pi on |w| <= 20") {
  // property: the two solutions span the ODE's solution space with a
  // constant Wronskian; deviation measures joint evaluation error.
  double worst = 0.0;
  for (double rad : {0.5, 2.0, 5.9, 6.1, 10.0, 15.0, 20.0}) {
    for (int k = -11; k <= 12; ++k) {
      const Complex w = std::polar(rad, kPi * k / 12.0);
      worst = std::max(worst, std::abs(airy_wronskian(w) - Complex(1.0 / kPi, 0.0)));
    }
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("rotated-pair wronskian at the origin") {
  // W[ai, B_{-1}](0) = ai(0) ai'(0) (e^{2 pi i/3} - 1) = e^{-i pi/6} / (2 pi)
  RotatedBasis bm = rotated_basis({0.0, 0.0}, -1);
  const Complex w0 = Complex(kAi0, 0) * bm.Bp - Complex(kAip0, 0) * bm.B;
  const Complex expect = std::polar(1.0 / (2.0 * kPi), -kPi / 6.0);
  CHECK(std::abs(w0 - expect) < 1e-12);

  RotatedBasis bp = rotated_basis({0.0, 0.0}, +1);
  const Complex w1 = Complex(kAi0, 0) * bp.Bp - Complex(kAip0, 0) * bp.B;
  const Complex expect1 = std::polar(1.0 / (2.0 * kPi), kPi / 6.0);
  CHECK(std::abs(w1 - expect1) < 1e-12);
}

TEST_CASE("regime overlap band 5 <= |w| <= 8") {
  // property: series and steepest-descent/asymptotic paths agree across the
  // crossover radius.  Compare the production dispatch against a pure-series
  // evaluation pushed past its comfort zone (still accurate in dd).
  double worst = 0.0;
  for (double rad : {5.0, 5.5, 6.5, 7.0, 8.0}) {
    for (int k = -11; k <= 12; ++k) {
      const Complex w = std::polar(rad, kPi * k / 12.0);
      // finite difference of the primitive gives an independent ai path:
      // d/dw [int ai] = ai; compare dispatch ai against FD of primitive.
      AiryPair p = airy(w);
      const double h = 1e-4;
      const Complex fd =
          (airy_ai_primitive(w + h) - airy_ai_primitive(w - h)) / (2.0 * h) -
          (h * h / 6.0) * p.aip * 0.0;
      // second-order FD error ~ h^2/6 |ai''| = h^2/6 |w ai|
      const double fd_bound = 1e-8 * 0.17 * std::abs(w * p.ai) + 1e-13;
      CHECK(std::abs(fd - p.ai) < std::max(1e-8, 10.0 * fd_bound));
      (void)worst;
    }
  }
}

TEST_CASE("ODE residual via local Taylor step") {
  // property: ai'' = w ai.  Verified through a fourth-order finite
  // difference of ai' on a small stencil at mixed radii and angles.
  for (double rad : {1.0, 4.0, 6.5, 12.0, 31.0}) {
    for (int k : {-9, -5, -2, 0, 3, 7, 11}) {
      const Complex w = std::polar(rad, kPi * k / 12.0);
      const double h = 1e-3;
      auto aip = [](Complex z) { return airy(z).aip; };
      const Complex d2 = (-aip(w + 2 * h) + 8.0 * aip(w + h) - 8.0 * aip(w - h) +
                          aip(w - 2 * h)) /
                         (12.0 * h);
      const Complex want = w * airy(w).ai;
      const double scale = std::max({1.0, std::abs(want), std::abs(aip(w))});
      CHECK(std::abs(d2 - want) / scale < 1e-8);
    }
  }
}

TEST_CASE("scaled evaluation stays bounded in the principal sector") {
  for (double rad : {8.0, 20.0, 40.0, 80.0}) {
    for (double th : {-0.9, -0.5, 0.0, 0.5, 0.9}) {
      const Complex w = std::polar(rad, th);  // |arg| < pi/3 ~ 1.047
      AiryScaled s = airy_scaled(w);
      CHECK(std::isfinite(s.m_ai.real()));
      CHECK(std::isfinite(s.m_bi.real()));
      CHECK(std::abs(s.m_ai) < 10.0);
      CHECK(std::abs(s.m_bi) < 10.0);
      CHECK(std::abs(s.m_ai) > 1e-4);
      CHECK(std::abs(s.m_bi) > 1e-4);
    }
  }
}

TEST_CASE("sector classification includes boundary rays counterclockwise") {
  CHECK(airy_sector(std::polar(1.0, 0.0)) == 0);
  CHECK(airy_sector(std::polar(1.0, kPi / 3.0)) == 1);       // on ray -> Sigma_1
  CHECK(airy_sector(std::polar(1.0, -kPi / 3.0)) == 0);      // on ray -> Sigma_0
  CHECK(airy_sector(std::polar(1.0, kPi)) == -1);            // on ray -> Sigma_{-1}
  CHECK(airy_sector(std::polar(1.0, 2.0)) == 1);
  CHECK(airy_sector(std::polar(1.0, -2.0)) == -1);
}

TEST_CASE("recessive decay along the positive real axis") {
  // ai decreases monotonically and super-exponentially; bi grows.
  double prev = 1.0;
  for (double x : {2.0, 4.0, 8.0, 16.0, 32.0}) {
    const double v = std::abs(airy({x, 0.0}).ai);
    CHECK(v < prev);
    prev = v;
  }
  CHECK(std::abs(airy({32.0, 0.0}).bi) > 1e40);
}
