/// \file free_boundary.cpp
/// \brief Reversal-line geometry: cumulative quadrature for s(x) and
///        bracketed Newton inversion for x(s).

#include "prandtl/free_boundary.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "prandtl/quadrature.hpp"

namespace prandtl {

namespace {
// Padding past the physical window so transient Newton overshoot during
// inversion stays inside the table.  The perturbation is frozen at its end
// values in the pad, which is never queried by converged evaluations.
constexpr double kPadFraction = 0.05;
}  // namespace

FreeBoundary::FreeBoundary(const FsProfile& fs, double L, double eps, int cells)
    : fs_(&fs), L_(L), eps_(eps) {
  if (L <= 0.0) throw std::invalid_argument("FreeBoundary: window length must be positive");
  n_ = fs.n_exponent();
  eta_star_ = fs.eta_star;
  if (!std::isfinite(eta_star_))
    throw std::invalid_argument("FreeBoundary: profile has no reversal ordinate");
  const double es = eta_star_, ex = 0.5 * (1.0 - n_);
  lamG_ = [es, ex](double x) { return es * std::pow(x, ex); };
  dlamG_ = [es, ex](double x) { return es * ex * std::pow(x, ex - 1.0); };
  init_window(cells);
}

FreeBoundary::FreeBoundary(std::function<double(double)> Lambda_x,
                           std::function<double(double)> dLambda_dx, double L, int cells)
    : lamG_(std::move(Lambda_x)), dlamG_(std::move(dLambda_dx)), L_(L) {
  if (L <= 0.0) throw std::invalid_argument("FreeBoundary: window length must be positive");
  n_ = std::numeric_limits<double>::quiet_NaN();
  eta_star_ = std::numeric_limits<double>::quiet_NaN();
  init_window(cells);
}

const FsProfile& FreeBoundary::profile() const {
  if (!fs_) throw std::logic_error("FreeBoundary: no profile attached (synthetic curve)");
  return *fs_;
}

void FreeBoundary::init_window(int cells) {
  const double pad = kPadFraction * std::max(1.0, L_);
  x_lo_ = 1.0 - pad;
  x_hi_ = 1.0 + L_ + pad;
  const int n_cells = std::max(64, cells);
  hx_ = (x_hi_ - x_lo_) / n_cells;
  table_x_.resize(n_cells + 1);
  for (int i = 0; i <= n_cells; ++i) table_x_[i] = x_lo_ + i * hx_;
  const int n_win = std::max(16, static_cast<int>(std::lround(L_ / hx_)));
  xnodes_.resize(n_win + 1);
  for (int i = 0; i <= n_win; ++i) xnodes_[i] = 1.0 + L_ * i / n_win;
  rebuild();
}

void FreeBoundary::set_perturbation(const Vector& xi_on_nodes) {
  if (xi_on_nodes.size() != xnodes_.size())
    throw std::invalid_argument("FreeBoundary: perturbation size mismatch");
  xi_ = xi_on_nodes;
  rebuild();
}

double FreeBoundary::xi(double x) const {
  if (xi_.size() == 0) return 0.0;
  const int n = static_cast<int>(xnodes_.size());
  const double h = (xnodes_[n - 1] - xnodes_[0]) / (n - 1);
  // 6-point local Lagrange interpolation with clamped stencil.
  int i0 = static_cast<int>(std::floor((x - xnodes_[0]) / h)) - 2;
  i0 = std::clamp(i0, 0, n - 6);
  const double xc = std::clamp(x, xnodes_[0], xnodes_[n - 1]);
  double val = 0.0;
  for (int j = 0; j < 6; ++j) {
    double lj = 1.0;
    for (int m = 0; m < 6; ++m) {
      if (m == j) continue;
      lj *= (xc - xnodes_[i0 + m]) / (xnodes_[i0 + j] - xnodes_[i0 + m]);
    }
    val += lj * xi_[i0 + j];
  }
  return val;
}

double FreeBoundary::xi_dx(double x) const {
  if (xi_.size() == 0) return 0.0;
  const int n = static_cast<int>(xnodes_.size());
  const double h = (xnodes_[n - 1] - xnodes_[0]) / (n - 1);
  int i0 = static_cast<int>(std::floor((x - xnodes_[0]) / h)) - 2;
  i0 = std::clamp(i0, 0, n - 6);
  const double xc = std::clamp(x, xnodes_[0], xnodes_[n - 1]);
  double val = 0.0;
  for (int j = 0; j < 6; ++j) {
    // derivative of the j-th Lagrange basis at xc
    double dl = 0.0;
    for (int k = 0; k < 6; ++k) {
      if (k == j) continue;
      double term = 1.0 / (xnodes_[i0 + j] - xnodes_[i0 + k]);
      for (int m = 0; m < 6; ++m) {
        if (m == j || m == k) continue;
        term *= (xc - xnodes_[i0 + m]) / (xnodes_[i0 + j] - xnodes_[i0 + m]);
      }
      dl += term;
    }
    val += dl * xi_[i0 + j];
  }
  return val;
}

double FreeBoundary::Lambda(double x) const { return lamG_(x) + eps_ * xi(x); }

double FreeBoundary::dLambda_dx(double x) const { return dlamG_(x) + eps_ * xi_dx(x); }

void FreeBoundary::rebuild() {
  const int n = static_cast<int>(table_x_.size());
  table_s_.resize(n);
  auto integrand = [this](double x) {
    const double lam = Lambda(x);
    if (!(lam > 0.0))
      throw NonmonotoneMap("FreeBoundary: Lambda must stay positive on the window");
    return 1.0 / (lam * lam);
  };
  // Accumulate cell integrals, then shift so that s(1) = 1 exactly.
  table_s_[0] = 0.0;
  for (int i = 1; i < n; ++i)
    table_s_[i] = table_s_[i - 1] + integrate_gl16(integrand, table_x_[i - 1], table_x_[i]);
  const double s_at_1 = [&] {
    const double t = (1.0 - x_lo_) / hx_;
    const int i = std::clamp(static_cast<int>(std::floor(t)), 0, n - 2);
    return table_s_[i] + integrate_gl16(integrand, table_x_[i], 1.0);
  }();
  for (int i = 0; i < n; ++i) table_s_[i] += 1.0 - s_at_1;
  s_end_ = s_of_x(1.0 + L_);
}

double FreeBoundary::s_of_x(double x) const {
  if (x < x_lo_ - 1e-12 || x > x_hi_ + 1e-12)
    throw std::domain_error("FreeBoundary::s_of_x: x outside tabulated window");
  const int n = static_cast<int>(table_x_.size());
  const double t = (x - x_lo_) / hx_;
  const int i = std::clamp(static_cast<int>(std::floor(t)), 0, n - 2);
  auto integrand = [this](double xx) {
    const double lam = Lambda(xx);
    return 1.0 / (lam * lam);
  };
  return table_s_[i] + integrate_gl16(integrand, table_x_[i], x);
}

double FreeBoundary::x_of_s(double s) const {
  const int n = static_cast<int>(table_x_.size());
  if (s < table_s_[0] - 1e-12 || s > table_s_[n - 1] + 1e-12)
    throw std::domain_error("FreeBoundary::x_of_s: s outside tabulated window");
  // bracket by binary search on the monotone table
  int lo = 0, hi = n - 1;
  while (hi - lo > 1) {
    const int mid = (lo + hi) / 2;
    (table_s_[mid] <= s ? lo : hi) = mid;
  }
  double x = table_x_[lo] +
             (table_x_[hi] - table_x_[lo]) * (s - table_s_[lo]) /
                 std::max(table_s_[hi] - table_s_[lo], 1e-300);
  // Newton with exact derivative x'(s) = Lambda^2; quadratic convergence from
  // the linear seed.
  for (int it = 0; it < 6; ++it) {
    x = std::clamp(x, x_lo_, x_hi_);
    const double f = s_of_x(x) - s;
    const double lam = Lambda(x);
    const double step = f * lam * lam;
    x -= step;
    if (std::abs(step) < 1e-15 * std::max(1.0, std::abs(x))) break;
  }
  return std::clamp(x, x_lo_, x_hi_);
}

double FreeBoundary::dlambda_ds(double s) const {
  const double x = x_of_s(s);
  const double lam = Lambda(x);
  return dLambda_dx(x) * lam * lam;
}

double FreeBoundary::dlambda_G_ds(double s) const {
  const double x = x_of_s(s);
  const double lam = Lambda(x);  // x'(s) uses the full Lambda
  return dLambda_G_dx(x) * lam * lam;
}

double FreeBoundary::dmu_ds(double s) const {
  const double x = x_of_s(s);
  const double lam = Lambda(x);
  return xi_dx(x) * lam * lam;
}

}  // namespace prandtl
