/** \file falkner_skan.cpp
 *  \brief RK4 shooting with residual sweep, artifact filtering, bisection.
 */
#include "prandtl/falkner_skan.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace prandtl {
namespace {

struct State {
  double f, fp, fpp;
};

inline State rhs(const State& y, double beta) {
  return {y.fp, y.fpp, -y.f * y.fpp - beta * (1.0 - y.fp * y.fp)};
}

inline State axpy(const State& a, double c, const State& b) {
  return {a.f + c * b.f, a.fp + c * b.fp, a.fpp + c * b.fpp};
}

struct ShootResult {
  double residual;      // f'(end) - 1
  double fpp_end;       // terminal shear (decay marker)
  double eta_end;       // where integration stopped
  bool diverged;
};

/// RK4 with a divergence guard; optionally records every `store_every` step.
ShootResult integrate(double a, double beta, double eta_max, double h,
                      std::vector<double>* f = nullptr,
                      std::vector<double>* fp = nullptr,
                      std::vector<double>* fpp = nullptr,
                      int store_every = 4) {
  State y{0.0, 0.0, a};
  const long n = std::lround(eta_max / h);
  if (f) {
    f->clear();
    fp->clear();
    fpp->clear();
    f->push_back(y.f);
    fp->push_back(y.fp);
    fpp->push_back(y.fpp);
  }
  for (long i = 0; i < n; ++i) {
    const State k1 = rhs(y, beta);
    const State k2 = rhs(axpy(y, 0.5 * h, k1), beta);
    const State k3 = rhs(axpy(y, 0.5 * h, k2), beta);
    const State k4 = rhs(axpy(y, h, k3), beta);
    y.f += h / 6.0 * (k1.f + 2.0 * k2.f + 2.0 * k3.f + k4.f);
    y.fp += h / 6.0 * (k1.fp + 2.0 * k2.fp + 2.0 * k3.fp + k4.fp);
    y.fpp += h / 6.0 * (k1.fpp + 2.0 * k2.fpp + 2.0 * k3.fpp + k4.fpp);
    if (std::abs(y.fp) > 8.0 || !std::isfinite(y.fp)) {
      return {y.fp - 1.0, y.fpp, (i + 1) * h, true};
    }
    if (f && (i + 1) % store_every == 0) {
      f->push_back(y.f);
      fp->push_back(y.fp);
      fpp->push_back(y.fpp);
    }
  }
  return {y.fp - 1.0, y.fpp, eta_max, false};
}

double binom(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Extends ladder[0..2] to ladder[0..kmax] by differentiating the ODE:
/// f''' = -f f'' + beta f'^2 - beta, then Leibniz for higher orders.
/// Exact given (f, f', f'').
void ode_ladder(double beta, int kmax, double* d) {
  if (kmax >= 3) d[3] = -d[0] * d[2] - beta * (1.0 - d[1] * d[1]);
  for (int k = 4; k <= kmax; ++k) {
    const int m = k - 3;
    double acc = 0.0;
    for (int j = 0; j <= m; ++j) {
      const double c = binom(m, j);
      acc += -c * d[j] * d[k - 1 - j] + beta * c * d[j + 1] * d[k - 2 - j];
    }
    d[k] = acc;
  }
}

}  // namespace

void FsProfile::derivatives(double eta, int kmax, double* out) const {
  if (eta >= eta_max) {
    // far field: f' has converged to 1 within tol, so f ~ eta + shift
    out[0] = eta + shift_;
    if (kmax >= 1) out[1] = 1.0;
    for (int k = 2; k <= kmax; ++k) out[k] = 0.0;
    return;
  }
  if (eta < 0.0) eta = 0.0;
  // Taylor step from the nearest stored node with ODE-ladder coefficients.
  // No divided differences are formed, so node-level noise (~1e-12) is not
  // amplified into the high derivatives.
  const long i = std::min<long>(std::lround(eta / h_),
                                static_cast<long>(f_.size()) - 1);
  const double delta = eta - i * h_;
  constexpr int kExtra = 8;
  double d[32];
  const int top = std::min(kmax + kExtra, 30);
  d[0] = f_[i];
  d[1] = fp_[i];
  d[2] = fpp_[i];
  ode_ladder(beta, top, d);
  for (int k = 0; k <= kmax; ++k) {
    double acc = 0.0;
    double pw = 1.0;  // delta^j / j!
    for (int j = 0; k + j <= top; ++j) {
      acc += d[k + j] * pw;
      pw *= delta / (j + 1);
    }
    out[k] = acc;
  }
}

double FsProfile::value(double eta, int derivative) const {
  double buf[8];
  derivatives(eta, std::min(derivative, 7), buf);
  return buf[derivative];
}

FsProfile solve_fs(double beta, FsBranch branch, const FsOptions& opt) {
  if (branch == FsBranch::reversed && beta >= -1e-12) {
    throw FsBranchUnavailable("reversed branch requires beta < 0");
  }

  // bracket sweep over the initial shear
  double lo, hi;
  if (branch == FsBranch::reversed) {
    lo = -0.55;
    hi = -0.004;
  } else {
    lo = 0.02;
    hi = 1.5;
  }
  auto resid = [&](double a) {
    return integrate(a, beta, opt.eta_max, opt.rk_step);
  };

  std::vector<double> roots;
  ShootResult prev = resid(lo);
  double aprev = lo;
  for (int i = 1; i <= opt.sweep_samples; ++i) {
    const double a = lo + (hi - lo) * i / opt.sweep_samples;
    const ShootResult cur = resid(a);
    if (std::isfinite(prev.residual) && std::isfinite(cur.residual) &&
        prev.residual * cur.residual < 0.0) {
      // bisect
      double x0 = aprev, x1 = a, r0 = prev.residual;
      for (int it = 0; it < 100; ++it) {
        const double xm = 0.5 * (x0 + x1);
        const double rm = resid(xm).residual;
        if (r0 * rm <= 0.0) {
          x1 = xm;
        } else {
          x0 = xm;
          r0 = rm;
        }
        if (x1 - x0 < 4e-16 * std::max(1.0, std::abs(x0))) break;
      }
      const double root = 0.5 * (x0 + x1);
      const ShootResult q = resid(root);
      // keep only genuinely decaying profiles: spurious truncated-domain
      // crossings hit f' = 1 with O(1) shear exactly at eta_max
      if (!q.diverged && std::abs(q.fpp_end) < 1e-5 &&
          std::abs(q.residual) <= std::max(opt.tol, 1e-9)) {
        roots.push_back(root);
      }
    }
    prev = cur;
    aprev = a;
  }

  if (roots.empty()) {
    throw FsBranchUnavailable("no decaying profile found for this beta/branch");
  }
  double a0;
  if (branch == FsBranch::reversed) {
    // reversed branch: negative shear; take the root closest to zero from
    // below (the classical lower branch)
    a0 = *std::max_element(roots.begin(), roots.end());
    if (a0 >= 0.0) throw FsBranchUnavailable("no reversed root");
  } else {
    a0 = *std::max_element(roots.begin(), roots.end());
    if (a0 <= 0.0) throw FsBranchUnavailable("no attached root");
  }

  FsProfile p;
  p.beta = beta;
  p.branch = branch;
  p.fpp0 = a0;
  p.eta_max = opt.eta_max;
  const int store_every = 4;
  p.h_ = opt.rk_step * store_every;
  ShootResult fin = integrate(a0, beta, opt.eta_max, opt.rk_step, &p.f_, &p.fp_,
                              &p.fpp_, store_every);
  if (fin.diverged || std::abs(fin.residual) > std::max(opt.tol, 1e-8)) {
    throw FsNoConvergence("shooting residual above tolerance");
  }
  p.shift_ = p.f_.back() - opt.eta_max;

  p.eta_star = std::numeric_limits<double>::quiet_NaN();
  if (branch == FsBranch::reversed) {
    // unique interior zero of f'
    int count = 0;
    for (std::size_t i = 1; i + 1 < p.fp_.size(); ++i) {
      if (p.fp_[i] * p.fp_[i + 1] < 0.0) {
        ++count;
        double x0 = i * p.h_, x1 = (i + 1) * p.h_;
        for (int it = 0; it < 80; ++it) {
          const double xm = 0.5 * (x0 + x1);
          if (p.value(x0, 1) * p.value(xm, 1) <= 0.0) {
            x1 = xm;
          } else {
            x0 = xm;
          }
        }
        p.eta_star = 0.5 * (x0 + x1);
      }
    }
    if (count != 1) {
      throw FsNoConvergence("reversal station not unique");
    }
  }
  return p;
}

}  // namespace prandtl
