/// \file toy_solver.cpp
/// \brief Mixed-type strip solver via Dirichlet-Neumann reduction per
///        tangential frequency, and the strip forcing assembly.

#include "prandtl/toy_solver.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "prandtl/airy_solve.hpp"
#include "prandtl/cutoffs.hpp"
#include "prandtl/fftutil.hpp"
#include "prandtl/norms.hpp"
#include "prandtl/quadrature.hpp"

namespace prandtl {

namespace {

/// Column-wise forward DFT of a real (s x Z) sample block.
CMatrix forward_columns(const Matrix& block) {
  CMatrix out(block.rows(), block.cols());
  for (Eigen::Index j = 0; j < block.cols(); ++j) {
    const Vector col = block.col(j);
    out.col(j) = fft_forward(col);
  }
  return out;
}

/// Zero-frequency half-line solve: -w'' = F with decay at the far end.  The
/// decaying particular integral is
///   upper: w(Z) = -Int_Z^cut (Z'-Z) F dZ',  lower: w(Z) = -Int_-cut^Z (Z-Z') F dZ',
/// assembled from prefix cumulants of F and Z F.  Both Dirichlet traces are
/// then determined by the forcing; their defect against the interface trace
/// is the compatibility diagnostic of the zero mode.
struct DcSolve {
  CVector omega;
  CVector deriv;
  Complex value0;    ///< trace at Z = 0
  Complex neumann0;  ///< one-sided derivative at Z = 0
};

DcSolve dc_half_line(int side, const CVector& Fhat, const Vector& Z) {
  const int n = static_cast<int>(Z.size());
  const double h = Z[1] - Z[0];
  std::vector<Complex> f(n), zf(n), p0, p1;
  for (int i = 0; i < n; ++i) {
    f[i] = Fhat[i];
    zf[i] = Z[i] * Fhat[i];
  }
  cumulative_uniform(f, h, p0);
  cumulative_uniform(zf, h, p1);
  DcSolve out;
  out.omega.resize(n);
  out.deriv.resize(n);
  if (side > 0) {
    // suffix integrals from the prefix cumulants
    const Complex t0 = p0[n - 1], t1 = p1[n - 1];
    for (int i = 0; i < n; ++i) {
      const Complex S0 = t0 - p0[i], S1 = t1 - p1[i];
      out.omega[i] = -(S1 - Z[i] * S0);
      out.deriv[i] = S0;
    }
    out.value0 = out.omega[0];
    out.neumann0 = t0;  // d/dZ at Z = 0 equals Int_0^cut F
  } else {
    for (int i = 0; i < n; ++i) {
      out.omega[i] = p1[i] - Z[i] * p0[i];
      out.deriv[i] = -p0[i];
    }
    out.value0 = out.omega[n - 1];
    out.neumann0 = -p0[n - 1];  // d/dZ at Z = 0 equals -Int_-cut^0 F
  }
  return out;
}

}  // namespace

ToySolution solve_toy(const ToyProblem& problem, const ToyConfig& config) {
  if (config.Lbar <= 0.0 || config.n_s < 16 || config.n_z < 16 || config.n_z % 2 != 0 ||
      config.n_interface < 8 || config.z_cut <= 0.0 || config.margin <= 0.0)
    throw std::invalid_argument("solve_toy: invalid configuration");

  const double s_lo = 1.0, s_hi = 1.0 + config.Lbar;
  const int ns = config.n_s, nz = config.n_z, half = nz / 2;
  const double s0 = s_lo - config.margin;
  const double window = config.Lbar + 2.0 * config.margin;
  const double ds = window / ns;
  const double hz = 2.0 * config.z_cut / nz;

  ToySolution sol;
  sol.s0 = s0;
  sol.ds = ds;
  sol.s_lo = s_lo;
  sol.s_hi = s_hi;
  sol.s.resize(ns);
  for (int i = 0; i < ns; ++i) sol.s[i] = s0 + i * ds;
  sol.Z.resize(nz + 1);
  for (int j = 0; j <= nz; ++j) sol.Z[j] = -config.z_cut + j * hz;
  const Vector Z_up = sol.Z.tail(half + 1);
  const Vector Z_lo = sol.Z.head(half + 1);

  sol.w1 = problem.left.value(0.0);
  sol.wR = problem.right.value(0.0);
  if (!std::isfinite(sol.w1) || !std::isfinite(sol.wR))
    throw ExtensionMismatch("solve_toy: boundary profiles non-finite at the corner");

  // Extended forcing, minus the strip operator applied to the corner
  // corrector: the homogenized field Q = (extended solution) - corrector
  // satisfies the strip equation with this right-hand side.
  TwoSidedField FQ = extend_forcing(problem.F, problem.left, problem.right, sol.s, Z_up,
                                    Z_lo, s_lo, s_hi);
  if (sol.w1 != 0.0 || sol.wR != 0.0) {
    const TwoSidedField H =
        homogenization_forcing(sol.s, Z_up, Z_lo, s_lo, s_hi, sol.w1, sol.wR);
    FQ.up -= H.up;
    FQ.lo -= H.lo;
  }
  const CMatrix Fup_hat = forward_columns(FQ.up);
  const CMatrix Flo_hat = forward_columns(FQ.lo);

  const FrequencyGrid fg = frequency_grid(ns, ds);
  const double c0 = wronskian_c0();

  // Interface load: per-mode smoothing functionals of the forcing; the two
  // sides sum to the right-hand side of the fractional Poisson problem.
  CVector Ghat(ns);
  for (int k = 0; k < ns; ++k) {
    const CVector fu = Fup_hat.row(k).transpose();
    const CVector fl = Flo_hat.row(k).transpose();
    const double xi = fg.at(k);
    const Complex gp = smoothing_G_sampled(+1, xi, fu, Z_up);
    const Complex gm = smoothing_G_sampled(-1, xi, fl, Z_lo);
    Ghat[k] = (gp - gm) / c0;
  }

  const TraceGrid igrid{s_lo, config.Lbar, config.n_interface};
  const Vector x_if = igrid.nodes();
  const Vector G_if = trig_interpolate(Ghat, ds, s0, x_if);
  Vector gammaQ;
  try {
    // The load was assembled from window-periodic modes, so solve with the
    // matching periodized operator (line kernel minus image interactions).
    gammaQ = solve_interface_periodic(igrid, G_if, window);
  } catch (const SingularSystem& e) {
    throw InterfaceSolveFailed(e.what());
  }
  sol.gamma1_hat = hat_interpolant_modes(gammaQ, x_if, igrid.h(), ns, ds, s0);

  // Per-mode half-line reconstruction of the homogenized field.
  CMatrix Qhat = CMatrix::Zero(ns, nz + 1);
  CVector nu_up(ns), nu_lo(ns);
  for (int k = 0; k < ns; ++k) {
    const CVector fu = Fup_hat.row(k).transpose();
    const CVector fl = Flo_hat.row(k).transpose();
    if (k == 0) {
      // Impose the interface trace on the zero mode by a constant shift
      // (constants solve the zero-frequency equation); the size of the shift
      // measures how far the forcing's natural compatible value sits from
      // the solved trace and is reported as the zero-mode defect.
      const DcSolve up = dc_half_line(+1, fu, Z_up);
      const DcSolve lo = dc_half_line(-1, fl, Z_lo);
      const Complex cu = sol.gamma1_hat[0] - up.value0;
      const Complex cl = sol.gamma1_hat[0] - lo.value0;
      for (int m = 0; m <= half; ++m) {
        Qhat(0, half + m) = up.omega[m] + cu;
        Qhat(0, m) = lo.omega[m] + cl;
      }
      Qhat(0, half) = sol.gamma1_hat[0];
      nu_up[0] = up.neumann0;
      nu_lo[0] = lo.neumann0;
      sol.dc_mismatch = std::max(std::abs(cu), std::abs(cl)) / ns;
    } else {
      const double xi = fg.at(k);
      const SampledHalfLine up = solve_upper_sampled(xi, sol.gamma1_hat[k], fu, Z_up);
      const SampledHalfLine lo = solve_lower_sampled(xi, sol.gamma1_hat[k], fl, Z_lo);
      for (int m = 0; m <= half; ++m) {
        Qhat(k, half + m) = up.omega[m];
        if (m < half) Qhat(k, m) = lo.omega[m];
      }
      nu_up[k] = up.neumann;
      nu_lo[k] = lo.neumann;
    }
  }

  // Real field: inverse DFT per transverse node, then the corner fields.
  sol.omega.resize(ns, nz + 1);
  for (int j = 0; j <= nz; ++j) {
    const CVector modes = Qhat.col(j);
    sol.omega.col(j) = fft_inverse_real(modes);
  }
  if (sol.w1 != 0.0 || sol.wR != 0.0) {
    for (int i = 0; i < ns; ++i)
      for (int j = 0; j <= nz; ++j)
        sol.omega(i, j) += sol.w1 * phi_left(sol.s[i], sol.Z[j], s_lo, s_hi) +
                           sol.wR * phi_right(sol.s[i], sol.Z[j], s_lo, s_hi);
  }

  // Traces on the interface nodes.
  ToyTraces& tr = sol.traces;
  tr.s = x_if;
  tr.gamma1 = gammaQ;
  for (Eigen::Index i = 0; i < x_if.size(); ++i)
    tr.gamma1[i] += sol.w1 * ramp_left(x_if[i], s_lo, s_hi) +
                    sol.wR * ramp_right(x_if[i], s_lo, s_hi);
  sol.nu_up_hat = nu_up;
  sol.nu_lo_hat = nu_lo;
  const CVector nu_avg = 0.5 * (nu_up + nu_lo);
  const CVector nu_jump = nu_up - nu_lo;
  tr.gamma2 = trig_interpolate(nu_avg, ds, s0, x_if);
  tr.gamma2_jump = trig_interpolate(nu_jump, ds, s0, x_if);
  tr.gamma3_identity.resize(x_if.size());
  for (Eigen::Index i = 0; i < x_if.size(); ++i)
    tr.gamma3_identity[i] = -problem.F(x_if[i], 0.0);
  // One-sided of the identity is unnecessary: the field is C^2 across Z = 0
  // at interior s, so a centered five-point stencil on the homogenized field
  // (the corner fields are flat in Z near zero) differences it honestly.
  {
    Matrix rows(5, x_if.size());
    for (int r = -2; r <= 2; ++r) {
      const CVector modes = Qhat.col(half + r);
      rows.row(r + 2) = trig_interpolate(modes, ds, s0, x_if).transpose();
    }
    tr.gamma3_diff = (-rows.row(0) + 16.0 * rows.row(1) - 30.0 * rows.row(2) +
                      16.0 * rows.row(3) - rows.row(4))
                         .transpose() /
                     (12.0 * hz * hz);
  }

  // Data-match defects at the window endpoints: the field limit at s_lo from
  // the left must reproduce the left profile on Z >= 0 (mirror on the right).
  {
    Vector ends(2);
    ends << s_lo, s_hi;
    for (int j = 0; j <= nz; ++j) {
      const CVector modes = Qhat.col(j);
      const Vector v = trig_interpolate(modes, ds, s0, ends);
      if (j >= half) {
        const double w = v[0] + sol.w1 * phi_left(s_lo, sol.Z[j], s_lo, s_hi) +
                         sol.wR * phi_right(s_lo, sol.Z[j], s_lo, s_hi);
        sol.data_match_left =
            std::max(sol.data_match_left, std::abs(w - problem.left.value(sol.Z[j])));
      }
      if (j <= half) {
        const double w = v[1] + sol.w1 * phi_left(s_hi, sol.Z[j], s_lo, s_hi) +
                         sol.wR * phi_right(s_hi, sol.Z[j], s_lo, s_hi);
        sol.data_match_right =
            std::max(sol.data_match_right, std::abs(w - problem.right.value(sol.Z[j])));
      }
    }
  }

  sol.i_norm = interface_norm(sol.omega, ds);
  return sol;
}

LiftedField lift(const CVector& gamma1_hat, const TwoSidedField& F, double ds) {
  const int ns = static_cast<int>(gamma1_hat.size());
  const int nu = static_cast<int>(F.Z_up.size());
  const int nl = static_cast<int>(F.Z_lo.size());
  if (F.up.rows() != ns || F.lo.rows() != ns)
    throw std::invalid_argument("lift: mode count does not match forcing rows");
  const CMatrix Fup_hat = forward_columns(F.up);
  const CMatrix Flo_hat = forward_columns(F.lo);
  const FrequencyGrid fg = frequency_grid(ns, ds);

  CMatrix up(ns, nu), upZ(ns, nu), upZZ(ns, nu);
  CMatrix lo(ns, nl), loZ(ns, nl), loZZ(ns, nl);
  for (int k = 0; k < ns; ++k) {
    const CVector fu = Fup_hat.row(k).transpose();
    const CVector fl = Flo_hat.row(k).transpose();
    const double xi = fg.at(k);
    if (k == 0) {
      // Constant shift carries the prescribed zero-mode trace (constants
      // solve the zero-frequency equation with zero Neumann data).
      const DcSolve du = dc_half_line(+1, fu, F.Z_up);
      const DcSolve dl = dc_half_line(-1, fl, F.Z_lo);
      up.row(0) = du.omega.transpose().array() + (gamma1_hat[0] - du.value0);
      upZ.row(0) = du.deriv.transpose();
      lo.row(0) = dl.omega.transpose().array() + (gamma1_hat[0] - dl.value0);
      loZ.row(0) = dl.deriv.transpose();
    } else {
      const SampledHalfLine su = solve_upper_sampled(xi, gamma1_hat[k], fu, F.Z_up);
      const SampledHalfLine sl = solve_lower_sampled(xi, gamma1_hat[k], fl, F.Z_lo);
      up.row(k) = su.omega.transpose();
      upZ.row(k) = su.deriv.transpose();
      lo.row(k) = sl.omega.transpose();
      loZ.row(k) = sl.deriv.transpose();
    }
    const Complex ixi(0.0, xi);
    for (int j = 0; j < nu; ++j) upZZ(k, j) = ixi * F.Z_up[j] * up(k, j) - fu[j];
    for (int j = 0; j < nl; ++j) loZZ(k, j) = ixi * F.Z_lo[j] * lo(k, j) - fl[j];
  }

  LiftedField out;
  auto invert = [](const CMatrix& modes) {
    Matrix m(modes.rows(), modes.cols());
    for (Eigen::Index j = 0; j < modes.cols(); ++j) {
      const CVector col = modes.col(j);
      m.col(j) = fft_inverse_real(col);
    }
    return m;
  };
  out.up = invert(up);
  out.up_Z = invert(upZ);
  out.up_ZZ = invert(upZZ);
  out.lo = invert(lo);
  out.lo_Z = invert(loZ);
  out.lo_ZZ = invert(loZZ);
  return out;
}

Matrix assemble_FI(const CoeffSet& c, const Matrix& Omega, const Matrix& Omega_Z,
                   const Matrix& phi, const Matrix& phi_p, const Vector& mu_p,
                   double eps, double delta, bool commuted) {
  const Eigen::Index ns = c.s_nodes.size(), nz = c.Z_nodes.size();
  Matrix F = Matrix::Zero(ns, nz);
  for (Eigen::Index i = 0; i < ns; ++i) {
    for (Eigen::Index j = 0; j < nz; ++j) {
      const double Z = c.Z_nodes[j];
      const double chi = chi_inner(Z, delta);
      const double chi1 = chi_plateau_d(Z / delta, 1) / delta;
      const double chi2 = chi_plateau_d(Z / delta, 2) / (delta * delta);
      const double alpha = c.a1(i, j) * Omega_Z(i, j) + c.a0(i, j) * Omega(i, j) +
                           c.am1(i, j) * phi_p(i, j) + c.am2(i, j) * phi(i, j);
      if (!commuted) {
        const double tau = c.t1(i, j) * Omega_Z(i, j) + c.t0(i, j) * Omega(i, j) +
                           c.tm1(i, j) * phi_p(i, j) + c.tm2(i, j) * phi(i, j);
        F(i, j) = chi * tau - eps * mu_p[i] * chi * alpha - chi2 * Omega(i, j) -
                  2.0 * chi1 * Omega_Z(i, j);
      } else {
        const double omega_I = chi * Omega(i, j);
        const double omega_I_Z = chi1 * Omega(i, j) + chi * Omega_Z(i, j);
        F(i, j) = c.t1(i, j) * omega_I_Z + c.t0(i, j) * omega_I +
                  chi * (c.tm1(i, j) * phi_p(i, j) + c.tm2(i, j) * phi(i, j)) -
                  eps * mu_p[i] * chi * alpha -
                  (chi2 + c.t1(i, j) * chi1) * Omega(i, j) - 2.0 * chi1 * Omega_Z(i, j);
      }
    }
  }
  return F;
}

}  // namespace prandtl
