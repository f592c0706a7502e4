/** \file airy_solve.cpp
 *  \brief Variation-of-parameters solvers for i xi Z w - w'' = F on half
 *         lines, with scaled-arithmetic Duhamel integrals.
 */
#include "prandtl/airy_solve.hpp"

#include <algorithm>
#include <cmath>

#include "prandtl/complex_airy.hpp"
#include "prandtl/fftutil.hpp"
#include "prandtl/quadrature.hpp"

namespace prandtl {

namespace {

/// Panel grading toward the interface: first panel width 5e-4 of the cut,
/// growing geometrically.  The kernel amplitude dies like
/// exp(-0.47 |rho Z|^{3/2}), so only |rho Z| <~ 8 contributes; there the
/// phase variation per panel stays below ~6 rad, which a 16-point Gauss
/// panel resolves to ~1e-13.
constexpr double kPanelH0Frac = 5e-4;
constexpr double kPanelRatio = 1.25;

struct KernelPair {
  Sxc dec, decp;  ///< decaying basis and its d/dw
  Sxc gro, grop;  ///< growing basis and its d/dw
};

KernelPair upper_kernels(Complex w) {
  AiryScaled a = airy_scaled(w);
  KernelPair k;
  k.dec = {a.m_ai, -a.expo};
  k.decp = {a.m_aip, -a.expo};
  k.gro = {a.m_bi, +a.expo};
  k.grop = {a.m_bip, +a.expo};
  return k;
}

KernelPair lower_kernels(Complex w, int sigma) {
  RotatedBasisScaled r = rotated_basis_scaled(w, sigma);
  KernelPair k;
  k.dec = {r.m_B, -r.expo};
  k.decp = {r.m_Bp, -r.expo};
  airy_ai_scaled(w, k.gro, k.grop);  // ai grows in the lower sectors
  return k;
}

/// One Gauss panel of kernel(Z) * F(Z) over [a, b] in scaled arithmetic.
template <class KernelFn>
Sxc panel_sxc(const KernelFn& kernel, const std::function<Complex(double)>& F,
              double a, double b) {
  if (a == b) return Sxc::zero();
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  Sxc acc = Sxc::zero();
  for (int i = 0; i < 16; ++i) {
    const double Z = mid + half * GaussLegendre16::nodes[i];
    acc = acc + kernel(Z) * (F(Z) * (GaussLegendre16::weights[i] * half));
  }
  return normalized(acc);
}

}  // namespace

Complex airy_rho(double xi) {
  const double s = xi >= 0 ? 1.0 : -1.0;
  return std::polar(std::cbrt(std::abs(xi)), s * kPi / 6.0);
}

double wronskian_c0() { return 1.0 / (2.0 * kPi * kAi0 * kAi0); }

Complex wronskian_multiplier(double xi) {
  const int sigma = xi >= 0 ? -1 : +1;  // lower-side basis index
  RotatedBasis rb = rotated_basis(Complex(0.0, 0.0), sigma);
  const Complex M_minus = rb.Bp / rb.B;
  const Complex M_plus = Complex(kAip0 / kAi0, 0.0);
  return M_minus - M_plus;
}

double default_z_cut(double xi) {
  return 12.0 * std::max(1.0, std::pow(std::abs(xi), -1.0 / 3.0));
}

HalfLineSolution solve_half_line(int side, double xi, Complex gamma1,
                                 const std::function<Complex(double)>& Fhat,
                                 double Zcut) {
  if (xi == 0.0) throw std::invalid_argument("solve_half_line: xi must be nonzero");
  HalfLineSolution sol;
  sol.side_ = side;
  sol.xi_ = xi;
  sol.Zcut_ = Zcut > 0.0 ? Zcut : default_z_cut(xi);
  sol.rho_ = airy_rho(xi);
  sol.gamma1_ = gamma1;
  sol.F_ = Fhat;
  const int sgn_xi = xi > 0 ? 1 : -1;
  const int sigma = -sgn_xi;

  // 1/W: upper Wr[ai,bi] = 1/pi; lower Wr[ai,B_sigma] = e^{-i sgn pi/6}/(2 pi).
  sol.invW_ = side > 0 ? Complex(kPi, 0.0)
                       : 2.0 * kPi * std::polar(1.0, sgn_xi * kPi / 6.0);

  sol.edges_ = graded_breaks(0.0, sol.Zcut_, sol.Zcut_ * kPanelH0Frac, kPanelRatio);
  const int P = static_cast<int>(sol.edges_.size()) - 1;
  const Complex rho = sol.rho_;
  auto gro_kernel = [&](double Z) {
    return side > 0 ? upper_kernels(rho * Z).gro : lower_kernels(rho * Z, sigma).gro;
  };
  auto dec_kernel = [&](double Z) {
    return side > 0 ? upper_kernels(rho * Z).dec : lower_kernels(rho * Z, sigma).dec;
  };

  sol.near_.assign(P + 1, Sxc::zero());
  sol.far_.assign(P + 1, Sxc::zero());
  std::vector<Sxc> dec_panels(P);
  for (int j = 0; j < P; ++j) {
    const double za = side > 0 ? sol.edges_[j] : -sol.edges_[j + 1];
    const double zb = side > 0 ? sol.edges_[j + 1] : -sol.edges_[j];
    sol.near_[j + 1] = normalized(sol.near_[j] + panel_sxc(gro_kernel, Fhat, za, zb));
    dec_panels[j] = panel_sxc(dec_kernel, Fhat, za, zb);
  }
  for (int j = P - 1; j >= 0; --j)
    sol.far_[j] = normalized(sol.far_[j + 1] + dec_panels[j]);

  // Dirichlet fit: the particular solution at the interface involves only
  // the far cumulant (the near one vanishes at Z = 0).
  const Sxc UP0 = sol.far_[0] * (sol.invW_ / rho * (side > 0 ? kBi0 : kAi0));
  sol.coef_ = (Sxc::from(gamma1) - UP0) * (1.0 / kAi0);

  // Neumann trace: basis slope at the origin plus the forcing part.
  const Complex dec_p0 =
      side > 0 ? Complex(kAip0, 0.0) : std::polar(1.0, -sigma * 2.0 * kPi / 3.0) * kAip0;
  const Complex gro_p0 = side > 0 ? Complex(kBip0, 0.0) : Complex(kAip0, 0.0);
  const Sxc nm = sol.coef_ * (rho * dec_p0) + sol.far_[0] * (sol.invW_ * gro_p0);
  sol.neumann_ = nm.to_complex();
  if (!std::isfinite(sol.neumann_.real()) || !std::isfinite(sol.neumann_.imag()))
    throw OverflowInKernel("solve_half_line: Neumann trace left double range");
  return sol;
}

HalfLineSolution solve_upper(double xi, Complex gamma1,
                             const std::function<Complex(double)>& Fhat, double Zcut) {
  return solve_half_line(+1, xi, gamma1, Fhat, Zcut);
}

HalfLineSolution solve_lower(double xi, Complex gamma1,
                             const std::function<Complex(double)>& Fhat, double Zcut) {
  return solve_half_line(-1, xi, gamma1, Fhat, Zcut);
}

void HalfLineSolution::eval(double Z, Complex* value, Complex* derivative) const {
  const double a = std::min(std::abs(Z), Zcut_);
  const int sgn_xi = xi_ > 0 ? 1 : -1;
  const int sigma = -sgn_xi;
  auto kern = [&](double t) {
    return side_ > 0 ? upper_kernels(rho_ * t) : lower_kernels(rho_ * t, sigma);
  };
  auto gro_kernel = [&](double t) { return kern(t).gro; };
  auto dec_kernel = [&](double t) { return kern(t).dec; };

  int j = static_cast<int>(std::upper_bound(edges_.begin(), edges_.end(), a) -
                           edges_.begin()) -
          1;
  j = std::max(0, std::min(j, static_cast<int>(edges_.size()) - 2));
  const double Zc = side_ > 0 ? a : -a;  // clamped coordinate on the half-line

  Sxc near, far;
  if (side_ > 0) {
    near = near_[j] + panel_sxc(gro_kernel, F_, edges_[j], Zc);
    far = far_[j + 1] + panel_sxc(dec_kernel, F_, Zc, edges_[j + 1]);
  } else {
    near = near_[j] + panel_sxc(gro_kernel, F_, Zc, -edges_[j]);
    far = far_[j + 1] + panel_sxc(dec_kernel, F_, -edges_[j + 1], Zc);
  }

  const KernelPair k = kern(Zc);
  if (value) {
    const Sxc v = coef_ * k.dec + (k.dec * near + k.gro * far) * (invW_ / rho_);
    *value = v.to_complex();
    if (!std::isfinite(value->real()) || !std::isfinite(value->imag()))
      throw OverflowInKernel("HalfLineSolution: value left double range");
  }
  if (derivative) {
    const Sxc d = coef_ * (rho_ * k.decp) + (k.decp * near + k.grop * far) * invW_;
    *derivative = d.to_complex();
    if (!std::isfinite(derivative->real()) || !std::isfinite(derivative->imag()))
      throw OverflowInKernel("HalfLineSolution: derivative left double range");
  }
}

Complex HalfLineSolution::operator()(double Z) const {
  Complex v;
  eval(Z, &v, nullptr);
  return v;
}

Complex HalfLineSolution::deriv(double Z) const {
  Complex d;
  eval(Z, nullptr, &d);
  return d;
}

namespace {

/// Quartic sliding-cell cumulants of kernel * F over a uniform grid, in
/// scaled arithmetic: fwd cell integrals, then prefix/suffix sums.
std::vector<Sxc> cell_integrals(const std::vector<Sxc>& values, double h) {
  const int n = static_cast<int>(values.size());
  std::vector<Sxc> cells(n - 1, Sxc::zero());
  for (int i = 0; i + 1 < n; ++i) {
    int s = i - 1;
    if (s < 0) s = 0;
    if (s + 4 >= n) s = n - 5;
    double w[5];
    cell_weights_quartic(i - s, w);
    Sxc cell = Sxc::zero();
    for (int k = 0; k < 5; ++k) cell = cell + values[s + k] * (w[k] * h);
    cells[i] = normalized(cell);
  }
  return cells;
}

SampledHalfLine sampled_solve(int side, double xi, Complex gamma1, const CVector& Fhat,
                              const Vector& Z) {
  if (xi == 0.0) throw std::invalid_argument("sampled solve: xi must be nonzero");
  const int n = static_cast<int>(Z.size());
  if (n < 5) throw std::invalid_argument("sampled solve: need >= 5 nodes");
  const double h = Z[1] - Z[0];
  const Complex rho = airy_rho(xi);
  const int sgn_xi = xi > 0 ? 1 : -1;
  const int sigma = -sgn_xi;
  const Complex invW = side > 0 ? Complex(kPi, 0.0)
                                : 2.0 * kPi * std::polar(1.0, sgn_xi * kPi / 6.0);
  const int origin = side > 0 ? 0 : n - 1;  // grid index of Z = 0

  std::vector<KernelPair> K(n);
  std::vector<Sxc> groF(n), decF(n);
  for (int i = 0; i < n; ++i) {
    K[i] = side > 0 ? upper_kernels(rho * Z[i]) : lower_kernels(rho * Z[i], sigma);
    groF[i] = K[i].gro * Fhat[i];
    decF[i] = K[i].dec * Fhat[i];
  }
  const std::vector<Sxc> gro_cells = cell_integrals(groF, h);
  const std::vector<Sxc> dec_cells = cell_integrals(decF, h);

  // near(Z) = integral of gro * F between 0 and Z (origin-side cumulant);
  // far(Z) = integral of dec * F between Z and the cut.
  std::vector<Sxc> near(n, Sxc::zero()), far(n, Sxc::zero());
  if (side > 0) {
    for (int i = 1; i < n; ++i) near[i] = normalized(near[i - 1] + gro_cells[i - 1]);
    for (int i = n - 2; i >= 0; --i) far[i] = normalized(far[i + 1] + dec_cells[i]);
  } else {
    for (int i = n - 2; i >= 0; --i) near[i] = normalized(near[i + 1] + gro_cells[i]);
    for (int i = 1; i < n; ++i) far[i] = normalized(far[i - 1] + dec_cells[i - 1]);
  }

  const Sxc UP0 = far[origin] * (invW / rho * (side > 0 ? kBi0 : kAi0));
  const Sxc coef = (Sxc::from(gamma1) - UP0) * (1.0 / kAi0);

  SampledHalfLine out;
  out.gamma1 = gamma1;
  out.omega.resize(n);
  out.deriv.resize(n);
  for (int i = 0; i < n; ++i) {
    const Sxc v =
        coef * K[i].dec + (K[i].dec * near[i] + K[i].gro * far[i]) * (invW / rho);
    out.omega[i] = v.to_complex();
    if (!std::isfinite(out.omega[i].real()) || !std::isfinite(out.omega[i].imag()))
      throw OverflowInKernel("sampled solve: field left double range");
    // Wronskian structure kills the cumulant derivatives, so d/dZ touches
    // only the kernel rows (same identity as the panel evaluator).
    const Sxc d = coef * (rho * K[i].decp) + (K[i].decp * near[i] + K[i].grop * far[i]) * invW;
    out.deriv[i] = d.to_complex();
    if (!std::isfinite(out.deriv[i].real()) || !std::isfinite(out.deriv[i].imag()))
      throw OverflowInKernel("sampled solve: derivative left double range");
  }
  const Complex dec_p0 =
      side > 0 ? Complex(kAip0, 0.0) : std::polar(1.0, -sigma * 2.0 * kPi / 3.0) * kAip0;
  const Complex gro_p0 = side > 0 ? Complex(kBip0, 0.0) : Complex(kAip0, 0.0);
  const Sxc nm = coef * (rho * dec_p0) + far[origin] * (invW * gro_p0);
  out.neumann = nm.to_complex();
  return out;
}

}  // namespace

SampledHalfLine solve_upper_sampled(double xi, Complex gamma1, const CVector& Fhat,
                                    const Vector& Z) {
  return sampled_solve(+1, xi, gamma1, Fhat, Z);
}

SampledHalfLine solve_lower_sampled(double xi, Complex gamma1, const CVector& Fhat,
                                    const Vector& Z) {
  return sampled_solve(-1, xi, gamma1, Fhat, Z);
}

Complex smoothing_G(int iota, double xi, const std::function<Complex(double)>& Fhat,
                    double Zcut) {
  if (Zcut <= 0.0) {
    if (xi == 0.0)
      throw std::invalid_argument("smoothing_G: xi = 0 requires an explicit cut");
    Zcut = default_z_cut(xi);
  }
  const Complex rho = airy_rho(xi);
  const int sigma = xi > 0 ? -1 : +1;
  // Only decaying kernels appear here, so plain complex arithmetic is safe
  // (underflow to zero in the far tail is harmless).
  auto integrand = [&](double Z) -> Complex {
    Complex k(1.0, 0.0);
    if (xi != 0.0) {
      const Sxc ks =
          iota > 0 ? upper_kernels(rho * Z).dec : lower_kernels(rho * Z, sigma).dec;
      k = (ks * (1.0 / kAi0)).to_complex();
    }
    return k * Fhat(Z);
  };
  // Graded pre-split plus adaptive refinement: the refinement catches
  // features narrower than a panel (needle sources) that a fixed 16-point
  // panel would step over.
  const std::vector<double> e = graded_breaks(0.0, Zcut, Zcut * kPanelH0Frac, kPanelRatio);
  Complex acc(0.0, 0.0);
  for (std::size_t j = 0; j + 1 < e.size(); ++j) {
    const double za = iota > 0 ? e[j] : -e[j + 1];
    const double zb = iota > 0 ? e[j + 1] : -e[j];
    acc += integrate_adaptive(integrand, za, zb, 1e-13, 18);
  }
  // Orientation: the lower functional is the negative of its kernel
  // integral, so that on both sides neumann = rho M_iota gamma1 + G_iota
  // and the matched load is G_+ - G_-.
  return iota > 0 ? acc : -acc;
}

Complex smoothing_G_sampled(int iota, double xi, const CVector& Fhat, const Vector& Z) {
  const int n = static_cast<int>(Z.size());
  const double h = Z[1] - Z[0];
  const Complex rho = airy_rho(xi);
  const int sigma = xi > 0 ? -1 : +1;
  std::vector<Complex> values(n);
  for (int i = 0; i < n; ++i) {
    Complex k;
    if (xi == 0.0) {
      k = Complex(1.0, 0.0);
    } else {
      const Sxc ks =
          iota > 0 ? upper_kernels(rho * Z[i]).dec : lower_kernels(rho * Z[i], sigma).dec;
      k = (ks * (1.0 / kAi0)).to_complex();
    }
    values[i] = k * Fhat[i];
  }
  const Complex acc = integrate_uniform(values, h);
  return iota > 0 ? acc : -acc;
}

Vector T_minus_third(int iota, const Matrix& F_sZ, double ds, const Vector& Z) {
  const int ns = static_cast<int>(F_sZ.rows());
  const int nz = static_cast<int>(F_sZ.cols());
  FrequencyGrid g = frequency_grid(ns, ds);
  // Transform each transverse level in s, then apply the Airy-weighted
  // functional per frequency.
  CMatrix Fhat(ns, nz);
  for (int j = 0; j < nz; ++j) Fhat.col(j) = fft_forward(Vector(F_sZ.col(j)));
  CVector Ghat(ns);
  const double scale = (iota > 0 ? 1.0 : -1.0) / wronskian_c0();
  for (int k = 0; k < ns; ++k) {
    const CVector row = Fhat.row(k).transpose();
    Ghat[k] = scale * smoothing_G_sampled(iota, g.at(k), row, Z);
  }
  return fft_inverse_real(Ghat);
}

}  // namespace prandtl
