/// \file homogenize.cpp
/// \brief Whole-line extension and corner homogenization for the strip system.

#include "prandtl/homogenize.hpp"

#include "prandtl/cutoffs.hpp"

namespace prandtl {

namespace {

/// Strip operator applied to a tangential-cutoff image chi(s) * profile(Z):
///   (Z d_s - d_Z^2){chi profile} = Z chi'(s) profile(Z) - chi(s) profile''(Z).
double cutoff_image(double chi, double chi_p, double Z, const SideProfile& p) {
  return Z * chi_p * p.value(Z) - chi * p.second(Z);
}

}  // namespace

TwoSidedField extend_forcing(const std::function<double(double, double)>& F,
                             const SideProfile& left, const SideProfile& right,
                             const Vector& s, const Vector& Z_up, const Vector& Z_lo,
                             double s_lo, double s_hi) {
  TwoSidedField out;
  out.s = s;
  out.Z_up = Z_up;
  out.Z_lo = Z_lo;
  out.up = Matrix::Zero(s.size(), Z_up.size());
  out.lo = Matrix::Zero(s.size(), Z_lo.size());
  out.region = Eigen::VectorXi::Zero(s.size());
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    const double si = s[i];
    if (si > s_lo && si < s_hi) {
      for (Eigen::Index j = 0; j < Z_up.size(); ++j) out.up(i, j) = F(si, Z_up[j]);
      for (Eigen::Index j = 0; j < Z_lo.size(); ++j) out.lo(i, j) = F(si, Z_lo[j]);
    } else if (si <= s_lo) {
      out.region[i] = -1;
      // Left of the window the lower half-plane forcing vanishes; the upper
      // one carries the exact image of the left data extension.
      const double chi = chi_left(si, s_lo);
      const double chi_p = chi_left_d(si, s_lo, 1);
      for (Eigen::Index j = 0; j < Z_up.size(); ++j)
        out.up(i, j) = cutoff_image(chi, chi_p, Z_up[j], left);
    } else {
      out.region[i] = +1;
      const double chi = chi_right(si, s_hi);
      const double chi_p = chi_right_d(si, s_hi, 1);
      for (Eigen::Index j = 0; j < Z_lo.size(); ++j)
        out.lo(i, j) = cutoff_image(chi, chi_p, Z_lo[j], right);
    }
  }
  return out;
}

Vector extend_trace(const std::function<double(double)>& gamma1, const Vector& s,
                    double s_lo, double s_hi, double w1, double wR) {
  Vector out(s.size());
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    const double si = s[i];
    if (si > s_lo && si < s_hi)
      out[i] = gamma1(si);
    else if (si <= s_lo)
      out[i] = w1 * chi_left(si, s_lo);
    else
      out[i] = wR * chi_right(si, s_hi);
  }
  return out;
}

TwoSidedField homogenization_forcing(const Vector& s, const Vector& Z_up,
                                     const Vector& Z_lo, double s_lo, double s_hi,
                                     double w1, double wR) {
  TwoSidedField out;
  out.s = s;
  out.Z_up = Z_up;
  out.Z_lo = Z_lo;
  out.up = Matrix::Zero(s.size(), Z_up.size());
  out.lo = Matrix::Zero(s.size(), Z_lo.size());
  out.region = Eigen::VectorXi::Zero(s.size());
  auto image = [&](double si, double Z) {
    double v = 0.0;
    if (w1 != 0.0)
      v += w1 * (Z * phi_left_d(si, Z, s_lo, s_hi, 1, 0) -
                 phi_left_d(si, Z, s_lo, s_hi, 0, 2));
    if (wR != 0.0)
      v += wR * (Z * phi_right_d(si, Z, s_lo, s_hi, 1, 0) -
                 phi_right_d(si, Z, s_lo, s_hi, 0, 2));
    return v;
  };
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    for (Eigen::Index j = 0; j < Z_up.size(); ++j) out.up(i, j) = image(s[i], Z_up[j]);
    for (Eigen::Index j = 0; j < Z_lo.size(); ++j) out.lo(i, j) = image(s[i], Z_lo[j]);
  }
  return out;
}

Vector trace_corrector(const Vector& s, double s_lo, double s_hi, double w1,
                       double wR) {
  Vector out(s.size());
  for (Eigen::Index i = 0; i < s.size(); ++i)
    out[i] = w1 * phi_left(s[i], 0.0, s_lo, s_hi) + wR * phi_right(s[i], 0.0, s_lo, s_hi);
  return out;
}

}  // namespace prandtl
