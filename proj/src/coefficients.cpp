/// \file coefficients.cpp
/// \brief Assembly of the straightened-equation coefficient families.

#include "prandtl/coefficients.hpp"

#include <cmath>

namespace prandtl {

namespace {

constexpr double kDzStep = 5e-4;  ///< 4th-order difference step for (d_z/w_z)

/// 4th-order centered derivative of a closure.
template <class F>
double dz4(F&& g, double z) {
  const double h = kDzStep;
  return (-g(z + 2 * h) + 8.0 * g(z + h) - 8.0 * g(z - h) + g(z - 2 * h)) / (12.0 * h);
}

}  // namespace

UnderlineCoeffs underline_coeffs(const FlowField& f, double s, double z) {
  const double cg = f.loglam_G(s);
  const double lam = f.lam(s);

  const double W1 = f.w(s, z, 1), W2 = f.w(s, z, 2), W3 = f.w(s, z, 3);
  const double W0 = f.w(s, z, 0);
  const double Ws0 = f.w_s(s, z, 0), Ws1 = f.w_s(s, z, 1);
  const double P0 = f.psi(s, z, 0), P2 = f.psi(s, z, 2), P3 = f.psi(s, z, 3);
  const double vv = f.v(s, z);

  // Composite expressions whose weighted z-derivative feeds the next-lower
  // coefficient.
  auto E1 = [&](double t) {
    const double w1 = f.w(s, t, 1);
    return (f.w(s, t, 0) * f.w_s(s, t, 0) * w1 - 3.0 * w1 * f.w(s, t, 2)) / w1 +
           f.v(s, t) * w1 * w1;
  };
  auto E2 = [&](double t) {
    const double w1 = f.w(s, t, 1);
    return (f.w(s, t, 0) * f.w_s(s, t, 1) - f.w_s(s, t, 0) * w1 - f.w(s, t, 3)) / w1 +
           f.u_s(s, t) * w1 + f.v(s, t) * f.w(s, t, 2);
  };
  auto E3 = [&](double t) {
    const double w1 = f.w(s, t, 1);
    return f.psi(s, t, 0) * w1 * w1;
  };
  auto E4 = [&](double t) { return f.psi(s, t, 0) * f.w(s, t, 2); };

  UnderlineCoeffs c;
  c.t1 = -2.0 * W2 + (W0 * Ws0 * W1 - 3.0 * W1 * W2) / W1 + vv * W1 * W1 -
         cg * P0 * W1 * W1;
  c.t0 = dz4(E1, z) / W1 + (W0 * Ws1 - Ws0 * W1 - W3) / W1 + f.u_s(s, z) * W1 +
         vv * W2 - cg * (dz4(E3, z) / W1 + P0 * W2);
  c.tm1 = dz4(E2, z) / W1 - cg * (P2 + dz4(E4, z) / W1);
  c.tm2 = -cg * P3 / W1;
  c.a1 = P0 * W1 * W1 / lam;
  c.a0 = (dz4(E3, z) / W1 + P0 * W2) / lam;
  c.am1 = (P2 + dz4(E4, z) / W1) / lam;
  c.am2 = P3 / (lam * W1);
  return c;
}

SzCoeffs coeffs_sz(const UnderlineCoeffs& u, double Z, double p_Y, double p_s,
                   double Wp) {
  const double denom = p_Y * p_Y * Wp * Wp;
  SzCoeffs c;
  c.t1 = (p_Y * u.t1 - denom * Z * p_s + Wp * Wp * p_Y) / denom;
  c.t0 = u.t0 / denom;
  c.tm1 = u.tm1 / denom;
  c.tm2 = u.tm2 / denom;
  c.t2 = 0.0;
  c.a1 = u.a1 * p_Y / denom;
  c.a0 = u.a0 / denom;
  c.am1 = u.am1 / denom;
  c.am2 = u.am2 / denom;
  return c;
}

CoeffSet coefficients(const FlowField& f, const Straightening& st, const EikonalMap& map,
                      const Vector& s_nodes, const Vector& Z_nodes) {
  CoeffSet cs;
  cs.s_nodes = s_nodes;
  cs.Z_nodes = Z_nodes;
  const int ns = static_cast<int>(s_nodes.size());
  const int nz = static_cast<int>(Z_nodes.size());
  for (Matrix* m : {&cs.t1, &cs.t0, &cs.tm1, &cs.tm2, &cs.t2, &cs.a1, &cs.a0, &cs.am1,
                    &cs.am2, &cs.t1_u, &cs.t0_u, &cs.tm1_u, &cs.tm2_u})
    m->resize(ns, nz);
  double sup = 0.0;
  for (int i = 0; i < ns; ++i) {
    const double s = s_nodes[i];
    for (int j = 0; j < nz; ++j) {
      const double Z = Z_nodes[j];
      const double Y = map.Y_of_p(s, Z);
      const double z = st.z_of_Y(s, Y);
      const UnderlineCoeffs uc = underline_coeffs(f, s, z);
      const SzCoeffs sz =
          coeffs_sz(uc, Z, map.p_Y(s, Y), map.p_s(s, Y), st.Wp_of_z(s, z));
      cs.t1(i, j) = sz.t1;
      cs.t0(i, j) = sz.t0;
      cs.tm1(i, j) = sz.tm1;
      cs.tm2(i, j) = sz.tm2;
      cs.t2(i, j) = sz.t2;
      cs.a1(i, j) = sz.a1;
      cs.a0(i, j) = sz.a0;
      cs.am1(i, j) = sz.am1;
      cs.am2(i, j) = sz.am2;
      cs.t1_u(i, j) = uc.t1;
      cs.t0_u(i, j) = uc.t0;
      cs.tm1_u(i, j) = uc.tm1;
      cs.tm2_u(i, j) = uc.tm2;
      for (double t : {sz.t1, sz.t0, sz.tm1, sz.tm2})
        sup = std::max(sup, std::abs(t));
    }
  }
  cs.sup_report = sup;
  return cs;
}

}  // namespace prandtl
