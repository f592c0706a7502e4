/** \file complex_airy.hpp
 *  \brief Airy functions ai, bi, rotated bases, and primitives on the
 *         complex plane, with scaled (mantissa/exponent) evaluation.
 *
 *  Three evaluation regimes, selected by |w|:
 *
 *   - |w| <= 6: Maclaurin series in compensated double-double arithmetic.
 *     The recessive solution emerges from cancellation of terms up to
 *     ~exp((4/3)|w|^{3/2}) times larger than the result, so ~32 working
 *     digits are required to deliver 1e-12 at the crossover radius.
 *
 *   - 6 < |w| < 30: exact steepest-descent representation
 *       ai(w) = (e^{-xi}/2\pi) \int_{-\infty}^{\infty}
 *                      e^{-\sqrt{w} s^2 - i s^3/3} ds,  xi = (2/3) w^{3/2},
 *     integrated with composite Gauss-Legendre panels graded against the
 *     cubic-phase oscillation, valid for |arg w| <= 2\pi/3.
 *
 *   - |w| >= 30: the classical Poincare asymptotic expansions.
 *
 *  Outside |arg w| <= 2\pi/3 the connection identity
 *     ai(w) + e^{+2\pi i/3} ai(w e^{+2\pi i/3})
 *           + e^{-2\pi i/3} ai(w e^{-2\pi i/3}) = 0
 *  maps the evaluation into the valid window; bi is assembled from two
 *  rotated ai evaluations.  Everything is carried as mantissa * exp(E)
 *  internally so downstream Green's-function quadratures can combine
 *  decaying and growing factors without overflow.
 */
#pragma once

#include "prandtl/scaledexp.hpp"
#include "prandtl/types.hpp"

namespace prandtl {

/// ai(0), ai'(0), bi(0), bi'(0).
inline constexpr double kAi0 = 0.3550280538878172;
inline constexpr double kAip0 = -0.2588194037928068;
inline constexpr double kBi0 = 0.6149266274460007;
inline constexpr double kBip0 = 0.4482883573538264;

/// Plain values; entries are +-inf when the true value exceeds double range.
struct AiryPair {
  Complex ai, aip, bi, bip;
  bool overflow = false;  ///< some entry not representable in double
};

/// Scaled values relative to expo = Re((2/3) w^{3/2}) (principal branch):
///   ai = m_ai * exp(-expo),  ai' = m_aip * exp(-expo),
///   bi = m_bi * exp(+expo),  bi' = m_bip * exp(+expo).
/// In the sector |arg w| < pi/3 all four mantissas are O(|w|^{1/4}).
struct AiryScaled {
  Complex m_ai, m_aip, m_bi, m_bip;
  double expo = 0.0;
};

/// ai and its derivative as mantissa/exponent pairs (any argument).
void airy_ai_scaled(Complex w, Sxc& ai, Sxc& aip);

AiryScaled airy_scaled(Complex w);
AiryPair airy(Complex w);

Complex airy_ai(Complex w);
Complex airy_bi(Complex w);

/// Rotated decaying bases B_{+1}(w) = ai(w e^{-2\pi i/3}) and
/// B_{-1}(w) = ai(w e^{+2\pi i/3}); Bp is d/dw (chain factor included).
struct RotatedBasis {
  Complex B, Bp;
};
RotatedBasis rotated_basis(Complex w, int sign);

/// Scaled rotated basis: B = m_B * exp(-expo), B' = m_Bp * exp(-expo),
/// expo = Re((2/3) (w e^{\mp 2\pi i/3})^{3/2}).
struct RotatedBasisScaled {
  Complex m_B, m_Bp;
  double expo = 0.0;
};
RotatedBasisScaled rotated_basis_scaled(Complex w, int sign);

/// Primitives \int_0^w ai(t) dt and \int_0^w bi(t) dt along the segment.
Complex airy_ai_primitive(Complex w);
Complex airy_bi_primitive(Complex w);

/// Sector index: 0 for arg in [-pi/3, pi/3), +1 for [pi/3, pi), -1 for
/// [-pi, -pi/3) and the ray arg = pi (each boundary ray belongs to the
/// sector counterclockwise of it).
int airy_sector(Complex w);

/// Wronskian ai * bi' - ai' * bi evaluated at w (identically 1/pi).
Complex airy_wronskian(Complex w);

}  // namespace prandtl
