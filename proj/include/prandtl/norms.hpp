#pragma once
/// \file norms.hpp
/// \brief Discrete norms for the strip fields and interface traces: L^p rows
///        on periodic windows, fractional tangential smoothing, the
///        interface-strip norm, and the trace norm of the matched problem.

#include "prandtl/types.hpp"

namespace prandtl {

/// (sum |v_i|^p h)^{1/p} on a uniform grid; p = infinity gives the sup.
double lp_norm(const Vector& v, double p, double h);

/// Tangential derivative on the periodic window (spectral; the unpaired
/// Nyquist mode is dropped to keep real data real).
Vector d_s(const Vector& row, double ds);

/// Interface-strip norm of a field sampled (s index) x (Z index) on a
/// periodic s-window:
///   sup_Z ||w||_{L^6_s} + sup_Z ||d_s w||_{L^{5/2}_s}
///   + sup_Z ||<d_s>^{-1/3} d_s^2 w||_{L^{5/2}_s}.
/// One tangential derivative costs a 2/3-smoothing in this scale, matching
/// the 1/3-gain of the transverse Airy regularization per derivative.
double interface_norm(const Matrix& field, double ds);

/// Trace norm of the matched problem on the periodic window:
///   ||<d_s>^{1/3} g1||_{L^{5/2}} + ||g2||_{L^{5/2}} + ||<d_s>^{-1/3} g3||_{L^{5/2}}.
/// The Dirichlet trace is one-third derivative better, the second transverse
/// trace one-third worse, than the Neumann trace.
double trace_norm(const Vector& g1, const Vector& g2, const Vector& g3, double ds);

}  // namespace prandtl
