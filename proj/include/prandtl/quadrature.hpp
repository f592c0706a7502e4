/** \file quadrature.hpp
 *  \brief Gauss-Legendre panel quadrature and uniform-grid integration.
 */
#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <vector>

#include "prandtl/types.hpp"

namespace prandtl {

/// 16-point Gauss-Legendre rule on [-1, 1].
struct GaussLegendre16 {
  static const std::array<double, 16> nodes;
  static const std::array<double, 16> weights;
};

/// Integral of f over [a, b] with a single 16-point panel.
template <class F>
auto integrate_gl16(F&& f, double a, double b)
    -> decltype(f(0.0) * 0.0) {
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  decltype(f(0.0) * 0.0) acc{};
  for (int i = 0; i < 16; ++i) {
    acc += GaussLegendre16::weights[i] * f(mid + half * GaussLegendre16::nodes[i]);
  }
  return acc * half;
}

/// Composite 16-point Gauss-Legendre over consecutive breakpoints.
template <class F>
auto integrate_panels(F&& f, const std::vector<double>& breaks)
    -> decltype(f(0.0) * 0.0) {
  decltype(f(0.0) * 0.0) acc{};
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    acc += integrate_gl16(f, breaks[i], breaks[i + 1]);
  }
  return acc;
}

/// Uniform panel subdivision of [a, b] into n panels.
std::vector<double> uniform_breaks(double a, double b, int n);

/// Geometrically graded breakpoints from a toward b: first panel width
/// h0 next to a, growing by `ratio` until covering [a, b].
std::vector<double> graded_breaks(double a, double b, double h0, double ratio);

/// Adaptive Gauss-Legendre integration to (absolute) tolerance.  Each panel
/// is accepted when one 16-point estimate matches the sum of its two halves.
template <class F>
auto integrate_adaptive(F&& f, double a, double b, double tol, int max_depth = 24)
    -> decltype(f(0.0) * 0.0) {
  using R = decltype(f(0.0) * 0.0);
  struct Item {
    double a, b;
    R whole;
    int depth;
  };
  R total{};
  std::vector<Item> stack;
  stack.push_back({a, b, integrate_gl16(f, a, b), 0});
  while (!stack.empty()) {
    Item it = stack.back();
    stack.pop_back();
    const double m = 0.5 * (it.a + it.b);
    R left = integrate_gl16(f, it.a, m);
    R right = integrate_gl16(f, m, it.b);
    using std::abs;
    if (abs(left + right - it.whole) < tol || it.depth >= max_depth) {
      total += left + right;
    } else {
      stack.push_back({it.a, m, left, it.depth + 1});
      stack.push_back({m, it.b, right, it.depth + 1});
    }
  }
  return total;
}

/// Weights of \int_t^{t+1} L_k(x) dx for Lagrange nodes {0, 1, 2, 3, 4}.
void cell_weights_quartic(double t, double w[5]);

/// Integral over a uniform grid with the sliding 5-point (quartic) rule:
/// each cell is integrated with the degree-4 interpolant through the five
/// nearest nodes, giving O(h^6) local accuracy.  n = values.size() >= 5.
template <class T>
T integrate_uniform(const std::vector<T>& values, double h) {
  const int n = static_cast<int>(values.size());
  T acc{};
  for (int i = 0; i + 1 < n; ++i) {
    // stencil start: centered when possible, clamped at the ends
    int s = i - 1;
    if (s < 0) s = 0;
    if (s + 4 >= n) s = n - 5;
    const double t = i - s;  // cell [t, t+1] in stencil-local coordinates
    // integrate Lagrange basis on [t, t+1]
    double w[5];
    cell_weights_quartic(t, w);
    for (int k = 0; k < 5; ++k) acc += (w[k] * h) * values[s + k];
  }
  return acc;
}

/// Cumulative version: out[i] = integral of the grid function from node 0
/// to node i using the same quartic cells.  out[0] = 0.
template <class T>
void cumulative_uniform(const std::vector<T>& values, double h,
                        std::vector<T>& out) {
  const int n = static_cast<int>(values.size());
  out.assign(n, T{});
  T acc{};
  for (int i = 0; i + 1 < n; ++i) {
    int s = i - 1;
    if (s < 0) s = 0;
    if (s + 4 >= n) s = n - 5;
    const double t = i - s;
    double w[5];
    cell_weights_quartic(t, w);
    T cell{};
    for (int k = 0; k < 5; ++k) cell += (w[k] * h) * values[s + k];
    acc += cell;
    out[i + 1] = acc;
  }
}

}  // namespace prandtl
