/** \file falkner_skan.hpp
 *  \brief Shooting solver for the similarity profile ODE
 *         f''' + f f'' + beta (1 - f'^2) = 0, f(0) = f'(0) = 0, f'(inf) = 1.
 *
 *  For beta < 0 two branches coexist: the attached branch with f''(0) > 0
 *  and the reversed branch with f''(0) < 0, whose streamwise velocity f'
 *  dips negative and crosses zero exactly once at eta_star.  The solver
 *  integrates with fixed-step RK4, brackets the shooting parameter with a
 *  residual sweep, filters out truncated-domain artifacts by requiring
 *  far-field shear decay, and refines by bisection.
 *
 *  The returned profile stores (f, f', f'') on a uniform grid; evaluation
 *  between nodes uses the C^2 quintic Hermite interpolant, and derivatives
 *  of order >= 3 come from differentiating the ODE itself, which is exact
 *  given (f, f', f'').
 */
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace prandtl {

enum class FsBranch { attached, reversed };

struct FsError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
/// Shooting/bisection failed to reach the requested residual tolerance.
struct FsNoConvergence : FsError {
  using FsError::FsError;
};
/// The requested branch does not exist at this beta.
struct FsBranchUnavailable : FsError {
  using FsError::FsError;
};

struct FsOptions {
  double eta_max = 12.0;
  double tol = 1e-10;      ///< on |f'(eta_max) - 1|
  double rk_step = 1e-3;
  int sweep_samples = 200;
};

class FsProfile {
 public:
  double beta = 0.0;
  FsBranch branch = FsBranch::attached;
  double fpp0 = 0.0;      ///< f''(0)
  double eta_star = 0.0;  ///< reversal station; NaN on the attached branch
  double eta_max = 0.0;

  /// f, f', f'' at eta (clamped far-field extension beyond eta_max).
  double value(double eta, int derivative) const;

  /// out[0..kmax] = f, f', ..., f^{(kmax)}; orders >= 3 via the ODE ladder.
  void derivatives(double eta, int kmax, double* out) const;

  /// pressure-gradient exponent n = beta / (2 - beta)
  double n_exponent() const { return beta / (2.0 - beta); }

  double storage_step() const { return h_; }

 private:
  friend FsProfile solve_fs(double, FsBranch, const FsOptions&);
  double h_ = 0.0;
  std::vector<double> f_, fp_, fpp_;
  // far-field extension: f ~ eta + shift_
  double shift_ = 0.0;
};

FsProfile solve_fs(double beta, FsBranch branch, const FsOptions& opt = {});

}  // namespace prandtl
