#pragma once

#include <optional>
#include <utility>

#include "hsbe/errors.hpp"
#include "hsbe/types.hpp"

namespace hsbe {

/// Everything attached to one tangential mode (lambda, xi').
///
/// B_a = sqrt(lambda + a + A^2), L_j = sqrt(A^2 + z_j) with z_{1,2} the
/// roots of (lambda - z)(lambda + a - z) + (beta^2/2)(z^2 - a z); all square
/// roots are principal and Re(B_a), Re(L_j) > 0 is asserted.
struct ModeContext {
  C lambda;
  VecR xi_prime;  ///< length N-1
  double A = 0.0;
  C B_a;
  C z1, z2;
  C L1, L2;
  std::optional<double> eta;  ///< degeneracy point, absent when beta = 0
  bool degenerate = false;    ///< |lambda - eta| below threshold

  int dim() const { return static_cast<int>(xi_prime.size()) + 1; }
};

/// Degeneracy threshold: |lambda - eta| <= 1e-4 (1 + eta). Divided
/// differences lose ~8 digits inside this window; the tilde branch is exact.
inline constexpr double kDegenerateWindow = 1e-4;

/// Roots z_{1,2} of L(z) = (lambda-z)(lambda+a-z) + (beta^2/2)(z^2 - a z),
/// labeled by the +/- convention on the principal square root of the
/// discriminant a^2 (1+beta^2/2)^2 - 2 lambda^2 beta^2.
std::pair<C, C> characteristic_roots(const ModelParams& p, C lambda);

/// Degeneracy point eta = a (1 + beta^2/2) / (sqrt(2) |beta|).
/// Throws BetaZero when beta = 0.
double eta_point(const ModelParams& p);

/// Assemble the full ModeContext; throws BranchViolation if any principal
/// root has nonpositive real part (A > 0 is required for Re(L_j) > 0 only
/// through z_j not in R_-; the check is on the computed values).
ModeContext wave_numbers(const ModelParams& p, C lambda, const VecR& xi_prime);

struct NormalizedRoots {
  C z1t, z2t;      ///< z_j / (lambda + a)
  C z_minus, z_plus;  ///< |lambda| -> infinity limits
};

/// z~_j = z_j/(lambda+a) together with the limits
/// z_-+ = (2 -+ i |beta| sqrt(2)) / (2 (1 + beta^2/2)).
NormalizedRoots normalized_roots(const ModelParams& p, C lambda);

struct SectorReport {
  bool inside = false;       ///< lambda in Sigma_{theta,r} (open)
  bool inside_closure = false;
  double distance = 0.0;     ///< distance to the sector boundary
  double theta0 = 0.0;       ///< minimal admissible angle arctan(|beta|/sqrt 2)
};

/// Membership of lambda in Sigma_{theta,r} = {|Arg z| < pi - theta, |z| > r}.
SectorReport sector_admissibility(const ModelParams& p, C lambda);

/// 1 - z~_j = (lambda + a - z_j)/(lambda + a), computed without cancellation.
std::pair<C, C> one_minus_normalized_roots(const ModelParams& p, C lambda);

/// d z_j / d lambda (analytic), j = 1, 2. Used for tau d_tau root bounds.
std::pair<C, C> root_derivatives(const ModelParams& p, C lambda);

}  // namespace hsbe
