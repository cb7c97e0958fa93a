#pragma once

#include <array>

#include "hsbe/coefficients.hpp"

namespace hsbe {

/// Confluent-safe divided difference of exponentials,
///   M(g1, g2, t) = (e^{-g1 t} - e^{-g2 t}) / (g1 - g2),
/// switching to the midpoint series -t e^{-gbar t} sinh(d t/2)/(d t/2)
/// when |g1-g2| |t| < 1e-3; limit -t e^{-g t} at g1 = g2.
C eval_M(C gamma1, C gamma2, double t);

/// One mode profile sample with x_N-derivatives up to the requested order.
struct ProfileSample {
  int order = 0;
  std::array<VecC, 4> u;  ///< u, u', u'', u'''
  std::array<C, 4> p;
  std::array<MatC, 4> Q;
};

/// Evaluate the profile of an assembled mode at x_N >= 0 with derivatives
/// up to `order` (<= 3), analytically.
ProfileSample eval_profile(const AmplitudeSet& amps, double x, int order);

/// Slowest decay rate of the profile (min of Re of the active exponents,
/// counting A only when A > 0); X_max defaults to 40 / this rate.
double min_decay_rate(const AmplitudeSet& amps);
double default_x_max(const AmplitudeSet& amps);

/// Sup-norm residuals of the Fourier system over an x grid, each normalized
/// by (1+|lambda|) (|h| + |H|).
struct ModeResidual {
  double momentum_tangential = 0.0;
  double momentum_normal = 0.0;
  double divergence = 0.0;
  double q_equation = 0.0;
  double boundary = 0.0;
  double max() const {
    return std::max({momentum_tangential, momentum_normal, divergence,
                     q_equation, boundary});
  }
};
ModeResidual mode_residual(const ModelParams& p, const AmplitudeSet& amps,
                           const BoundaryModeData& data, const VecR& x_grid);

/// Geometrically graded grid on [0, x_max] with `n` intervals, spacing ratio
/// 1.05 toward x = 0.
VecR graded_grid(double x_max, int n, double ratio = 1.05);

}  // namespace hsbe
