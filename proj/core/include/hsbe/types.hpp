#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace hsbe {

using C = std::complex<double>;
using VecC = Eigen::VectorXcd;
using MatC = Eigen::MatrixXcd;
using VecR = Eigen::VectorXd;
using MatR = Eigen::MatrixXd;

constexpr double kPi = 3.14159265358979323846;

/// Physical and analytic constants of the linearized Beris-Edwards system.
///
/// `beta` is the coupling that enters the linear system; for the nonlinear
/// model it is tied to the rotational parameter by beta = 2*xi/dim.
struct ModelParams {
  double a = 1.0;       ///< reaction coefficient (> 0 on the coupled path)
  double beta = 1.0;    ///< coupling
  double b = 0.0;       ///< quadratic potential coefficient (nonlinearity)
  double c = 0.0;       ///< cubic potential coefficient (nonlinearity)
  int dim = 2;          ///< spatial dimension N >= 2
  double theta = kPi / 3.0;  ///< sector angle, must exceed theta0()
  double r = 1.0;            ///< sector radius
  double gamma = 0.0;        ///< exponential time weight
  double p = 4.0;            ///< time integrability exponent
  double q = 4.0;            ///< space integrability exponent

  double xi() const { return beta * dim / 2.0; }
  /// Minimal admissible sector angle, tan(theta0) = |beta|/sqrt(2).
  double theta0() const { return std::atan(std::abs(beta) / std::sqrt(2.0)); }

  /// Throws std::invalid_argument on an inconsistent parameter set.
  void validate(bool coupled = true) const;
};

/// Symmetric-matrix packing: number of independent entries of an NxN
/// symmetric matrix and the (j,k) <-> flat index map (upper triangle,
/// row-major).
inline int sym_count(int n) { return n * (n + 1) / 2; }
inline int sym_index(int n, int j, int k) {
  if (j > k) std::swap(j, k);
  return j * n - j * (j - 1) / 2 + (k - j);
}

/// Symmetrize and remove the trace (the projection L[A] = A - tr(A) Id/N).
inline MatC make_traceless_symmetric(const MatC& m) {
  MatC s = 0.5 * (m + m.transpose());
  const C tr = s.trace() / static_cast<double>(m.rows());
  for (int j = 0; j < m.rows(); ++j) s(j, j) -= tr;
  return s;
}

}  // namespace hsbe
