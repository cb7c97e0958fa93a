#include "hsbe/spectral.hpp"

#include <sstream>

namespace hsbe {

void ModelParams::validate(bool coupled) const {
  std::ostringstream bad;
  if (dim < 2) bad << "dim must be >= 2; ";
  if (coupled && a <= 0.0) bad << "a must be > 0 on the coupled path; ";
  if (!(theta > 0.0 && theta < kPi / 2.0)) bad << "theta must lie in (0, pi/2); ";
  if (coupled && beta != 0.0 && std::tan(theta) < std::abs(beta) / std::sqrt(2.0))
    bad << "tan(theta) >= |beta|/sqrt(2) violated; ";
  if (r <= 0.0) bad << "r must be > 0; ";
  if (gamma < 0.0) bad << "gamma must be >= 0; ";
  if (!(p > 1.0) || !(q > 1.0)) bad << "p, q must lie in (1, inf); ";
  const std::string msg = bad.str();
  if (!msg.empty()) throw std::invalid_argument("ModelParams: " + msg);
}

std::pair<C, C> characteristic_roots(const ModelParams& p, C lambda) {
  const double b2 = p.beta * p.beta / 2.0;
  const C disc = std::sqrt(C(p.a * p.a * (1.0 + b2) * (1.0 + b2)) -
                           2.0 * lambda * lambda * p.beta * p.beta);
  const C base = 2.0 * lambda + p.a * (1.0 + b2);
  const double den = 2.0 * (1.0 + b2);
  return {(base + disc) / den, (base - disc) / den};
}

double eta_point(const ModelParams& p) {
  if (p.beta == 0.0)
    throw BetaZero("eta_point: degeneracy point does not exist for beta = 0");
  const double b2 = p.beta * p.beta / 2.0;
  return p.a * (1.0 + b2) / (std::sqrt(2.0) * std::abs(p.beta));
}

ModeContext wave_numbers(const ModelParams& p, C lambda, const VecR& xi_prime) {
  ModeContext m;
  m.lambda = lambda;
  m.xi_prime = xi_prime;
  m.A = xi_prime.norm();
  const double A2 = m.A * m.A;
  auto [z1, z2] = characteristic_roots(p, lambda);
  m.z1 = z1;
  m.z2 = z2;
  m.B_a = std::sqrt(lambda + p.a + A2);
  m.L1 = std::sqrt(A2 + z1);
  m.L2 = std::sqrt(A2 + z2);
  if (!(m.B_a.real() > 0.0) || !(m.L1.real() > 0.0) || !(m.L2.real() > 0.0)) {
    std::ostringstream os;
    os << "wave_numbers: nonpositive real part of a principal root at lambda=("
       << lambda.real() << "," << lambda.imag() << "), A=" << m.A;
    throw BranchViolation(os.str());
  }
  if (p.beta != 0.0) {
    const double eta = eta_point(p);
    m.eta = eta;
    m.degenerate = std::abs(lambda - eta) <= kDegenerateWindow * (1.0 + eta);
  }
  return m;
}

NormalizedRoots normalized_roots(const ModelParams& p, C lambda) {
  NormalizedRoots n;
  auto [z1, z2] = characteristic_roots(p, lambda);
  n.z1t = z1 / (lambda + p.a);
  n.z2t = z2 / (lambda + p.a);
  const double b2 = p.beta * p.beta / 2.0;
  const double den = 2.0 * (1.0 + b2);
  n.z_minus = C(2.0, -std::abs(p.beta) * std::sqrt(2.0)) / den;
  n.z_plus = C(2.0, std::abs(p.beta) * std::sqrt(2.0)) / den;
  return n;
}

std::pair<C, C> one_minus_normalized_roots(const ModelParams& p, C lambda) {
  // lambda + a - z_j = (2 lambda b2 + a(1+b2) -+ disc) / (2(1+b2))
  const double b2 = p.beta * p.beta / 2.0;
  const C disc = std::sqrt(C(p.a * p.a * (1.0 + b2) * (1.0 + b2)) -
                           2.0 * lambda * lambda * p.beta * p.beta);
  const C base = 2.0 * lambda * b2 + p.a * (1.0 + b2);
  const double den = 2.0 * (1.0 + b2);
  const C s = lambda + p.a;
  return {(base - disc) / den / s, (base + disc) / den / s};
}

std::pair<C, C> root_derivatives(const ModelParams& p, C lambda) {
  const double b2 = p.beta * p.beta / 2.0;
  const C disc = std::sqrt(C(p.a * p.a * (1.0 + b2) * (1.0 + b2)) -
                           2.0 * lambda * lambda * p.beta * p.beta);
  const C corr = lambda * p.beta * p.beta / disc;
  const double den = 1.0 + b2;
  return {(1.0 - corr) / den, (1.0 + corr) / den};
}

SectorReport sector_admissibility(const ModelParams& p, C lambda) {
  SectorReport rep;
  rep.theta0 = p.theta0();
  const double mod = std::abs(lambda);
  const double arg = std::abs(std::arg(lambda));
  const double cap = kPi - p.theta;
  rep.inside = mod > p.r && arg < cap && lambda != C(0.0);
  rep.inside_closure = mod >= p.r && arg <= cap && lambda != C(0.0);
  // signed distance to the boundary of Sigma_{theta,r} (positive inside):
  // min of the distance to the circle |z| = r and to the boundary rays
  const double d_circle = mod - p.r;
  const double d_ray = arg <= cap ? mod * std::sin(std::min(cap - arg, kPi / 2.0))
                                  : -mod * std::sin(std::min(arg - cap, kPi / 2.0));
  rep.distance = std::min(d_circle, d_ray);
  return rep;
}

}  // namespace hsbe
