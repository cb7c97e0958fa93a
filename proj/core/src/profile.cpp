#include "hsbe/profile.hpp"

namespace hsbe {

namespace {

constexpr C kI(0.0, 1.0);

inline C ipow(C z, int n) {
  C v(1.0);
  for (int i = 0; i < n; ++i) v *= z;
  return v;
}

// d-th derivative factors of e^{-g x} and x e^{-g x}
inline C exp_deriv(C g, double x, int d) {
  return ipow(-g, d) * std::exp(-g * x);
}
inline C xexp_deriv(C g, double x, int d) {
  const C e = std::exp(-g * x);
  C v = ipow(-g, d) * x * e;
  if (d >= 1) v += static_cast<double>(d) * ipow(-g, d - 1) * e;
  return v;
}

}  // namespace

C eval_M(C gamma1, C gamma2, double t) {
  const C d = gamma1 - gamma2;
  if (std::abs(d) * std::abs(t) < 1e-3) {
    const C gbar = 0.5 * (gamma1 + gamma2);
    const C x = 0.5 * d * t;  // sinh(x)/x by series, |x| < 5e-4
    const C x2 = x * x;
    const C sinhc = 1.0 + x2 / 6.0 * (1.0 + x2 / 20.0);
    return -t * std::exp(-gbar * t) * sinhc;
  }
  return (std::exp(-gamma1 * t) - std::exp(-gamma2 * t)) / d;
}

ProfileSample eval_profile(const AmplitudeSet& s, double x, int order) {
  ProfileSample out;
  out.order = order;
  const C gA = C(s.mode.A), gB = s.mode.B_a, g1 = s.mode.L1, g2 = s.mode.L2;
  for (int d = 0; d <= order; ++d) {
    const C eA = exp_deriv(gA, x, d);
    const C eB = exp_deriv(gB, x, d);
    const C e1 = exp_deriv(g1, x, d);
    const C e2 = s.branch == Branch::Degenerate ? xexp_deriv(g1, x, d)
                                                : exp_deriv(g2, x, d);
    out.u[d] = s.A0 * eA + s.A1 * e1 + s.A2 * e2;
    out.p[d] = s.Cp * eA + s.D * eB;
    out.Q[d] = s.Am * eA + s.P * eB + s.Q1 * e1 + s.Q2 * e2;
  }
  return out;
}

double min_decay_rate(const AmplitudeSet& s) {
  double rate = std::min({s.mode.B_a.real(), s.mode.L1.real(), s.mode.L2.real()});
  if (s.mode.A > 0.0) rate = std::min(rate, s.mode.A);
  return rate;
}

double default_x_max(const AmplitudeSet& s) { return 40.0 / min_decay_rate(s); }

ModeResidual mode_residual(const ModelParams& p, const AmplitudeSet& s,
                           const BoundaryModeData& data, const VecR& x_grid) {
  const ModeContext& m = s.mode;
  const int N = m.dim();
  const VecR& xi = m.xi_prime;
  const double A2 = m.A * m.A;
  const C lam = m.lambda;
  const double norm = (1.0 + std::abs(lam)) * std::max(data.norm(), 1e-300);
  ModeResidual r;
  for (int ix = 0; ix < x_grid.size(); ++ix) {
    const ProfileSample v = eval_profile(s, x_grid[ix], 3);
    // momentum rows
    for (int j = 0; j < N; ++j) {
      C res = (lam + A2) * v.u[0][j] - v.u[2][j];
      res += (j < N - 1) ? kI * xi[j] * v.p[0] : v.p[1];
      for (int k = 0; k < N - 1; ++k)
        res += p.beta * kI * xi[k] *
               (-A2 * v.Q[0](j, k) + v.Q[2](j, k) - p.a * v.Q[0](j, k));
      res += p.beta * (-A2 * v.Q[1](j, N - 1) + v.Q[3](j, N - 1) -
                       p.a * v.Q[1](j, N - 1));
      double& slot = (j < N - 1) ? r.momentum_tangential : r.momentum_normal;
      slot = std::max(slot, std::abs(res) / norm);
    }
    // divergence
    {
      C res = v.u[1][N - 1];
      for (int k = 0; k < N - 1; ++k) res += kI * xi[k] * v.u[0][k];
      r.divergence = std::max(r.divergence, std::abs(res) / norm);
    }
    // Q system
    for (int j = 0; j < N; ++j)
      for (int k = j; k < N; ++k) {
        C res = (lam + p.a + A2) * v.Q[0](j, k) - v.Q[2](j, k);
        if (k < N - 1)
          res -= p.beta / 2.0 * (kI * xi[j] * v.u[0][k] + kI * xi[k] * v.u[0][j]);
        else if (j < N - 1)
          res -= p.beta / 2.0 * (kI * xi[j] * v.u[0][N - 1] + v.u[1][j]);
        else
          res -= p.beta * v.u[1][N - 1];
        r.q_equation = std::max(r.q_equation, std::abs(res) / norm);
      }
  }
  // boundary rows at x = 0
  const ProfileSample v0 = eval_profile(s, 0.0, 1);
  const double bnorm = std::max(data.norm(), 1e-300);
  for (int j = 0; j < N; ++j)
    r.boundary = std::max(r.boundary, std::abs(v0.u[0][j] - data.h_hat[j]) / bnorm);
  for (int j = 0; j < N; ++j)
    for (int k = 0; k < N; ++k)
      r.boundary =
          std::max(r.boundary, std::abs(v0.Q[1](j, k) - data.H_hat(j, k)) / bnorm);
  return r;
}

VecR graded_grid(double x_max, int n, double ratio) {
  VecR x(n + 1);
  // spacings h, h r, h r^2, ... summing to x_max
  const double h0 = ratio == 1.0
                        ? x_max / n
                        : x_max * (ratio - 1.0) / (std::pow(ratio, n) - 1.0);
  x[0] = 0.0;
  double h = h0;
  for (int i = 1; i <= n; ++i) {
    x[i] = x[i - 1] + h;
    h *= ratio;
  }
  x[n] = x_max;
  return x;
}

}  // namespace hsbe
