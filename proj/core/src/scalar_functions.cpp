#include "hsbe/scalar_functions.hpp"

#include <Eigen/LU>

#include "hsbe/detail/e_kernel.hpp"
#include "hsbe/detail/stable_kernels.hpp"

namespace hsbe {

namespace {

// Difference variables for the t-domain kernels.  u_j = sqrt(t^2 + z~_j)
// and w = sqrt(t^2 + 1) on branches with Re(u_j + t), Re(w + t) bounded
// below on the sector (they equal (L_j + A)/sqrt(lambda+a) etc.).
struct TVars {
  C t, u1, u2, w, e1, e2, g;
  C one_minus_z1t, one_minus_z2t;
};

TVars make_tvars(C z1t, C z2t, C t) {
  TVars v;
  v.t = t;
  v.u1 = std::sqrt(t * t + z1t);
  v.u2 = std::sqrt(t * t + z2t);
  v.w = std::sqrt(t * t + 1.0);
  if (v.u1.real() < 0.0) v.u1 = -v.u1;
  if (v.u2.real() < 0.0) v.u2 = -v.u2;
  if (v.w.real() < 0.0) v.w = -v.w;
  v.e1 = z1t / (v.u1 + t);
  v.e2 = z2t / (v.u2 + t);
  v.g = 1.0 / (v.w + t);
  v.one_minus_z1t = 1.0 - z1t;
  v.one_minus_z2t = 1.0 - z2t;
  return v;
}

// Same variables taken from a ModeContext so that u_j, w are exactly
// L_j/sqrt(lambda+a), B_a/sqrt(lambda+a) (consistent branches).
TVars make_tvars(const ModelParams& p, const ModeContext& m) {
  TVars v;
  const C rs = std::sqrt(m.lambda + p.a);
  const C s = m.lambda + p.a;
  v.t = m.A / rs;
  v.u1 = m.L1 / rs;
  v.u2 = m.L2 / rs;
  v.w = m.B_a / rs;
  v.e1 = (m.z1 / s) / (v.u1 + v.t);
  v.e2 = (m.z2 / s) / (v.u2 + v.t);
  v.g = 1.0 / (v.w + v.t);
  v.one_minus_z1t = 1.0 - m.z1 / s;
  v.one_minus_z2t = 1.0 - m.z2 / s;
  return v;
}

C fa_from_tvars(const TVars& v) {
  const C num = detail::fa_numerator_stable(v.t, v.e1, v.e2, v.g);
  return num / (2.0 * v.w * v.one_minus_z1t * v.one_minus_z2t);
}

}  // namespace

C fa_value(C z1t, C z2t, C t) { return fa_from_tvars(make_tvars(z1t, z2t, t)); }

C ga_value(C z1t, C z2t, C t) {
  const TVars v = make_tvars(z1t, z2t, t);
  return detail::ga_stable(v.t, v.e1, v.e2, v.g);
}

C fa_tail_limit(C z1t, C z2t) {
  return -z1t * z2t / (2.0 * (1.0 - z1t) * (1.0 - z2t));
}

C eval_calC(const ModelParams& p, const ModeContext& m) {
  if (p.beta == 0.0) throw BetaZero("eval_calC: calC is identically 0 for beta = 0");
  const TVars v = make_tvars(p, m);
  const C s = m.lambda + p.a;
  return p.beta * s / m.lambda * fa_from_tvars(v);
}

C eval_I1(const ModelParams& p, const ModeContext& m) {
  const C B = m.B_a;
  const double A = m.A;
  return p.beta * A * A / (B * B - A * A) *
         (2.0 * A * A - A * (B * B + A * A) / B);
}

C eval_I2(const ModelParams& p, const ModeContext& m) {
  const C B = m.B_a, L1 = m.L1, L2 = m.L2;
  const double A = m.A;
  const C t1 = -p.beta * L1 * (L2 - A) / (B * B - L1 * L1) *
               (2.0 * A * A * L1 - (B * B + A * A) * (L1 * L1 + A * A) / (2.0 * B));
  const C t2 = p.beta * L2 * (L1 - A) / (B * B - L2 * L2) *
               (2.0 * A * A * L2 - (B * B + A * A) * (L2 * L2 + A * A) / (2.0 * B));
  return t1 + t2;
}

C eval_I2_over_diff(const ModelParams& p, const ModeContext& m) {
  const C B = m.B_a, L1 = m.L1, L2 = m.L2;
  const double A = m.A;
  const C num1 = 4.0 * p.beta * A * A * B *
                 (L1 * L2 * (B * B + L1 * L2) - A * B * B * (L1 + L2));
  const C num2 = -p.beta * (B * B + A * A) *
                 ((B * B + A * A) * L1 * L2 * (L1 + L2) -
                  A * B * B * (L1 * L1 + L1 * L2 + L2 * L2 + A * A) +
                  A * L1 * L2 * (L1 * L2 - A * A));
  return (num1 + num2) / (2.0 * B * (B * B - L1 * L1) * (B * B - L2 * L2));
}

C eval_calC_naive(const ModelParams& p, const ModeContext& m) {
  if (p.beta == 0.0) throw BetaZero("eval_calC_naive: beta = 0");
  if (m.degenerate)
    throw DegenerateLambda("eval_calC_naive: lambda inside the eta window");
  return (eval_I1(p, m) + eval_I2(p, m) / (m.L2 - m.L1)) / m.lambda;
}

C eval_calC_degenerate(const ModelParams& p, double A) {
  if (p.beta == 0.0) throw BetaZero("eval_calC_degenerate: beta = 0");
  const double eta = eta_point(p);
  VecR xi = VecR::Zero(1);
  xi[0] = A;
  // the kernel-based route has no divided difference, so evaluating exactly
  // at eta is legitimate; the confluent roots make e1 = e2
  const double b2 = p.beta * p.beta / 2.0;
  const C z0 = C((2.0 * eta + p.a * (1.0 + b2)) / (2.0 * (1.0 + b2)));
  const C s = C(eta + p.a);
  const C z0t = z0 / s;
  const C t = A / std::sqrt(s);
  return p.beta * s / eta * fa_value(z0t, z0t, t);
}

C eval_calA(const ModeContext& m) {
  const C B = m.B_a, L1 = m.L1, L2 = m.L2;
  const double A = m.A;
  return B * B * B * (L1 + L2) - A * A * B * B - A * A * L1 * L2;
}

C eval_calA_stable(const ModelParams& p, const ModeContext& m) {
  const TVars v = make_tvars(p, m);
  const C s = m.lambda + p.a;
  return s * s * detail::ga_stable(v.t, v.e1, v.e2, v.g);
}

C eval_hbar_scalar(const ModelParams& p, const ModeContext& m) {
  const C B = m.B_a, L1 = m.L1, L2 = m.L2;
  const double A = m.A;
  const C t1 = p.beta * L1 / (B * B - L1 * L1) *
               (2.0 * A * A * L1 - (B * B + A * A) * (L1 * L1 + A * A) / (2.0 * B));
  const C t2 = -p.beta * L2 / (B * B - L2 * L2) *
               (2.0 * A * A * L2 - (B * B + A * A) * (L2 * L2 + A * A) / (2.0 * B));
  return t1 + t2;
}

C eval_Eh(const ModelParams& p, const ModeContext& m) {
  const C B = m.B_a, L1 = m.L1, L2 = m.L2;
  const C A = C(m.A);
  const C dB = (m.lambda + p.a) / (B + A);  // B - A without cancellation
  const C d1 = m.z1 / (L1 + A);
  const C d2 = m.z2 / (L2 + A);
  const C num = detail::eh_numerator_stable(A, dB, d1, d2);
  return p.beta * num / (2.0 * B * (B * B - L1 * L1) * (B * B - L2 * L2));
}

C eval_Eh_naive(const ModelParams& p, const ModeContext& m) {
  const C B = m.B_a, L1 = m.L1, L2 = m.L2;
  const double A = m.A;
  const C t1 = -2.0 * p.beta * A * A * B * B * (L1 + L2) /
               ((B * B - L1 * L1) * (B * B - L2 * L2));
  const C t2 = p.beta * (B * B + A * A) *
               (B * B * (L1 * L1 + L1 * L2 + L2 * L2) + A * A * B * B -
                L1 * L1 * L2 * L2 + A * A * L1 * L2) /
               (2.0 * B * (B * B - L1 * L1) * (B * B - L2 * L2));
  return t1 + t2;
}

C eval_calB(const ModeContext& m) {
  const C B = m.B_a, L1 = m.L1, L2 = m.L2;
  const C A = C(m.A);
  const C s = B * B - A * A;
  const C dB = s / (B + A);
  const C d1 = (L1 * L1 - A * A) / (L1 + A);
  const C d2 = (L2 * L2 - A * A) / (L2 + A);
  // middle-term numerator with the near-cancelling factors taken as
  // differences: L2 B - A^2 = A (d2 + dB) + d2 dB, A - B = -dB, L1 - A = d1
  const C mid_num = B * (A * (d2 + dB) + d2 * dB) * d1 - A * L1 * (L2 + B) * dB;
  return 2.0 * A * A / ((B + A) * (B + A)) +
         2.0 * mid_num / ((B + L1) * (B + L2) * s) +
         (A * B + L1 * L2) / ((B + L1) * (B + L2));
}

EKernel eval_E_kernel(const ModelParams& p, const ModeContext& m) {
  if (p.beta == 0.0) throw BetaZero("eval_E_kernel: beta = 0");
  EKernel k;
  k.alpha_Y0 = C(2.0 / p.beta);
  k.alpha_Y1 = -2.0 / (m.B_a * p.beta);
  k.alpha_X = detail::e_kernel_alpha_X(C(m.A), m.B_a, m.L1, m.L2, m.lambda);
  k.alpha_C = detail::e_kernel_alpha_C(C(m.A), m.B_a, m.L1, m.L2, m.lambda);
  return k;
}

DetCriterion det_criterion(const ModelParams& p, const ModeContext& m) {
  const C B = m.B_a, L1 = m.L1, L2 = m.L2, lam = m.lambda;
  const double A = m.A;
  const int N = m.dim();
  DetCriterion d;
  const double b2 = p.beta * p.beta;
  d.alpha1 = lam * b2 * L1 * (A * A - B * L1) / (2.0 * B * (B * B - L1 * L1));
  d.alpha2 = lam * b2 * L2 * (A * A - B * L2) / (2.0 * B * (B * B - L2 * L2));
  d.Lambda = L1 * A * (L2 - A) / (lam * (L2 - L1));
  d.alphaC =
      A * b2 / (B * B) *
      (A * (B - A) * (B - A) / (B * B - A * A) +
       L2 * (A * A + L2 * L2 - 3.0 * B * L2 + B * B) * (L1 - A) /
           (2.0 * (B * B - L2 * L2) * (L2 - L1)) -
       L1 * (A * A + L1 * L1 - 3.0 * B * L1 + B * B) * (L2 - A) /
           (2.0 * (B * B - L1 * L1) * (L2 - L1)));
  const int n = 2 * N - 1;
  MatC M = MatC::Zero(n, n);
  const C i(0.0, 1.0);
  for (int j = 0; j < N - 1; ++j) {
    M(j, j) = d.alpha1;
    M(j, N - 1 + j) = d.alpha2;
    M(j, n - 1) = i * m.xi_prime[j] * d.alphaC;
  }
  for (int k = 0; k < N - 1; ++k) M(N - 1, k) = i * m.xi_prime[k];
  M(N - 1, n - 1) = d.Lambda;
  for (int j = 0; j < N - 1; ++j) {
    M(N + j, j) = 1.0;
    M(N + j, N - 1 + j) = 1.0;
    M(N + j, n - 1) = -i * m.xi_prime[j] / lam;
  }
  d.M = M;
  d.det_lu = Eigen::PartialPivLU<MatC>(M).determinant();
  const double sign = (N % 2 == 0) ? -1.0 : 1.0;
  d.det_closed_form =
      sign * std::pow(d.alpha1 - d.alpha2, N - 2) *
      (A * A * (d.alpha2 / lam + d.alphaC) + d.Lambda * (d.alpha1 - d.alpha2));
  return d;
}

}  // namespace hsbe
