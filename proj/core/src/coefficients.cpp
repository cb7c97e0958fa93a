#include "hsbe/coefficients.hpp"

#include <Eigen/LU>

namespace hsbe {

namespace {

constexpr C kI(0.0, 1.0);

// Fourier symbol of D(u) for a coefficient vector u with normal decay rate
// g: row (j,k) of the symmetrized gradient, with D_N acting as -g.
// fill(j, k, coeff_of_u[c]) accumulates into a dense row.
template <typename F>
void dhat_row(int N, const VecR& xi, C g, int j, int k, F&& add) {
  if (j > k) std::swap(j, k);
  if (k < N - 1) {
    add(k, kI * xi[j] / 2.0);
    add(j, kI * xi[k] / 2.0);
  } else if (j < N - 1) {
    add(N - 1, kI * xi[j] / 2.0);
    add(j, -g / 2.0);
  } else {
    add(N - 1, -g);
  }
}

struct Layout {
  int N, S;
  bool with_E;
  int iC = 0, iD = 1, iA0 = 2, iA1, iA2, iAm, iP, iQ1, iQ2, iE, dim;
  explicit Layout(int N_, bool with_E_) : N(N_), S(sym_count(N_)), with_E(with_E_) {
    iA1 = iA0 + N;
    iA2 = iA1 + N;
    iAm = iA2 + N;
    iP = iAm + S;
    iQ1 = iP + S;
    iQ2 = iQ1 + S;
    iE = iQ2 + S;
    dim = iE + (with_E ? N - 1 : 0);
  }
  int am(int j, int k) const { return iAm + sym_index(N, j, k); }
  int pp(int j, int k) const { return iP + sym_index(N, j, k); }
  int q1(int j, int k) const { return iQ1 + sym_index(N, j, k); }
  int q2(int j, int k) const { return iQ2 + sym_index(N, j, k); }
};

AmplitudeSet unpack(const Layout& L, const VecC& x, const ModeContext& m,
                    Branch branch) {
  AmplitudeSet s;
  s.branch = branch;
  s.mode = m;
  s.Cp = x[L.iC];
  s.D = x[L.iD];
  s.A0 = x.segment(L.iA0, L.N);
  s.A1 = x.segment(L.iA1, L.N);
  s.A2 = x.segment(L.iA2, L.N);
  s.Am = MatC(L.N, L.N);
  s.P = MatC(L.N, L.N);
  s.Q1 = MatC(L.N, L.N);
  s.Q2 = MatC(L.N, L.N);
  for (int j = 0; j < L.N; ++j)
    for (int k = 0; k < L.N; ++k) {
      s.Am(j, k) = x[L.am(j, k)];
      s.P(j, k) = x[L.pp(j, k)];
      s.Q1(j, k) = x[L.q1(j, k)];
      s.Q2(j, k) = x[L.q2(j, k)];
    }
  s.E = L.with_E ? VecC(x.segment(L.iE, L.N - 1)) : VecC::Zero(L.N - 1);
  return s;
}

VecC equilibrated_solve(MatC& M, VecC& rhs, const char* who) {
  const int n = static_cast<int>(M.rows());
  for (int r = 0; r < n; ++r) {
    const double scale = M.row(r).cwiseAbs().maxCoeff();
    if (!(scale > 0.0) || !std::isfinite(scale))
      throw SingularSystem(std::string(who) + ": zero or non-finite row");
    M.row(r) /= scale;
    rhs[r] /= scale;
  }
  Eigen::PartialPivLU<MatC> lu(M);
  VecC x = lu.solve(rhs);
  const double res = (M * x - rhs).norm();
  const double scale = std::max(1.0, rhs.norm());
  if (!x.allFinite() || res > 1e-8 * scale)
    throw SingularSystem(std::string(who) + ": linear solve failed (residual " +
                         std::to_string(res) + ")");
  return x;
}

AmplitudeSet assemble_beta0([[maybe_unused]] const ModelParams& p, const ModeContext& m,
                            const BoundaryModeData& data) {
  // decoupled path: Stokes resolvent for u, Neumann heat profile for Q
  const int N = m.dim();
  AmplitudeSet s;
  s.branch = Branch::Regular;
  s.mode = m;
  s.A0 = VecC::Zero(N);
  s.A1 = VecC::Zero(N);
  s.A2 = VecC::Zero(N);
  s.Am = MatC::Zero(N, N);
  s.Q1 = MatC::Zero(N, N);
  s.Q2 = MatC::Zero(N, N);
  s.E = VecC::Zero(N - 1);
  s.D = C(0.0);
  s.P = -data.H_hat / m.B_a;
  const C M2 = m.L2;  // sqrt(lambda + A^2): the Stokes decay rate
  C ixh(0.0);
  for (int k = 0; k < N - 1; ++k) ixh += kI * m.xi_prime[k] * data.h_hat[k];
  if (m.A > 0.0) {
    s.Cp = m.lambda * ixh / (m.A * (m.A - M2));
    for (int j = 0; j < N - 1; ++j)
      s.A0[j] = -kI * m.xi_prime[j] * s.Cp / m.lambda;
    s.A0[N - 1] = m.A * s.Cp / m.lambda;
  } else {
    s.Cp = C(0.0);
  }
  s.A2 = data.h_hat - s.A0;
  return s;
}

}  // namespace

void BoundaryModeData::validate(double tol) const {
  const int N = static_cast<int>(h_hat.size());
  if (H_hat.rows() != N || H_hat.cols() != N)
    throw std::invalid_argument("BoundaryModeData: H_hat must be N x N");
  const double scale = std::max(1.0, norm());
  if (std::abs(h_hat[N - 1]) > tol * scale)
    throw std::invalid_argument("BoundaryModeData: h_N must vanish on the boundary");
  if ((H_hat - H_hat.transpose()).norm() > tol * scale)
    throw std::invalid_argument("BoundaryModeData: H_hat must be symmetric");
  if (std::abs(H_hat.trace()) > tol * scale)
    throw std::invalid_argument("BoundaryModeData: H_hat must be traceless");
}

AmplitudeSet assemble_amplitudes(const ModelParams& p, const ModeContext& m,
                                 const BoundaryModeData& data) {
  const int N = m.dim();
  if (static_cast<int>(data.h_hat.size()) != N)
    throw std::invalid_argument("assemble_amplitudes: data dimension mismatch");
  if (p.beta == 0.0) return assemble_beta0(p, m, data);
  if (m.degenerate)
    throw DegenerateLambda("assemble_amplitudes: lambda inside the eta window");

  const Layout L(N, /*with_E=*/true);
  const VecR& xi = m.xi_prime;
  const C lam = m.lambda, B = m.B_a, L1 = m.L1, L2 = m.L2;
  const double A = m.A;
  const C P1 = B * B - L1 * L1, P2 = B * B - L2 * L2;

  MatC M = MatC::Zero(L.dim, L.dim);
  VecC rhs = VecC::Zero(L.dim);
  int r = 0;

  // pressure -> A-mode velocity: lam A0_j + i xi_j Cp = 0, lam A0_N - A Cp = 0
  for (int j = 0; j < N - 1; ++j, ++r) {
    M(r, L.iA0 + j) = lam;
    M(r, L.iC) = kI * xi[j];
  }
  M(r, L.iA0 + N - 1) = lam;
  M(r, L.iC) = -A;
  ++r;

  // Q-system per exponential mode, denominators cleared
  for (int j = 0; j < N; ++j)
    for (int k = j; k < N; ++k) {
      M(r, L.am(j, k)) = lam + p.a;
      dhat_row(N, xi, C(A), j, k,
               [&](int c, C v) { M(r, L.iA0 + c) -= p.beta * v; });
      ++r;
    }
  for (int j = 0; j < N; ++j)
    for (int k = j; k < N; ++k) {
      M(r, L.q1(j, k)) = P1;
      dhat_row(N, xi, L1, j, k,
               [&](int c, C v) { M(r, L.iA1 + c) -= p.beta * v; });
      ++r;
    }
  for (int j = 0; j < N; ++j)
    for (int k = j; k < N; ++k) {
      M(r, L.q2(j, k)) = P2;
      dhat_row(N, xi, L2, j, k,
               [&](int c, C v) { M(r, L.iA2 + c) -= p.beta * v; });
      ++r;
    }

  // normal-derivative boundary condition of Q
  for (int j = 0; j < N; ++j)
    for (int k = j; k < N; ++k, ++r) {
      M(r, L.am(j, k)) = A;
      M(r, L.pp(j, k)) = B;
      M(r, L.q1(j, k)) = L1;
      M(r, L.q2(j, k)) = L2;
      rhs[r] = -data.H_hat(j, k);
    }

  // momentum rows of the e^{-B_a x} mode
  for (int j = 0; j < N - 1; ++j, ++r) {
    M(r, L.iD) = kI * xi[j];
    for (int k = 0; k < N - 1; ++k) M(r, L.pp(j, k)) += p.beta * lam * kI * xi[k];
    M(r, L.pp(j, N - 1)) -= p.beta * lam * B;
  }
  M(r, L.iD) = -B;
  for (int k = 0; k < N - 1; ++k) M(r, L.pp(N - 1, k)) += p.beta * lam * kI * xi[k];
  M(r, L.pp(N - 1, N - 1)) -= p.beta * lam * B;
  ++r;

  // velocity trace
  const int bc_normal_row = r + N - 1;
  for (int j = 0; j < N; ++j, ++r) {
    M(r, L.iA0 + j) = 1.0;
    M(r, L.iA1 + j) = 1.0;
    M(r, L.iA2 + j) = 1.0;
    rhs[r] = data.h_hat[j];
  }

  // divergence-free, one row per decaying velocity mode
  for (int k = 0; k < N - 1; ++k) M(r, L.iA1 + k) = kI * xi[k];
  M(r, L.iA1 + N - 1) = -L1;
  ++r;
  for (int k = 0; k < N - 1; ++k) M(r, L.iA2 + k) = kI * xi[k];
  M(r, L.iA2 + N - 1) = -L2;
  ++r;

  // trace-kernel definition rows
  const C calA = eval_calA(m);
  for (int j = 0; j < N - 1; ++j, ++r) {
    M(r, L.iA1 + j) = (L2 - L1) * calA;
    M(r, L.iE + j) = P1 * P2;
    M(r, L.iA0 + j) = P1 * L2 * (B * L2 - A * A);
    rhs[r] = P1 * L2 * (B * L2 - A * A) * data.h_hat[j];
  }

  if (A == 0.0) {
    // zero tangential mode: the Cp column is void (all its couplings carry
    // xi' = 0) and the normal velocity trace row is implied by the
    // divergence rows; swap it for the pressure gauge Cp = 0
    M.row(bc_normal_row).setZero();
    M(bc_normal_row, L.iC) = 1.0;
    rhs[bc_normal_row] = C(0.0);
  }

  const VecC x = equilibrated_solve(M, rhs, "assemble_amplitudes");
  return unpack(L, x, m, Branch::Regular);
}

AmplitudeSet assemble_amplitudes_degenerate(const ModelParams& p,
                                            const VecR& xi_prime,
                                            const BoundaryModeData& data) {
  if (p.beta == 0.0)
    throw BetaZero("assemble_amplitudes_degenerate: beta = 0");
  const double eta = eta_point(p);
  ModeContext m = wave_numbers(p, C(eta), xi_prime);
  // confluent roots: force the exact double point
  const double b2 = p.beta * p.beta / 2.0;
  const C z0 = C((2.0 * eta + p.a * (1.0 + b2)) / (2.0 * (1.0 + b2)));
  m.z1 = m.z2 = z0;
  m.L1 = m.L2 = std::sqrt(C(m.A * m.A) + z0);
  m.degenerate = true;

  const int N = m.dim();
  const Layout L(N, /*with_E=*/false);
  const VecR& xi = m.xi_prime;
  const C lam = m.lambda, B = m.B_a, L0 = m.L1;
  const double A = m.A;
  const C P0 = B * B - L0 * L0;

  MatC M = MatC::Zero(L.dim, L.dim);
  VecC rhs = VecC::Zero(L.dim);
  int r = 0;

  for (int j = 0; j < N - 1; ++j, ++r) {
    M(r, L.iA0 + j) = lam;
    M(r, L.iC) = kI * xi[j];
  }
  M(r, L.iA0 + N - 1) = lam;
  M(r, L.iC) = -A;
  ++r;

  for (int j = 0; j < N; ++j)
    for (int k = j; k < N; ++k) {
      M(r, L.am(j, k)) = lam + p.a;
      dhat_row(N, xi, C(A), j, k,
               [&](int c, C v) { M(r, L.iA0 + c) -= p.beta * v; });
      ++r;
    }
  // x e^{-L0 x} rows
  for (int j = 0; j < N; ++j)
    for (int k = j; k < N; ++k) {
      M(r, L.q2(j, k)) = P0;
      dhat_row(N, xi, L0, j, k,
               [&](int c, C v) { M(r, L.iA2 + c) -= p.beta * v; });
      ++r;
    }
  // e^{-L0 x} rows pick up the derivative of the x-term:
  // D_N(A2 x e^{-L0 x}) contributes A2 at order x^0
  for (int j = 0; j < N; ++j)
    for (int k = j; k < N; ++k) {
      M(r, L.q1(j, k)) = P0;
      M(r, L.q2(j, k)) = 2.0 * L0;
      dhat_row(N, xi, L0, j, k,
               [&](int c, C v) { M(r, L.iA1 + c) -= p.beta * v; });
      if (j < N - 1 && k == N - 1)
        M(r, L.iA2 + j) -= p.beta / 2.0;
      else if (j == N - 1 && k == N - 1)
        M(r, L.iA2 + N - 1) -= p.beta;
      ++r;
    }

  // D_N Q(0) = -A Am - B P - L0 Q1 + Q2
  for (int j = 0; j < N; ++j)
    for (int k = j; k < N; ++k, ++r) {
      M(r, L.am(j, k)) = A;
      M(r, L.pp(j, k)) = B;
      M(r, L.q1(j, k)) = L0;
      M(r, L.q2(j, k)) = -1.0;
      rhs[r] = -data.H_hat(j, k);
    }

  for (int j = 0; j < N - 1; ++j, ++r) {
    M(r, L.iD) = kI * xi[j];
    for (int k = 0; k < N - 1; ++k) M(r, L.pp(j, k)) += p.beta * lam * kI * xi[k];
    M(r, L.pp(j, N - 1)) -= p.beta * lam * B;
  }
  M(r, L.iD) = -B;
  for (int k = 0; k < N - 1; ++k) M(r, L.pp(N - 1, k)) += p.beta * lam * kI * xi[k];
  M(r, L.pp(N - 1, N - 1)) -= p.beta * lam * B;
  ++r;

  const int bc_normal_row = r + N - 1;
  for (int j = 0; j < N; ++j, ++r) {
    M(r, L.iA0 + j) = 1.0;
    M(r, L.iA1 + j) = 1.0;
    rhs[r] = data.h_hat[j];
  }

  // divergence: x-mode, then the constant mode with the x-term derivative
  for (int k = 0; k < N - 1; ++k) M(r, L.iA2 + k) = kI * xi[k];
  M(r, L.iA2 + N - 1) = -L0;
  ++r;
  for (int k = 0; k < N - 1; ++k) M(r, L.iA1 + k) = kI * xi[k];
  M(r, L.iA1 + N - 1) = -L0;
  M(r, L.iA2 + N - 1) = 1.0;
  ++r;

  if (A == 0.0) {
    M.row(bc_normal_row).setZero();
    M(bc_normal_row, L.iC) = 1.0;
    rhs[bc_normal_row] = C(0.0);
  }

  const VecC x = equilibrated_solve(M, rhs, "assemble_amplitudes_degenerate");
  AmplitudeSet s = unpack(L, x, m, Branch::Degenerate);
  // trace kernel by the confluent limit of the kernel definition:
  // sum_a L_a A^a_N/(B+L_a) -> L0 A1_N/(B+L0) - B A2_N/(B+L0)^2
  for (int j = 0; j < N - 1; ++j) {
    C sAm(0.0);
    for (int l = 0; l < N - 1; ++l) sAm += kI * xi[l] * s.Am(j, l);
    C sH(0.0);
    for (int l = 0; l < N - 1; ++l) sH += kI * xi[l] * data.H_hat(j, l);
    s.E[j] = 2.0 * kI * xi[j] * B / (p.beta * p.beta * lam) * s.D -
             2.0 * A / p.beta * (sAm - B * s.Am(j, N - 1)) +
             kI * xi[j] *
                 (L0 * s.A1[N - 1] / (B + L0) - B * s.A2[N - 1] / ((B + L0) * (B + L0))) -
             2.0 / p.beta * (sH - B * data.H_hat(j, N - 1));
  }
  return s;
}

AmplitudeSet assemble_mode(const ModelParams& p, const ModeContext& m,
                           const BoundaryModeData& data) {
  if (m.degenerate && p.beta != 0.0)
    return assemble_amplitudes_degenerate(p, m.xi_prime, data);
  return assemble_amplitudes(p, m, data);
}

C closed_form_C(const ModelParams& p, const ModeContext& m,
                const BoundaryModeData& data) {
  if (p.beta == 0.0) throw BetaZero("closed_form_C: beta = 0");
  if (m.A == 0.0)
    throw std::invalid_argument("closed_form_C: undefined on the zero mode");
  const int N = m.dim();
  C ixh(0.0);
  for (int k = 0; k < N - 1; ++k) ixh += kI * m.xi_prime[k] * data.h_hat[k];
  C H1 = C(m.A * m.A) * data.H_hat(N - 1, N - 1);
  for (int j = 0; j < N - 1; ++j)
    H1 -= (m.B_a * m.B_a + m.A * m.A) / m.B_a * kI * m.xi_prime[j] *
          data.H_hat(j, N - 1);
  for (int j = 0; j < N - 1; ++j)
    for (int k = 0; k < N - 1; ++k)
      H1 += kI * m.xi_prime[j] * kI * m.xi_prime[k] * data.H_hat(j, k);
  const C calC = m.degenerate ? eval_calC_degenerate(p, m.A) : eval_calC(p, m);
  return (eval_Eh(p, m) * ixh + H1) / (m.A * calC);
}

EDecomposition eval_E_decomposition(const ModelParams& p, const ModeContext& m) {
  if (p.beta == 0.0) throw BetaZero("eval_E_decomposition: beta = 0");
  if (m.degenerate)
    throw DegenerateLambda("eval_E_decomposition: regular branch only");
  if (m.A == 0.0)
    throw std::invalid_argument("eval_E_decomposition: zero tangential mode");
  const int N = m.dim();
  const EKernel k = eval_E_kernel(p, m);
  const C calC = eval_calC(p, m);
  const C B = m.B_a;
  const double A = m.A;
  EDecomposition d;
  d.xi_prime = m.xi_prime;
  d.Eh_scalar = eval_Eh(p, m);
  d.calB = eval_calB(m);
  d.E_h = VecC::Zero(N - 1);
  d.E_H.assign(N - 1, MatC::Zero(N, N));
  const C cD = 1.0 / (A * calC);  // dCp/d(data pieces) prefactor
  for (int kk = 0; kk < N - 1; ++kk) {
    const C ixk = kI * m.xi_prime[kk];
    d.E_h[kk] = ixk * (k.alpha_X + k.alpha_C * d.Eh_scalar * cD);
    MatC& W = d.E_H[kk];
    // H_NN channel: through Cp (H1 carries A^2 H_NN) and directly
    W(N - 1, N - 1) = ixk * (k.alpha_C * cD * C(A * A) + k.alpha_Y0);
    // H_jN channels (each unordered pair split symmetrically)
    for (int j = 0; j < N - 1; ++j) {
      const C ixj = kI * m.xi_prime[j];
      C w = ixk * ixj * (k.alpha_C * cD * (-(B * B + A * A) / B) + k.alpha_Y1);
      if (j == kk) w += 2.0 * B / p.beta;
      W(j, N - 1) += 0.5 * w;
      W(N - 1, j) += 0.5 * w;
    }
    // H_jl channels, j, l < N
    for (int j = 0; j < N - 1; ++j)
      for (int l = 0; l < N - 1; ++l) {
        const C ixj = kI * m.xi_prime[j];
        const C ixl = kI * m.xi_prime[l];
        C w = ixk * ixj * ixl * k.alpha_C * cD;
        if (j == kk) w += -(1.0 / p.beta) * ixl;
        if (l == kk) w += -(1.0 / p.beta) * ixj;
        W(j, l) += w;
      }
  }
  return d;
}

VecC apply_E_decomposition(const EDecomposition& d, const BoundaryModeData& data) {
  const int N = static_cast<int>(data.h_hat.size());
  C ixh(0.0);
  for (int k = 0; k < N - 1; ++k) ixh += kI * d.xi_prime[k] * data.h_hat[k];
  VecC out = VecC::Zero(N - 1);
  for (int k = 0; k < N - 1; ++k) {
    C acc = d.E_h[k] * ixh;
    for (int j = 0; j < N; ++j)
      for (int l = 0; l < N; ++l) acc += d.E_H[k](j, l) * data.H_hat(j, l);
    out[k] = acc;
  }
  return out;
}

namespace {

double rel_of(C residual, double scale) {
  return std::abs(residual) / std::max(scale, 1e-300);
}

}  // namespace

RelationResiduals relation_residuals(const ModelParams& p,
                                     const AmplitudeSet& s,
                                     const BoundaryModeData& data) {
  const ModeContext& m = s.mode;
  const int N = m.dim();
  const VecR& xi = m.xi_prime;
  const C lam = m.lambda, B = m.B_a, L1 = m.L1, L2 = m.L2;
  const double A = m.A;
  RelationResiduals out;
  auto put = [&](const std::string& name, double v) {
    auto it = out.by_relation.find(name);
    if (it == out.by_relation.end())
      out.by_relation[name] = v;
    else
      it->second = std::max(it->second, v);
    out.max_rel = std::max(out.max_rel, v);
  };

  // pressure -> A-mode velocity
  for (int j = 0; j < N - 1; ++j)
    put("A0_tangential", rel_of(lam * s.A0[j] + kI * xi[j] * s.Cp,
                                std::abs(lam * s.A0[j]) + std::abs(s.Cp)));
  put("A0_normal", rel_of(lam * s.A0[N - 1] - A * s.Cp,
                          std::abs(lam * s.A0[N - 1]) + std::abs(s.Cp) + 1e-30));

  // Q amplitudes of the e^{-A x} mode, explicit in Cp
  const C cA = p.beta / (lam * (lam + p.a)) * s.Cp;
  for (int j = 0; j < N - 1; ++j)
    for (int k = j; k < N - 1; ++k)
      put("A_jk", rel_of(s.Am(j, k) + cA * kI * xi[j] * kI * xi[k],
                         std::abs(s.Am(j, k)) + std::abs(cA) * A * A + 1e-30));
  for (int k = 0; k < N - 1; ++k)
    put("A_jk", rel_of(s.Am(N - 1, k) - cA * A * kI * xi[k],
                       std::abs(s.Am(N - 1, k)) + std::abs(cA) * A * A + 1e-30));
  put("A_jk", rel_of(s.Am(N - 1, N - 1) + cA * A * A,
                     std::abs(s.Am(N - 1, N - 1)) + std::abs(cA) * A * A + 1e-30));

  const bool deg = s.branch == Branch::Degenerate;
  const C P1 = B * B - L1 * L1, P2 = B * B - L2 * L2;

  if (!deg && p.beta != 0.0) {
    // decaying-mode Q amplitudes
    auto q_check = [&](const MatC& Q, const VecC& Av, C Lx, C Px, const char* nm) {
      for (int j = 0; j < N; ++j)
        for (int k = j; k < N; ++k) {
          C dh;
          if (k < N - 1)
            dh = p.beta * (kI * xi[j] * Av[k] + kI * xi[k] * Av[j]) / 2.0;
          else if (j < N - 1)
            dh = p.beta * (kI * xi[j] * Av[N - 1] - Lx * Av[j]) / 2.0;
          else
            dh = -p.beta * Lx * Av[N - 1];
          put(nm, rel_of(Px * Q(j, k) - dh, std::abs(Px * Q(j, k)) + std::abs(dh) + 1e-30));
        }
    };
    q_check(s.Q1, s.A1, L1, P1, "Q1_jk");
    q_check(s.Q2, s.A2, L2, P2, "Q2_jk");

    // P from the Q boundary condition
    for (int j = 0; j < N; ++j)
      for (int k = j; k < N; ++k) {
        const C res = s.P(j, k) +
                      (A * s.Am(j, k) + L1 * s.Q1(j, k) + L2 * s.Q2(j, k) +
                       data.H_hat(j, k)) / B;
        put("P_jk", rel_of(res, std::abs(s.P(j, k)) + 1e-30 +
                                    (std::abs(A * s.Am(j, k)) + std::abs(L1 * s.Q1(j, k)) +
                                     std::abs(L2 * s.Q2(j, k)) + std::abs(data.H_hat(j, k))) /
                                        std::abs(B)));
      }

    // D from the normal momentum row
    C sP(0.0);
    for (int k = 0; k < N - 1; ++k) sP += kI * xi[k] * s.P(N - 1, k);
    put("D", rel_of(s.D - p.beta * lam / B * (sP - B * s.P(N - 1, N - 1)),
                    std::abs(s.D) + std::abs(p.beta * lam / B) *
                                        (std::abs(sP) + std::abs(B * s.P(N - 1, N - 1))) +
                        1e-30));

    // trace-kernel identity (i-corrected data term)
    for (int j = 0; j < N - 1; ++j) {
      C sAm(0.0), sH(0.0), sAl(0.0);
      for (int l = 0; l < N - 1; ++l) sAm += kI * xi[l] * s.Am(j, l);
      for (int l = 0; l < N - 1; ++l) sH += kI * xi[l] * data.H_hat(j, l);
      sAl = L1 * s.A1[N - 1] / (B + L1) + L2 * s.A2[N - 1] / (B + L2);
      const C E = 2.0 * kI * xi[j] * B / (p.beta * p.beta * lam) * s.D -
                  2.0 * A / p.beta * (sAm - B * s.Am(j, N - 1)) + kI * xi[j] * sAl -
                  2.0 / p.beta * (sH - B * data.H_hat(j, N - 1));
      put("E_j", rel_of(E - s.E[j], std::abs(E) + std::abs(s.E[j]) + 1e-30));
    }

    // closed forms of the decaying normal amplitudes
    C ixh(0.0);
    for (int k = 0; k < N - 1; ++k) ixh += kI * xi[k] * data.h_hat[k];
    if (A > 0.0) {
      const C A1N = -(A / lam) * (L2 - A) / (L2 - L1) * s.Cp - ixh / (L2 - L1);
      const C A2N = (A / lam) * (L1 - A) / (L2 - L1) * s.Cp + ixh / (L2 - L1);
      put("A1_N", rel_of(A1N - s.A1[N - 1], std::abs(A1N) + std::abs(s.A1[N - 1]) + 1e-30));
      put("A2_N", rel_of(A2N - s.A2[N - 1], std::abs(A2N) + std::abs(s.A2[N - 1]) + 1e-30));
      // pressure closed form
      const C Ccf = closed_form_C(p, m, data);
      put("C", rel_of(Ccf - s.Cp, std::abs(Ccf) + std::abs(s.Cp) + 1e-30));
    }

    // tangential closed forms through the trace kernel
    const C calA = eval_calA(m);
    for (int j = 0; j < N - 1; ++j) {
      const C lhs1 = (L2 - L1) * calA * s.A1[j];
      const C rhs1 =
          -(P2 * s.E[j] - L2 * (B * L2 - A * A) * (data.h_hat[j] - s.A0[j])) * P1;
      put("A1_k", rel_of(lhs1 - rhs1, std::abs(lhs1) + std::abs(rhs1) + 1e-30));
      const C lhs2 = (L2 - L1) * calA * s.A2[j];
      const C rhs2 =
          (P1 * s.E[j] - L1 * (B * L1 - A * A) * (data.h_hat[j] - s.A0[j])) * P2;
      put("A2_k", rel_of(lhs2 - rhs2, std::abs(lhs2) + std::abs(rhs2) + 1e-30));
    }
  }
  return out;
}

}  // namespace hsbe
