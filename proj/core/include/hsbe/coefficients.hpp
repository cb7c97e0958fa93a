#pragma once

#include <map>
#include <string>
#include <vector>

#include "hsbe/scalar_functions.hpp"
#include "hsbe/spectral.hpp"

namespace hsbe {

/// Boundary data of one tangential mode: velocity trace h (length N, with
/// h_N = 0) and the normal-derivative trace H of Q (NxN symmetric traceless).
struct BoundaryModeData {
  VecC h_hat;
  MatC H_hat;

  void validate(double tol = 1e-12) const;
  double norm() const { return h_hat.norm() + H_hat.norm(); }
};

enum class Branch { Regular, Degenerate };

/// Amplitudes of one mode profile,
///   u = A0 e^{-A x} + A1 e^{-L1 x} + A2 e^{-L2 x},
///   Q = Am e^{-A x} + P e^{-B_a x} + Q1 e^{-L1 x} + Q2 e^{-L2 x},
///   p = Cp e^{-A x} + D e^{-B_a x}.
/// On the degenerate branch (lambda at eta) L1 = L2 = L0 and the A2/Q2
/// columns multiply x e^{-L0 x} instead of a second exponential.
struct AmplitudeSet {
  Branch branch = Branch::Regular;
  C Cp{};  ///< pressure amplitude of the e^{-A x} mode
  C D{};   ///< pressure amplitude of the e^{-B_a x} mode
  VecC A0, A1, A2;     ///< velocity amplitudes, length N
  MatC Am, P, Q1, Q2;  ///< Q amplitudes, NxN symmetric
  VecC E;              ///< trace kernel values, length N-1
  ModeContext mode;

  bool zero_tangential_mode() const { return mode.A == 0.0; }
};

/// Assemble the full amplitude set by solving the per-mode relations as one
/// linear system with partial pivoting (the relations are mutually
/// recursive, so no elimination order exists).  Closed forms are checked
/// separately by relation_residuals.
///
/// Handles beta = 0 (decoupled Stokes/heat path) and the zero tangential
/// mode (pressure gauge Cp = 0) explicitly.  Throws DegenerateLambda when
/// the mode is flagged degenerate (use assemble_amplitudes_degenerate), and
/// SingularSystem when the solve fails (calC*calA numerically ~ 0).
AmplitudeSet assemble_amplitudes(const ModelParams& p, const ModeContext& m,
                                 const BoundaryModeData& data);

/// The tilde branch at lambda = eta.  Throws BetaZero for beta = 0.
AmplitudeSet assemble_amplitudes_degenerate(const ModelParams& p,
                                            const VecR& xi_prime,
                                            const BoundaryModeData& data);

/// Dispatch on the degeneracy flag.
AmplitudeSet assemble_mode(const ModelParams& p, const ModeContext& m,
                           const BoundaryModeData& data);

/// Relative residuals of every individual amplitude relation evaluated on
/// an assembled set (closed-form cross-checks; the linear solve is the
/// authoritative path).
struct RelationResiduals {
  double max_rel = 0.0;
  std::map<std::string, double> by_relation;
};
RelationResiduals relation_residuals(const ModelParams& p,
                                     const AmplitudeSet& amps,
                                     const BoundaryModeData& data);

/// Fast closed form for the pressure amplitude:
///   Cp = [E_h (i xi'.h') + H1] / (A calC).
C closed_form_C(const ModelParams& p, const ModeContext& m,
                const BoundaryModeData& data);

/// Decomposition of the trace kernel E_k into data coefficients:
///   E_k = E_h[k] (i xi'.h') + sum_{j,l} E_H[k](j,l) H_{jl}
/// (the H sum runs over all ordered pairs; E_H[k] is symmetric).
struct EDecomposition {
  VecR xi_prime;
  VecC E_h;                ///< length N-1, coefficient of (i xi'.h')
  std::vector<MatC> E_H;   ///< N-1 matrices, each NxN symmetric
  C Eh_scalar;             ///< the scalar kernel E_h = hbar/((L2-L1) i xi'.h')
  C calB;
};
EDecomposition eval_E_decomposition(const ModelParams& p, const ModeContext& m);

/// Apply a decomposition to boundary data, returning the N-1 values E_k.
VecC apply_E_decomposition(const EDecomposition& d, const BoundaryModeData& data);

}  // namespace hsbe
