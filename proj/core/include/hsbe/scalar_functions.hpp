#pragma once

#include <vector>

#include "hsbe/spectral.hpp"
#include "hsbe/types.hpp"

namespace hsbe {

// Scalar functions of one mode.  calC and calA are the denominators of the
// boundary-amplitude formulas; their non-vanishing on the sector is what the
// whole solver rests on.  The normalized forms are
//   calC = beta (lambda+a)/lambda * F_a(lambda, t),    t = A / sqrt(lambda+a),
//   calA = (lambda+a)^2 * G_a(lambda, t).

/// F_a(lambda, t) evaluated from the normalized roots z~_j; stable for all
/// |t| (difference-variable kernel).  `t` may be any complex number.
C fa_value(C z1t, C z2t, C t);

/// G_a(lambda, t), same conventions.
C ga_value(C z1t, C z2t, C t);

/// Large-|t| limit of F_a:  -z~1 z~2 / (2 (1-z~1)(1-z~2)).
C fa_tail_limit(C z1t, C z2t);

/// calC on the regular branch (works at lambda = eta too; the kernel has no
/// divided difference).  Throws BetaZero for beta = 0.
C eval_calC(const ModelParams& p, const ModeContext& m);

/// calC from the textbook form (I1 + I2/(L2-L1))/lambda; diagnostic only,
/// unstable near eta.  Throws DegenerateLambda inside the eta window.
C eval_calC_naive(const ModelParams& p, const ModeContext& m);

/// calC~ at lambda = eta (tilde branch).
C eval_calC_degenerate(const ModelParams& p, double A);

/// calA from the defining form B^3(L1+L2) - A^2 B^2 - A^2 L1 L2.
C eval_calA(const ModeContext& m);

/// calA via (lambda+a)^2 G_a (stable dual route).
C eval_calA_stable(const ModelParams& p, const ModeContext& m);

/// E_h = hbar / ((L2-L1) i xi'.h'): the scalar boundary-data kernel of the
/// E_k decomposition; difference-variable evaluation, stable for large A.
C eval_Eh(const ModelParams& p, const ModeContext& m);

/// E_h from the two-term divided-difference form (diagnostic dual route).
C eval_Eh_naive(const ModelParams& p, const ModeContext& m);

/// The order-0 type-2 multiplier piece calB.
C eval_calB(const ModeContext& m);

/// hbar / (i xi'.h') without the divided difference (the raw two-bracket
/// form); used by the naive calC path.
C eval_hbar_scalar(const ModelParams& p, const ModeContext& m);

/// I1 and I2 of the textbook calC form.
C eval_I1(const ModelParams& p, const ModeContext& m);
C eval_I2(const ModelParams& p, const ModeContext& m);

/// I2/(L2-L1) in divided-difference form (stable near eta, not for large A).
C eval_I2_over_diff(const ModelParams& p, const ModeContext& m);

/// Scalar coefficients of the E_k decomposition:
///   E_k = i xi_k [alpha_X (i xi'.h') + alpha_C C + alpha_Y0 H_NN
///                  + alpha_Y1 sum_j i xi_j H_jN]
///         - (2/beta) (sum_l i xi_l H_kl - B_a H_kN).
struct EKernel {
  C alpha_X, alpha_C, alpha_Y0, alpha_Y1;
};
EKernel eval_E_kernel(const ModelParams& p, const ModeContext& m);

/// Ingredients of the determinant criterion: the (2N-1)x(2N-1) reduced
/// matrix M of the homogeneous solvability system and its closed-form
/// determinant
///   det M = (-1)^{N-1} (a1-a2)^{N-2} [A^2 (a2/lambda + aC) + Lam (a1-a2)].
struct DetCriterion {
  C alpha1, alpha2, alphaC, Lambda;
  MatC M;             ///< the assembled (2N-1)^2 matrix
  C det_lu;           ///< determinant by LU
  C det_closed_form;  ///< determinant by the closed form
};
DetCriterion det_criterion(const ModelParams& p, const ModeContext& m);

}  // namespace hsbe
