#pragma once

// Scalar coefficients of the boundary-trace kernel E_k, derived by exact
// substitution of the amplitude relation chain (D -> P -> Q -> A^alpha_N).

#include <complex>

namespace hsbe::detail {

using C = std::complex<double>;

// coefficient of the pressure amplitude in the scalar part of E_k
inline C e_kernel_alpha_C(C A, C B, C L1, C L2, C lam) {
  const C x0 = (B*B*B*B*B);
  const C x1 = (B*B*B*B);
  const C x2 = A*x1;
  const C x3 = (B*B*B);
  const C x4 = (L1*L1);
  const C x5 = x3*x4;
  const C x6 = (L2*L2);
  const C x7 = x3*x6;
  const C x8 = x4*x6;
  const C x9 = (B*B);
  const C x10 = A*x9;
  const C x11 = x10*x4;
  const C x12 = x10*x6;
  const C x13 = 3.0*x2;
  const C x14 = (A*A*A*A);
  const C x15 = L1*L2;
  const C x16 = 3.0*x1;
  const C x17 = (A*A);
  const C x18 = (A*A*A);
  const C x19 = L1*x6;
  const C x20 = L2*x4;
  const C x21 = 3.0*A;
  const C x22 = 3.0*x17*x3;
  const C x23 = 2.0*L1;
  const C x24 = 2.0*L2;
  const C x25 = B*x17;
  const C x26 = x17*x9;
  return A*(A*x0 - 5.0*A*x15*x3 - B*x15*x18 + L1*x13 + L1*x22 + L2*x13 + L2*x22 + x11*x24 + x12*x23 - x14*x15 - x14*x9 - x15*x16 - 2.0*x15*x26 - x16*x17 - x17*x8 + x18*x19 + x18*x20 - x18*x3 + x19*x25 + x20*x25 - x21*x5 - x21*x7 + x23*x7 + x24*x5 + x26*x4 + x26*x6 - 3.0*x8*x9)/(B*lam*(A*x8 + B*x8 + x0 - x11 - x12 + x2 - x5 - x7));
}

// coefficient of i xi'.h' in the scalar part of E_k
inline C e_kernel_alpha_X(C A, C B, C L1, C L2, C lam) {
  (void)lam;
  const C x0 = (B*B*B*B);
  const C x1 = (L1*L1);
  const C x2 = (L2*L2);
  const C x3 = x1*x2;
  const C x4 = (B*B);
  const C x5 = x1*x4;
  const C x6 = x2*x4;
  const C x7 = 3.0*(B*B*B);
  const C x8 = (A*A);
  const C x9 = L1*L2;
  return (-L1*x7 - L2*x7 + x0 - x3 + x4*x8 + 2.0*x4*x9 + x5 + x6 + x8*x9)/(B*(x0 + x3 - x5 - x6));
}

}  // namespace hsbe::detail
