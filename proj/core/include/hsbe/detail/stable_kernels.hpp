#pragma once

// Machine-expanded polynomial kernels: exact rearrangements of the scalar
// functions in difference variables (e_j = u_j - t, g = w - t resp.
// dB = B - A, d_j = L_j - A).  The expansions carry no monomial whose net
// scale exceeds the value of the function itself, so the evaluations stay
// accurate where the defining rational forms cancel catastrophically
// (|t| or A large).  Regenerate by expanding the defining forms with a CAS
// in the listed variables; the unit tests pin frozen high-precision
// reference values.

#include <complex>

namespace hsbe::detail {

using C = std::complex<double>;

// 2 w (1-z1)(1-z2) F_a as a polynomial in (t, e1, e2, g)
inline C fa_numerator_stable(C t, C e1, C e2, C g) {
  const C x0 = (g*g*g);
  const C x1 = (t*t*t*t);
  const C x2 = (g*g*g*g);
  const C x3 = (t*t*t);
  const C x4 = (t*t*t*t*t);
  const C x5 = 8.0*x4;
  const C x6 = 2.0*x3;
  const C x7 = (e2*e2);
  const C x8 = e1*x2;
  const C x9 = (e1*e1);
  const C x10 = 4.0*x1;
  const C x11 = e1*e2;
  const C x12 = (g*g);
  const C x13 = x10*x12;
  const C x14 = e1*x13;
  const C x15 = e2*x13;
  const C x16 = e1*x12;
  const C x17 = e2*x3;
  const C x18 = (t*t);
  const C x19 = 4.0*g;
  const C x20 = e1*x7;
  const C x21 = 4.0*t*x0;
  const C x22 = e2*x9;
  const C x23 = x12*x6;
  const C x24 = x23*x9;
  const C x25 = 10.0*x18;
  return 8.0*e1*x0*x4 + 4.0*e1*x1*x2 - 3.0*e2*t*x8 + 8.0*e2*x0*x4 + 4.0*e2*x1*x2 - e2*x16*x5 - e2*x2*x9 - (g*g*g*g*g*g)*x6 - 8.0*(g*g*g*g*g)*x1 - g*x10*x11 + 2.0*g*x18*x7*x9 - t*x12*x7*x9 + 4.0*x0*x1*x7 + 4.0*x0*x1*x9 + 4.0*x0*x1 - 8.0*x0*x11*x18 - x12*x22*x25 - x14*x7 - x14 - x15*x9 - x15 - 16.0*x16*x17 - x16*x25*x7 - x17*x19*x9 - x19*x20*x3 + 2.0*x2*x3*x7 + 2.0*x2*x3*x9 + 2.0*x2*x3 - x2*x5 - x20*x21 - x21*x22 - x23*x7 - x24*x7 - x24 + 2.0*x3*x7*x9 - x7*x8;
}

// G_a = w^3(u1+u2) - t^2 w^2 - t^2 u1 u2 as a polynomial in (t, e1, e2, g)
inline C ga_stable(C t, C e1, C e2, C g) {
  const C x0 = (g*g*g);
  const C x1 = (t*t);
  const C x2 = e1*x1;
  const C x3 = 3.0*g;
  const C x4 = (g*g);
  const C x5 = 3.0*t*x4;
  return e1*x0 + e1*x5 + e2*x0 + e2*x1*x3 - e2*x2 + e2*x5 + 4.0*g*(t*t*t) + 2.0*t*x0 + 5.0*x1*x4 + x2*x3;
}

// 2 B (B^2-L1^2)(B^2-L2^2) E_h / beta as a polynomial in (A, dB, d1, d2)
inline C eh_numerator_stable(C A, C dB, C d1, C d2) {
  const C x0 = (dB*dB*dB*dB);
  const C x1 = d1*d2;
  const C x2 = (d1*d1);
  const C x3 = (d2*d2);
  const C x4 = 3.0*A*x0;
  const C x5 = 4.0*(A*A*A*A);
  const C x6 = dB*x5;
  const C x7 = (A*A);
  const C x8 = 4.0*x7;
  const C x9 = (A*A*A);
  const C x10 = (dB*dB*dB);
  const C x11 = 8.0*x10;
  const C x12 = (dB*dB);
  const C x13 = 4.0*x10;
  const C x14 = A*x13;
  const C x15 = A*x2;
  const C x16 = x11*x7;
  const C x17 = 4.0*x9;
  const C x18 = d1*x3;
  const C x19 = 8.0*x12*x9;
  const C x20 = x17*x2;
  const C x21 = 2.0*x12;
  const C x22 = x2*x3;
  const C x23 = 2.0*x22;
  const C x24 = dB*x8;
  const C x25 = 6.0*x12*x7;
  return -A*dB*x23 - A*x18*x21 + d1*x16 + d1*x19 + d1*x4 + d1*x6 - d2*x15*x21 + d2*x16 + d2*x19 - d2*x2*x24 - d2*x20 + d2*x4 + d2*x6 + dB*x17*x3 + dB*x20 + x0*x1 + x0*x2 + x0*x3 + x0*x8 + x1*x12*x8 + x1*x14 - x1*x5 + x11*x9 - x12*x22 + x12*x5 + x13*x15 + x14*x3 - x17*x18 - x18*x24 + x2*x25 - x23*x7 + x25*x3;
}

}  // namespace hsbe::detail
