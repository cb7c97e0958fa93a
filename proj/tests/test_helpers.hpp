#pragma once

#include <random>

#include <doctest.h>

#include "hsbe/coefficients.hpp"

namespace hsbe::testing {

inline double rel_err(C a, C b) {
  return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300});
}

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(uint64_t seed) : gen(seed) {}
  double real(double lo = -1.0, double hi = 1.0) {
    return std::uniform_real_distribution<double>(lo, hi)(gen);
  }
  C cplx(double scale = 1.0) { return C(real(), real()) * scale; }
  /// random lambda in Sigma_{theta,r}, |lambda| log-uniform in [lo, hi]
  C sector_lambda(const ModelParams& p, double lo, double hi) {
    const double m = std::exp(real(std::log(lo), std::log(hi)));
    const double cap = kPi - p.theta;
    const double arg = real(-0.98 * cap, 0.98 * cap);
    return std::polar(m, arg);
  }
  VecR xi(int n, double scale = 1.0) {
    VecR v(n);
    for (int i = 0; i < n; ++i) v[i] = real() * scale;
    return v;
  }
  BoundaryModeData boundary_data(int N) {
    BoundaryModeData d;
    d.h_hat = VecC(N);
    for (int i = 0; i < N; ++i) d.h_hat[i] = cplx();
    d.h_hat[N - 1] = C(0.0);
    MatC H(N, N);
    for (int j = 0; j < N; ++j)
      for (int k = 0; k < N; ++k) H(j, k) = cplx();
    d.H_hat = make_traceless_symmetric(H);
    return d;
  }
};

}  // namespace hsbe::testing
