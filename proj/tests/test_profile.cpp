#include "hsbe/profile.hpp"

#include "test_helpers.hpp"

using namespace hsbe;
using hsbe::testing::Rng;
using hsbe::testing::rel_err;

namespace {

ModelParams params(double a, double beta) {
  ModelParams p;
  p.a = a;
  p.beta = beta;
  p.theta = kPi / 3.0;
  p.r = 1.0;
  return p;
}

}  // namespace

TEST_SUITE_BEGIN("profile");

TEST_CASE("divided-difference kernel against frozen 40-digit references") {
  struct Ref {
    C g1, g2;
    double t;
    C val;
  };
  const Ref refs[] = {
      {C(2.0, 0.0), C(1.0, 0.0), 0.0, C(0.0, 0.0)},
      {C(1.0, 0.0), C(1.0, 0.0), 1.0, C(-0.36787944117144232, 0.0)},
      {C(2.0, 0.0), C(1.0, 0.0), 1.0, C(-0.23254415793482963, 0.0)},
      {C(1.5, 2.0), C(1.5, 2.0), 0.69999999999999996,
       C(-0.041634543586555104, 0.24139224226205029)},
      {C(1.5, 2.0), C(1.5000000010000001, 1.9999999989999999),
       0.69999999999999996, C(-0.041634543656470304, 0.24139224216299091)},
      {C(3.0, -1.0), C(3.0, -0.99999000000000005), 2.5,
       C(0.0011077396859667926, -0.00082752781897107561)},
      {C(0.5, 0.10000000000000001), C(2.5, -0.40000000000000002), 3.0,
       C(-0.10803656998889248, 0.0062183411479054416)},
      {C(4.0, 1.0), C(4.0000999999999998, 1.0), 10.0,
       C(3.5628913584591334e-17, -2.3100391893173931e-17)},
  };
  for (const auto& r : refs) {
    const C v = eval_M(r.g1, r.g2, r.t);
    if (std::abs(r.val) == 0.0) {
      CHECK(std::abs(v) < 1e-15);
    } else {
      CHECK(rel_err(v, r.val) < 1e-12);
    }
  }
}

TEST_CASE("zero amplitudes give a zero profile") {
  auto p = params(1.0, 1.0);
  VecR xi(1);
  xi[0] = 1.0;
  auto m = wave_numbers(p, C(0.0, 4.0), xi);
  BoundaryModeData d;
  d.h_hat = VecC::Zero(2);
  d.H_hat = MatC::Zero(2, 2);
  auto s = assemble_amplitudes(p, m, d);
  for (double x : {0.0, 0.5, 3.0}) {
    auto v = eval_profile(s, x, 3);
    CHECK(v.u[0].norm() < 1e-14);
    CHECK(std::abs(v.p[0]) < 1e-14);
    CHECK(v.Q[0].norm() < 1e-14);
  }
}

TEST_CASE("boundary traces reproduce the data (1000 random modes)") {
  auto p = params(1.0, 1.0);
  Rng rng(83);
  double worst = 0.0;
  for (int it = 0; it < 1000; ++it) {
    const int N = it % 2 == 0 ? 2 : 3;
    const C lam = rng.sector_lambda(p, 1.5, 1e4);
    const double eta = eta_point(p);
    if (std::abs(lam - eta) < 0.05 * (1.0 + eta)) continue;
    VecR xi = rng.xi(N - 1, 2.0);
    auto m = wave_numbers(p, lam, xi);
    auto data = rng.boundary_data(N);
    auto s = assemble_amplitudes(p, m, data);
    auto v = eval_profile(s, 0.0, 1);
    worst = std::max(worst, (v.u[0] - data.h_hat).norm() / std::max(1.0, data.norm()));
    worst = std::max(worst, (v.Q[1] - data.H_hat).norm() / std::max(1.0, data.norm()));
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("analytic x-derivatives match central differences at O(h^2)") {
  auto p = params(1.0, 0.8);
  Rng rng(89);
  VecR xi(1);
  xi[0] = 1.2;
  auto m = wave_numbers(p, C(3.0, 2.0), xi);
  auto s = assemble_amplitudes(p, m, rng.boundary_data(2));
  const double x0 = 0.8;
  std::vector<double> errs;
  for (double h : {1e-2, 1e-3}) {
    auto vp = eval_profile(s, x0 + h, 2);
    auto vm = eval_profile(s, x0 - h, 2);
    auto v0 = eval_profile(s, x0, 3);
    double e = 0.0;
    for (int d = 0; d <= 2; ++d) {
      e = std::max(e, (0.5 / h * (vp.u[d] - vm.u[d]) - v0.u[d + 1]).norm());
      e = std::max(e, std::abs(0.5 / h * (vp.p[d] - vm.p[d]) - v0.p[d + 1]));
      e = std::max(e, (0.5 / h * (vp.Q[d] - vm.Q[d]) - v0.Q[d + 1]).norm());
    }
    errs.push_back(e);
  }
  const double slope = std::log10(errs[0] / errs[1]);
  CHECK(slope > 1.8);
  CHECK(slope < 2.2);
}

TEST_CASE("assembled modes zero the Fourier system") {
  auto p = params(1.0, 1.0);
  Rng rng(97);
  double worst = 0.0;
  for (int it = 0; it < 100; ++it) {
    const int N = it % 2 == 0 ? 2 : 3;
    const C lam = rng.sector_lambda(p, 1.5, 1e4);
    const double eta = eta_point(p);
    if (std::abs(lam - eta) < 0.05 * (1.0 + eta)) continue;
    VecR xi = rng.xi(N - 1, 2.0);
    auto m = wave_numbers(p, lam, xi);
    auto data = rng.boundary_data(N);
    auto s = assemble_amplitudes(p, m, data);
    const VecR grid = graded_grid(default_x_max(s), 64);
    worst = std::max(worst, mode_residual(p, s, data, grid).max());
  }
  CHECK(worst < 1e-9);
}

TEST_CASE("a 1% pressure perturbation is visible in the momentum residual") {
  auto p = params(1.0, 1.0);
  Rng rng(101);
  VecR xi(1);
  xi[0] = 1.0;
  auto m = wave_numbers(p, C(2.0, 2.0), xi);
  auto data = rng.boundary_data(2);
  auto s = assemble_amplitudes(p, m, data);
  s.Cp *= 1.01;
  const VecR grid = graded_grid(default_x_max(s), 64);
  auto r = mode_residual(p, s, data, grid);
  CHECK(std::max(r.momentum_tangential, r.momentum_normal) > 1e-4);
}

TEST_CASE("beta = 0: heat-profile Q zeroes the decoupled system") {
  auto p = params(1.0, 0.0);
  Rng rng(103);
  for (int it = 0; it < 20; ++it) {
    VecR xi(1);
    xi[0] = it % 4 == 0 ? 0.0 : rng.real(-2.0, 2.0);
    auto m = wave_numbers(p, rng.sector_lambda(p, 1.5, 100.0), xi);
    auto data = rng.boundary_data(2);
    auto s = assemble_amplitudes(p, m, data);
    const VecR grid = graded_grid(default_x_max(s), 64);
    auto r = mode_residual(p, s, data, grid);
    CHECK(r.q_equation < 1e-9);
    CHECK(r.max() < 1e-9);
  }
}

TEST_CASE("zero tangential mode solves the 1-D reduction") {
  auto p = params(1.0, 1.0);
  Rng rng(107);
  for (int N : {2, 3}) {
    VecR xi = VecR::Zero(N - 1);
    auto m = wave_numbers(p, C(1.0, 3.0), xi);
    auto data = rng.boundary_data(N);
    auto s = assemble_amplitudes(p, m, data);
    CHECK(std::abs(s.Cp) == 0.0);
    const VecR grid = graded_grid(default_x_max(s), 64);
    CHECK(mode_residual(p, s, data, grid).max() < 1e-9);
  }
}

TEST_CASE("divergence-free and Q structure pointwise") {
  auto p = params(1.0, 1.0);
  Rng rng(109);
  VecR xi = rng.xi(2, 1.5);
  auto m = wave_numbers(p, C(0.0, 5.0), xi);
  auto data = rng.boundary_data(3);
  auto s = assemble_amplitudes(p, m, data);
  const C i(0.0, 1.0);
  for (double x : {0.0, 0.3, 1.7, 6.0}) {
    auto v = eval_profile(s, x, 1);
    C div = v.u[1][2];
    for (int k = 0; k < 2; ++k) div += i * xi[k] * v.u[0][k];
    CHECK(std::abs(div) < 1e-10 * std::max(1.0, v.u[0].norm()));
    CHECK((v.Q[0] - v.Q[0].transpose()).norm() < 1e-12);
    CHECK(std::abs(v.Q[0].trace()) < 1e-12 * std::max(1.0, v.Q[0].norm()));
  }
}

TEST_CASE("degenerate consistency: profiles near eta match the tilde branch") {
  auto p = params(1.0, std::sqrt(2.0));
  const double eta = eta_point(p);
  Rng rng(113);
  VecR xi(1);
  xi[0] = 0.9;
  auto data = rng.boundary_data(2);
  auto tilde = assemble_amplitudes_degenerate(p, xi, data);
  ModeContext m = wave_numbers(p, C(eta * (1.0 + 1e-3)), xi);
  m.degenerate = false;
  auto s = assemble_amplitudes(p, m, data);
  const double xmax = default_x_max(tilde);
  double worst = 0.0, scale = 0.0;
  for (int i = 0; i <= 64; ++i) {
    const double x = xmax * i / 64.0;
    auto a = eval_profile(s, x, 0);
    auto b = eval_profile(tilde, x, 0);
    worst = std::max({worst, (a.u[0] - b.u[0]).norm(), std::abs(a.p[0] - b.p[0]),
                      (a.Q[0] - b.Q[0]).norm()});
    scale = std::max({scale, a.u[0].norm(), std::abs(a.p[0]), a.Q[0].norm()});
  }
  CHECK(worst < 1e-4 * scale);
}

TEST_CASE("degenerate profiles zero the Fourier system at eta") {
  auto p = params(1.0, std::sqrt(2.0));
  Rng rng(127);
  for (int N : {2, 3}) {
    VecR xi = rng.xi(N - 1, 1.5);
    auto data = rng.boundary_data(N);
    auto s = assemble_amplitudes_degenerate(p, xi, data);
    const VecR grid = graded_grid(default_x_max(s), 64);
    CHECK(mode_residual(p, s, data, grid).max() < 1e-9);
  }
}

TEST_CASE("pressure has exactly two exponential modes") {
  auto p = params(1.0, 1.0);
  Rng rng(131);
  VecR xi(1);
  xi[0] = 1.1;
  auto m = wave_numbers(p, C(2.0, 1.0), xi);
  auto data = rng.boundary_data(2);
  auto s = assemble_amplitudes(p, m, data);
  // on [xmax/2, xmax] the A-mode dominates (A < Re B_a here); the
  // log-derivative of p must approach -A
  const double xmax = default_x_max(s);
  const double h = 1e-4;
  for (double x : {0.5 * xmax, 0.75 * xmax}) {
    const C pm = eval_profile(s, x - h, 0).p[0];
    const C pp = eval_profile(s, x + h, 0).p[0];
    const C p0 = eval_profile(s, x, 0).p[0];
    const C logder = (pp - pm) / (2.0 * h) / p0;
    CHECK(std::abs(logder + C(m.A)) < 1e-3 * (1.0 + m.A));
  }
  // and the two-mode reconstruction from (Cp, D) is exact everywhere
  for (double x : {0.1, 1.0, 4.0}) {
    const C recon = s.Cp * std::exp(-C(m.A) * x) + s.D * std::exp(-m.B_a * x);
    CHECK(rel_err(recon, eval_profile(s, x, 0).p[0]) < 1e-13);
  }
}

TEST_SUITE_END();
