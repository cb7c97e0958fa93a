#include "hsbe/scalar_functions.hpp"

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

ModeContext mode_of(const ModelParams& p, C lam, double A) {
  VecR xi(1);
  xi[0] = A;
  return wave_numbers(p, lam, xi);
}

}  // namespace

TEST_SUITE_BEGIN("scalar_functions");

TEST_CASE("calC: stable kernel against frozen 40-digit references") {
  auto p = params(1.0, 1.0);
  struct Ref {
    C lam;
    double A;
    C calC;
  };
  const Ref refs[] = {
      {C(3.0, 4.0), 10.0, C(-1.1310999354637644, 0.15223830197160438)},
      {C(2.0, -7.0), 1000.0, C(-1.0377367334920984, -0.13207404638602149)},
      {C(50.0, 20.0), 0.3, C(-2.0686099544288432, 0.0018100830163842949)},
  };
  for (const auto& r : refs) {
    auto m = mode_of(p, r.lam, r.A);
    CHECK(rel_err(eval_calC(p, m), r.calC) < 1e-12);
  }
}

TEST_CASE("calC: naive and rearranged forms agree away from eta") {
  auto p = params(1.0, 1.0);
  auto m = mode_of(p, C(2.0, 2.0), 1.0);
  CHECK(rel_err(eval_calC(p, m), eval_calC_naive(p, m)) < 1e-8);

  Rng rng(41);
  double worst = 0.0;
  for (int it = 0; it < 500; ++it) {
    const C lam = rng.sector_lambda(p, 1.0, 1e4);
    const double eta = eta_point(p);
    if (std::abs(lam - eta) < 0.05 * (1.0 + eta)) continue;
    const double A = std::exp(rng.real(std::log(1e-2), std::log(30.0)));
    auto m2 = mode_of(p, lam, A);
    worst = std::max(worst, rel_err(eval_calC(p, m2), eval_calC_naive(p, m2)));
  }
  CHECK(worst < 1e-8);
}

TEST_CASE("calC: divided-difference route agrees near and at eta") {
  auto p = params(1.0, std::sqrt(2.0));
  const double eta = eta_point(p);  // = 1
  // near eta the stable kernel must match I1 + I2dd-over-lambda
  for (double eps : {1e-2, 1e-5, 1e-9}) {
    auto m = mode_of(p, C(eta * (1.0 + eps)), 0.7);
    const C via_dd = (eval_I1(p, m) + eval_I2_over_diff(p, m)) / m.lambda;
    CHECK(rel_err(eval_calC(p, m), via_dd) < 1e-9);
  }
  // the exact-eta value matches the limit of the regular branch
  const C tilde = eval_calC_degenerate(p, 0.7);
  auto m = mode_of(p, C(eta * (1.0 + 1e-7)), 0.7);
  CHECK(rel_err(eval_calC(p, m), tilde) < 1e-5);
}

TEST_CASE("calC tail: F_a approaches the Laurent limit") {
  auto p = params(1.0, 1.0);
  // |lambda| = 1e8, t = A/sqrt(lambda+a) = 1e3
  const C lam = std::polar(1e8, 0.9);
  const C t_target = 1e3 * std::sqrt(lam + p.a) / std::abs(std::sqrt(lam + p.a));
  (void)t_target;
  const double A = std::abs(std::sqrt(lam + p.a)) * 1e3;
  auto m = mode_of(p, lam, A);
  auto n = normalized_roots(p, lam);
  const C fa = eval_calC(p, m) * m.lambda / (p.beta * (lam + p.a));
  CHECK(std::abs(fa - fa_tail_limit(n.z1t, n.z2t)) < 1e-2 * std::abs(fa));
}

TEST_CASE("F_a limit identity: Ftilde(z-, z+, t) = F_0(1, t)") {
  auto p = params(1.0, 1.0);
  auto n = normalized_roots(p, C(1.0));
  // left side: the limit roots; right side: a = 0, lambda = 1 where
  // z~_1, z~_2 are exactly the limit values
  ModelParams p0 = p;
  p0.a = 0.0;
  auto n0 = normalized_roots(p0, C(1.0));
  CHECK(rel_err(n0.z1t, n.z_minus) < 1e-14);
  CHECK(rel_err(n0.z2t, n.z_plus) < 1e-14);
  for (double t : {0.1, 1.0, 7.0}) {
    CHECK(rel_err(fa_value(n.z_minus, n.z_plus, C(t)),
                  fa_value(n0.z1t, n0.z2t, C(t))) < 1e-13);
  }
}

TEST_CASE("calA: defining form at A = 0 and dual-route agreement") {
  auto p = params(1.0, 0.0);
  auto m = mode_of(p, C(2.0), 0.0);
  const double s3 = std::sqrt(3.0), s2 = std::sqrt(2.0);
  CHECK(rel_err(eval_calA(m), C(3.0 * s3 * (s3 + s2))) < 1e-14);

  auto p1 = params(1.0, 1.0);
  Rng rng(43);
  double worst = 0.0;
  for (int it = 0; it < 1000; ++it) {
    const C lam = rng.sector_lambda(p1, 1.0, 1e4);
    const double A = std::exp(rng.real(std::log(1e-2), std::log(30.0)));
    auto m1 = mode_of(p1, lam, A);
    worst = std::max(worst, rel_err(eval_calA(m1), eval_calA_stable(p1, m1)));
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("calA tilde at eta is positive for real arguments") {
  auto p = params(1.0, std::sqrt(2.0));
  const double eta = eta_point(p);
  for (double A : {0.0, 0.3, 2.0, 50.0}) {
    VecR xi(1);
    xi[0] = A;
    auto m = wave_numbers(p, C(eta), xi);
    const C B = m.B_a;
    const double b2 = p.beta * p.beta / 2.0;
    const C L0 = std::sqrt(C(A * A) + (2.0 * eta + p.a * (1.0 + b2)) / (2.0 * (1.0 + b2)));
    const C tilde = 2.0 * B * B * B * L0 - A * A * B * B - A * A * L0 * L0;
    CHECK(tilde.real() > 0.0);
    CHECK(std::abs(tilde.imag()) < 1e-12 * std::abs(tilde));
  }
}

TEST_CASE("G_a tail: G_a = 2 t^2 + o(t)") {
  auto p = params(1.0, 1.0);
  Rng rng(47);
  for (double t : {1e2, 1e3}) {
    double worst = 0.0;
    for (int it = 0; it < 100; ++it) {
      const C lam = rng.sector_lambda(p, 1.0, 1e6);
      auto n = normalized_roots(p, lam);
      const C ga = ga_value(n.z1t, n.z2t, C(t));
      worst = std::max(worst, std::abs(ga / (2.0 * t * t) - 1.0));
    }
    CHECK(worst < 0.1);
  }
}

TEST_CASE("E_h: stable kernel vs divided-difference route and bound") {
  auto p = params(1.0, 1.0);
  Rng rng(53);
  double worst = 0.0, bound = 0.0;
  for (int it = 0; it < 500; ++it) {
    const C lam = rng.sector_lambda(p, 1.0, 1e5);
    const double A = std::exp(rng.real(std::log(1e-2), std::log(1e3)));
    auto m = mode_of(p, lam, A);
    const C stable = eval_Eh(p, m);
    if (A < 50.0) worst = std::max(worst, rel_err(stable, eval_Eh_naive(p, m)));
    bound = std::max(bound,
                     std::abs(stable) / (A + std::sqrt(std::abs(lam)) + 1.0 + A));
  }
  CHECK(worst < 1e-9);
  CHECK(bound < 50.0);
}

TEST_CASE("E_h equals hbar/(L2-L1) against the raw two-bracket form") {
  auto p = params(1.0, 0.8);
  auto m = mode_of(p, C(4.0, 3.0), 1.3);
  const C raw = eval_hbar_scalar(p, m) / (m.L2 - m.L1);
  CHECK(rel_err(raw, eval_Eh(p, m)) < 1e-10);
}

TEST_CASE("determinant criterion matches the closed form") {
  auto p = params(1.0, 1.0);
  Rng rng(59);
  for (int N : {2, 3}) {
    for (int it = 0; it < 50; ++it) {
      const C lam = rng.sector_lambda(p, 2.0, 1e3);
      const double eta = eta_point(p);
      if (std::abs(lam - eta) < 0.05 * (1.0 + eta)) continue;
      VecR xi = rng.xi(N - 1, 2.0);
      if (xi.norm() < 0.1) xi[0] += 0.5;
      auto m = wave_numbers(p, lam, xi);
      auto d = det_criterion(p, m);
      CHECK(std::abs(d.det_lu) > 0.0);
      CHECK(rel_err(d.det_lu, d.det_closed_form) < 1e-8);
    }
  }
}

TEST_CASE("beta = 0 calls reject") {
  auto p = params(1.0, 0.0);
  auto m = mode_of(p, C(2.0), 1.0);
  CHECK_THROWS_AS(eval_calC(p, m), BetaZero);
  CHECK_THROWS_AS(eval_calC_degenerate(p, 1.0), BetaZero);
}

TEST_SUITE_END();
