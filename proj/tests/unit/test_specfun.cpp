#include "lovelab/errors.hpp"
#include "lovelab/specfun.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace lovelab;
using namespace lovelab::specfun;
using doctest::Approx;

namespace {
constexpr double pi = std::numbers::pi;
double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }
}  // namespace

TEST_CASE("elliptic degenerate and special moduli") {
  auto p = elliptic_KE(0.0);
  CHECK(p.K == Approx(pi / 2).epsilon(1e-15));
  CHECK(p.E == Approx(pi / 2).epsilon(1e-15));
  CHECK(elliptic_E(1.0) == 1.0);
  // K(1/sqrt2) = Gamma(1/4)^2 / (4 sqrt(pi))
  double lemniscate = std::pow(std::tgamma(0.25), 2) / (4 * std::sqrt(pi));
  CHECK(rel(elliptic_KE(1 / std::sqrt(2.0)).K, lemniscate) < 1e-14);
  CHECK(rel(elliptic_KE(1 / std::sqrt(2.0)).K, 1.854074677301372) < 1e-14);
}

TEST_CASE("elliptic against 30-digit reference values") {
  struct Ref {
    double k, K, E;
  };
  const Ref refs[] = {{0.05, 1.57177945748329452873, 1.56981411841638802543},
                      {0.3, 1.60804861993051279981, 1.53483346492324904300},
                      {0.7, 1.84569399837472346420, 1.35566113557195549651},
                      {0.95, 2.59001123087450106902, 1.10272164825416362332},
                      {0.999, 4.49559639584215089837, 1.00399440996550777048}};
  for (auto& r : refs) {
    auto p = elliptic_KE(r.k);
    CHECK(rel(p.K, r.K) < 1e-14);
    CHECK(rel(p.E, r.E) < 1e-14);
    CHECK(p.K >= pi / 2);
    CHECK(p.E <= pi / 2);
  }
}

TEST_CASE("elliptic errors") {
  CHECK_THROWS_AS(elliptic_KE(1.0), PoleError);
  CHECK_THROWS_AS(elliptic_KE(-0.1), DomainError);
  CHECK_THROWS_AS(elliptic_KE(1.1), DomainError);
  CHECK_THROWS_AS(elliptic_E(1.5), DomainError);
}

TEST_CASE("complement modulus keeps precision near k = 1") {
  double kp = 1e-9;
  auto m = Modulus::from_complement(kp);
  auto p = elliptic_KE(m);
  // K ~ log(4/k') + (k'^2/4)(log(4/k') - 1)
  CHECK(rel(p.K, std::log(4 / kp)) < 1e-14);
  CHECK(p.E == Approx(1.0).epsilon(1e-15));
}

TEST_CASE("Legendre relation") {
  for (int i = 1; i < 20; ++i) {
    double k = i / 20.0, kp = std::sqrt(1 - k * k);
    auto a = elliptic_KE(k), b = elliptic_KE(kp);
    CHECK(std::abs(a.E * b.K + b.E * a.K - a.K * b.K - pi / 2) < 1e-12);
  }
}

TEST_CASE("Landen transformation") {
  // E(2 sqrt r/(1+r)) = (2E(r) - (1 - r^2) K(r)) / (1 + r), K(2 sqrt r/(1+r)) = (1 + r) K(r)
  for (double r : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    auto base = elliptic_KE(r);
    auto up = elliptic_KE(2 * std::sqrt(r) / (1 + r));
    CHECK(std::abs(up.K - (1 + r) * base.K) < 1e-12 * up.K);
    CHECK(std::abs(up.E - (2 * base.E - (1 - r * r) * base.K) / (1 + r)) < 1e-12);
    // the (2 - r^2) variant is off by r^2 K/(1+r)
    CHECK(std::abs(up.E - (2 * base.E - (2 - r * r) * base.K) / (1 + r)) > 1e-3);
  }
}

TEST_CASE("dK/dr") {
  double h = 1e-5;
  double fd = (elliptic_KE(0.5 + h).K - elliptic_KE(0.5 - h).K) / (2 * h);
  CHECK(std::abs(elliptic_K_derivative(0.5) - fd) < 1e-8);
  double r = 1e-3;
  CHECK(elliptic_K_derivative(r) == Approx(pi / 4 * r).epsilon(1e-5));
  CHECK(elliptic_K_derivative(0.9) > elliptic_K_derivative(0.5));
  CHECK(elliptic_K_derivative(0.9) > 0);
  CHECK_THROWS_AS(elliptic_K_derivative(0.0), DomainError);
  CHECK_THROWS_AS(elliptic_K_derivative(1.0), DomainError);
}

TEST_CASE("scaled Bessel functions") {
  using enum BesselKind;
  double x0 = 1e-4;
  CHECK(bessel_scaled(I2, x0) == Approx(x0 * x0 / 8 * std::exp(-x0)).epsilon(1e-8));
  CHECK(bessel_scaled(K1, 1.0) == Approx(1.636153486).epsilon(1e-9));
  CHECK(rel(bessel_scaled(K1, 1.0), std::exp(1.0) * std::cyl_bessel_k(1.0, 1.0)) < 1e-13);
  for (double x : {0.5, 3.0, 20.0}) {
    CHECK(rel(bessel_scaled(I1, x), std::exp(-x) * std::cyl_bessel_i(1.0, x)) < 1e-13);
    CHECK(rel(bessel_scaled(I2, x), std::exp(-x) * std::cyl_bessel_i(2.0, x)) < 1e-13);
  }
  // I2 K1 ~ (1/2x)(1 - 3/(2x) + ...): leading order is 3% off at x = 50
  double x = 50;
  CHECK(rel(bessel_scaled(I2, x) * bessel_scaled(K1, x), (1 - 1.5 / x) / (2 * x)) < 1e-3);
  CHECK(rel(bessel_scaled(I2, 200.0) * bessel_scaled(K1, 200.0), 1 / 400.0) < 0.01);
  for (double y = 1e-8; y <= 700 * pi / 1e-4; y *= 3.7)
    for (auto kind : {I1, I2, K1}) {
      double v = bessel_scaled(kind, y);
      CHECK((std::isfinite(v) && v > 0));
    }
  CHECK_THROWS_AS(bessel_scaled(K1, 0.0), DomainError);
  CHECK_THROWS_AS(bessel_scaled(I1, -1.0), DomainError);
}

TEST_CASE("Lambert W principal branch") {
  CHECK(lambert_w(0.0) == 0.0);
  CHECK(lambert_w(std::exp(1.0)) == Approx(1.0).epsilon(1e-15));
  CHECK(lambert_w(-std::exp(-1.0)) == Approx(-1.0).epsilon(1e-7));
  for (double x : {-0.36, -0.2, -1e-5, 1e-3, 0.5, 3.0, 100.0, 1e10, 1e200}) {
    double w = lambert_w(x);
    CHECK(std::abs(w * std::exp(w) - x) <= 1e-13 * std::max(1.0, std::abs(x)));
  }
  CHECK_THROWS_AS(lambert_w(-0.5), BranchError);
}

TEST_CASE("Lambert W upper branch cut") {
  auto w = lambert_w_upper_cut(-10.0);
  CHECK(w.imag() > 0);
  CHECK(w.imag() < pi);
  CHECK(std::abs(w * std::exp(w) + 10.0) < 1e-12 * 10);

  auto near = lambert_w_upper_cut(-std::exp(-1.0) - 1e-12);
  CHECK(std::abs(near + 1.0) < 1e-5);
  CHECK(near.imag() > 0);

  for (double x : {-0.37, -0.5, -1.0, -3.0, -1e3, -1e8, -1e100}) {
    auto v = lambert_w_upper_cut(x);
    CHECK(std::abs(v * std::exp(v) - x) <= 1e-13 * std::max(1.0, std::abs(x)));
    CHECK((v.imag() > 0 && v.imag() < pi));
  }

  double big = -1e12;
  ComplexValue L1 = std::log(std::abs(big)) + ComplexValue(0, pi);
  ComplexValue seed = L1 - std::log(L1) + std::log(L1) / L1;
  CHECK(std::abs(lambert_w_upper_cut(big) - seed) / std::abs(seed) < 1e-3);

  CHECK_THROWS_AS(lambert_w_upper_cut(-0.3), BranchError);
  CHECK_THROWS_AS(lambert_w_upper_cut(1.0), BranchError);
}

TEST_CASE("shifted and log parametrisations agree with the direct one") {
  for (double x : {-0.5, -2.0, -40.0}) {
    auto direct = lambert_w_upper_cut(x);
    auto shifted = lambert_w_upper_cut_shifted(std::log(-x) + 1);
    CHECK(std::abs(shifted.w - direct) < 1e-13 * std::abs(direct));
    CHECK(std::abs(shifted.w_plus_one - (direct + 1.0)) < 1e-13 * std::max(1.0, std::abs(direct)));
  }
  // near the branch point w + 1 = p - p^2/3 + 11 p^3/72 + ..., p = i sqrt(2 (e^s - 1))
  double s = 1e-10;
  ComplexValue p(0, std::sqrt(2 * std::expm1(s)));
  auto u = lambert_w_upper_cut_shifted(s);
  CHECK(std::abs(u.w_plus_one - (p - p * p / 3.0 + 11.0 * p * p * p / 72.0)) < 1e-14 * std::abs(p));
}

TEST_CASE("polylog") {
  for (int n = 1; n <= 6; ++n) CHECK(polylog(n, 0.0) == 0.0);
  CHECK(polylog(1, 0.5) == Approx(std::log(2.0)).epsilon(1e-15));
  CHECK(std::abs(polylog(2, 1.0) - pi * pi / 6) < 1e-14);
  CHECK(std::abs(polylog(4, 1.0) - std::pow(pi, 4) / 90) < 1e-14);
  CHECK(std::abs(polylog(2, 0.5) - (pi * pi / 12 - std::pow(std::log(2.0), 2) / 2)) < 1e-14);
  CHECK(std::abs(polylog(3, 0.5) - (7 * std::riemann_zeta(3.0) / 8 - pi * pi * std::log(2.0) / 12 +
                                    std::pow(std::log(2.0), 3) / 6)) < 1e-14);
  CHECK(std::abs(polylog(2, 0.999) - 1.6370226052761177) < 1e-13);
  CHECK_THROWS_AS(polylog(1, 1.0), DivergenceError);
  CHECK_THROWS_AS(polylog(0, 0.5), DomainError);
  CHECK_THROWS_AS(polylog(2, 1.5), DomainError);
}

TEST_CASE("polylog derivative relation") {
  double h = 1e-6;
  for (int n = 1; n <= 3; ++n)
    for (double x : {0.3, 0.7}) {
      double d = (polylog(n + 1, x + h) - polylog(n + 1, x - h)) / (2 * h);
      CHECK(std::abs(d * x - polylog(n, x)) < 1e-6);
    }
}

TEST_CASE("polylog of an exponential") {
  for (int n = 1; n <= 7; ++n)
    for (double mu : {-5.0, -1.0, -0.7, -0.3, -1e-3}) {
      if (n == 1 && mu > -1e-2) continue;
      CHECK(std::abs(polylog_exp(n, mu) - polylog(n, std::exp(mu))) < 2e-14 * std::max(1.0, std::abs(polylog(n, std::exp(mu)))));
    }
  // Li_1(e^mu) = -log(1 - e^mu)
  CHECK(rel(polylog_exp(1, -1e-8), -std::log(-std::expm1(-1e-8))) < 1e-14);
}
