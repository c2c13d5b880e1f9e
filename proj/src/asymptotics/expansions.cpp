#include "lovelab/asymptotics.hpp"
#include "lovelab/errors.hpp"

#include "elliptic_combo.hpp"

#include <cmath>
#include <numbers>

namespace lovelab::asymptotics {

namespace {
constexpr double pi = std::numbers::pi;
}

namespace detail {

double evaluate(const EllipticCombo& w, specfun::Modulus m) {
  if (m.k < 0.3) {
    // K = (pi/2) sum c_n k^{2n}, E = (pi/2) sum e_n k^{2n}, e_n = -c_n/(2n-1)
    double k2 = m.k * m.k, kp = 1.0, sum = 0.0, c_prev = 0.0, e_prev = 0.0, c = 1.0;
    for (int n = 0; n < 80; ++n) {
      if (n > 0) c *= ((2.0 * n - 1.0) / (2.0 * n)) * ((2.0 * n - 1.0) / (2.0 * n));
      double e = n == 0 ? 1.0 : -c / (2.0 * n - 1.0);
      double coef = w.a * c + w.b * e + w.c * (c - c_prev) + w.d * (e - e_prev);
      sum += coef * kp;
      if (n > 4 && std::abs(c * kp) < 1e-19) break;
      kp *= k2;
      c_prev = c;
      e_prev = e;
    }
    return 0.5 * pi * sum;
  }
  auto p = specfun::elliptic_KE(m);
  double kp2 = m.kp * m.kp;
  return w.a * p.K + w.b * p.E + kp2 * (w.c * p.K + w.d * p.E);
}

specfun::Modulus inverse_modulus(double s) {
  double r = 1.0 + s;
  return {1.0 / r, std::sqrt(s * (2.0 + s)) / r};
}

}  // namespace detail

double energy_series(EnergySeries which, double gamma) {
  if (!(gamma >= 0.0)) throw DomainError("energy series needs gamma >= 0");
  double g32 = gamma * std::sqrt(gamma);
  double bog = gamma - 4.0 / (3.0 * pi) * g32;
  switch (which) {
    case EnergySeries::bogoliubov: return bog;
    case EnergySeries::takahashi: return bog + (1.0 / 6.0 - 1.0 / (pi * pi)) * gamma * gamma;
    case EnergySeries::kaminaka_wadati: return bog + (1.0 / 8.0 - 1.0 / (pi * pi)) * gamma * gamma;
  }
  return bog;
}

double capacitance_series(CapacitanceSeries which, double kappa) {
  if (!(kappa > 0.0)) throw DomainError("capacitance series needs kappa > 0");
  double c = 1.0 / (4.0 * kappa) + std::log(1.0 / kappa) / (4.0 * pi) + (std::log(16.0 * pi) - 1.0) / (4.0 * pi);
  if (which == CapacitanceSeries::extended) {
    double l = std::log(kappa / (16.0 * pi));
    c += kappa / (16.0 * pi * pi) * (l * l - 2.0);
  }
  return c;
}

double gamma0_exact() { return (1.0 + std::log(pi)) / pi; }

double gamma1_exact() {
  double lp = std::log(pi);
  return pi / 6.0 - 1.0 / pi - lp / pi - lp * lp / (2.0 * pi);
}

double gamma2_exact() { return -2.0 / pi - pi / 4.0; }

double gamma2_tilde_exact() {
  double l8 = std::log(8.0);
  return gamma2_exact() - l8 * l8 / (4.0 * pi) + 2.0 / pi * l8;
}

double integral4_exact() { return -2.0 / pi - pi / 2.0 + 2.0 * std::log(8.0) / pi; }

double bracket_exact() {
  double l = std::log(8.0 * pi);
  return -1.0 / 3.0 - 1.0 / (2.0 * pi * pi) + 3.0 / (pi * pi) * l - l * l / (2.0 * pi * pi);
}

double bracket_from_constants(double g0, double g1, double g2) {
  double l8 = std::log(8.0);
  return 2.0 / pi * ((2.0 - l8 / 2.0) * g0 + g1 / 2.0 + g2 + 2.0 / pi * l8 - l8 * l8 / (4.0 * pi)) +
         1.0 / (2.0 * pi * pi);
}

InversionCoefficients inversion_coefficients() {
  double l = std::log(32.0 * pi);
  return {0.25,
          -1.0 / (32.0 * pi),
          (l - 1.0) / (16.0 * pi),
          1.0 / (256.0 * pi * pi),
          (1.0 - l) / (64.0 * pi * pi),
          (1.0 - 4.0 * l + 2.0 * l * l) / (128.0 * pi * pi)};
}

double epsilon_of_gamma(double gamma) {
  if (!(gamma > 0.0)) throw DomainError("epsilon_of_gamma needs gamma > 0");
  auto a = inversion_coefficients();
  double s = std::sqrt(gamma), l = std::log(gamma);
  return a.a0 * s + a.a1 * gamma * l + a.a2 * gamma + gamma * s * (a.a3 * l * l + a.a4 * l + a.a5);
}

AsymptoticSeries epsilon_series() {
  auto a = inversion_coefficients();
  AsymptoticSeries s(Variable::gamma, Rational(3, 2));
  // log gamma = -log(1/gamma)
  s.add_term(Rational(1, 2), 0, a.a0);
  s.add_term(Rational(1), 1, -a.a1);
  s.add_term(Rational(1), 0, a.a2);
  s.add_term(Rational(3, 2), 2, a.a3);
  s.add_term(Rational(3, 2), 1, -a.a4);
  s.add_term(Rational(3, 2), 0, a.a5);
  return s;
}

double gamma_of_epsilon(double epsilon) {
  if (!(epsilon > 0.0)) throw DomainError("gamma_of_epsilon needs eps > 0");
  return 2.0 * epsilon / capacitance_series(CapacitanceSeries::extended, 2.0 * epsilon);
}

}  // namespace lovelab::asymptotics
