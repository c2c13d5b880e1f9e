#include "lovelab/asymptotics.hpp"
#include "lovelab/errors.hpp"

#include <cmath>
#include <numbers>

namespace lovelab::asymptotics {

namespace {
constexpr double pi = std::numbers::pi;
}

GroundStateAssembly assemble_ground_state(double gamma) {
  if (!(gamma > 0.0 && gamma <= 0.1)) throw ParameterError("assemble_ground_state needs 0 < gamma <= 0.1");
  using S = AsymptoticSeries;
  const Rational cap(2);
  const auto V = Variable::gamma;
  auto a = inversion_coefficients();

  // eps = a0 gamma^{1/2} (1 + u)
  S u(V, cap);
  u.add_term(Rational(1, 2), 1, -a.a1 / a.a0);
  u.add_term(Rational(1, 2), 0, a.a2 / a.a0);
  u.add_term(Rational(1), 2, a.a3 / a.a0);
  u.add_term(Rational(1), 1, -a.a4 / a.a0);
  u.add_term(Rational(1), 0, a.a5 / a.a0);

  // log eps = log a0 - L/2 + log(1 + u), L = log(1/gamma)
  S log_eps = S::constant(V, cap, std::log(a.a0)) + S::monomial(V, cap, Rational(0), 1, -0.5) + S::log1p(u);

  const double alpha = -1.0 / (2.0 * pi * pi);
  const double beta = (std::log(8.0 * pi) - 3.0) / (pi * pi);
  const double b = bracket_exact();

  // e = gamma^2 / (8 eps^2) - gamma^3 I(eps) / (32 eps^3),
  // I = 1/(8 eps) + 2/(3 pi) + eps (alpha log^2 eps + beta log eps + b)
  S g1 = S::monomial(V, cap, Rational(1), 0, 1.0);
  S g32 = S::monomial(V, cap, Rational(3, 2), 0, 1.0);
  S g2 = S::monomial(V, cap, Rational(2), 0, 1.0);
  S inner = log_eps * log_eps * alpha + log_eps * beta + S::constant(V, cap, b);
  S e = g1 * S::pow1p(u, -2.0) * (1.0 / (8.0 * a.a0 * a.a0)) -
        g1 * S::pow1p(u, -4.0) * (1.0 / (32.0 * 8.0 * std::pow(a.a0, 4))) -
        g32 * S::pow1p(u, -3.0) * (2.0 / (3.0 * pi) / (32.0 * std::pow(a.a0, 3))) -
        g2 * S::pow1p(u, -2.0) * inner * (1.0 / (32.0 * a.a0 * a.a0));

  GroundStateAssembly out{e, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0};
  out.value = e.evaluate(gamma);
  double eps = epsilon_of_gamma(gamma);
  if (eps <= 0.05) {
    auto tm = third_moment_expansion(eps);
    out.direct = gamma * gamma * gamma * (tm.c1 - 2.0 * tm.total) / (64.0 * eps * eps * eps);
  } else {
    out.direct = NAN;
  }
  out.coeff_gamma = e.coefficient(Rational(1), 0);
  out.coeff_gamma32 = e.coefficient(Rational(3, 2), 0);
  out.coeff_gamma2 = e.coefficient(Rational(2), 0);
  // log gamma = -L
  out.coeff_gamma2_log = -e.coefficient(Rational(2), 1);
  out.coeff_gamma2_log2 = e.coefficient(Rational(2), 2);
  return out;
}

}  // namespace lovelab::asymptotics
