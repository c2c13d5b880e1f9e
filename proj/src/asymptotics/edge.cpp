#include "lovelab/asymptotics.hpp"
#include "lovelab/capacitor2d.hpp"
#include "lovelab/errors.hpp"
#include "lovelab/quadrature.hpp"

#include "elliptic_combo.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace lovelab::asymptotics {

namespace {

constexpr double pi = std::numbers::pi;
const double c0 = 1.0 / (2.0 * pi);
const double c1 = 2.0 / pi - std::log(8.0) / (2.0 * pi);

// Far-field integrand F(r) K3(r) / r^2 at rho = 1/r = 1 - u, minus its
// singular part c0 log u / u + c1 / u.
// small-u expansion, sum_n u^n (a_n + b_n log u + c_n log^2 u)
double subtracted_series(double u) {
  static constexpr double a[4] = {0.19498232560368963454, 0.15796831289977646033, 0.14417561941771520463,
                                  0.13794261381823216047};
  static constexpr double b[4] = {0.54439878677644695663, 0.86772774510894798608, 1.1589833699191287996,
                                  1.4352381883797852674};
  static constexpr double c[4] = {0.079577471545947667884, 0.29841551829730375457, 0.65651414025406826005,
                                  1.1507648424339776035};
  double l = std::log(u), sum = 0.0;
  for (int n = 3; n >= 0; --n) sum = sum * u + a[n] + l * (b[n] + l * c[n]);
  return sum;
}

double subtracted_integrand(double u) {
  if (u < 1e-4) return u > 0.0 ? subtracted_series(u) : 0.0;
  double rho = 1.0 - u, kp2 = u * (2.0 - u);
  specfun::Modulus m{rho, std::sqrt(kp2)};
  double A = detail::evaluate(detail::combo_A, m);
  double B = detail::evaluate(detail::combo_B, m);
  double g = 2.0 * A * B / (pi * rho * rho * rho * kp2);
  return g - c0 * std::log(u) / u - c1 / u;
}

}  // namespace

double subtracted_far_field_integral(double u0, double tol) {
  if (!(u0 >= 0.0 && u0 < 1.0)) throw DomainError("subtracted integral needs 0 <= u0 < 1");
  return quadrature::integrate(subtracted_integrand, u0, 1.0, tol, quadrature::Scheme::tanh_sinh).value;
}

double k2_energy_integral(double epsilon) {
  if (!(epsilon > 0.0 && epsilon <= 0.05)) throw ParameterError("k2_energy_integral needs 0 < eps <= 0.05");
  static const double li2_moment = capacitor2d::phi_prime_polylog_integral(2);
  return -epsilon / (pi * pi) * li2_moment;
}

double default_delta(double epsilon) { return std::max(std::sqrt(0.2 * epsilon), 5.0 * epsilon); }

JSplit j_split(double epsilon, double delta) {
  if (!(epsilon > 0.0 && delta > 0.0)) throw ParameterError("j_split needs positive eps and delta");
  if (epsilon > 0.2 * delta || delta > 0.2)
    throw ParameterError("j_split needs eps/delta <= 0.2 and delta <= 0.2");
  auto cs = capacitor2d::cumulative_sweep({delta / epsilon}).front();
  double J1 = epsilon * ((0.5 * std::log(epsilon / 8.0) + 2.0) * cs.phi + 0.5 * cs.phi_log);
  double u0 = delta / (1.0 + delta), lu = std::log(u0);
  double J2 = epsilon * (subtracted_far_field_integral(u0) - 0.5 * c0 * lu * lu - c1 * lu);
  return {J1, J2};
}

ThirdMomentBreakdown third_moment_expansion(double epsilon) {
  if (!(epsilon > 0.0 && epsilon <= 0.05)) throw ParameterError("third_moment_expansion needs 0 < eps <= 0.05");
  ThirdMomentBreakdown b;
  double le = std::log(epsilon);
  b.epsilon = epsilon;
  b.leading = 1.0 / (8.0 * epsilon);
  b.constant = 2.0 / (3.0 * pi);
  b.log2_term = -epsilon * le * le / (2.0 * pi * pi);
  b.log_term = (std::log(8.0 * pi) - 3.0) / (pi * pi) * epsilon * le;
  b.order_eps_term = bracket_exact() * epsilon;
  b.total = b.leading + b.constant + b.log2_term + b.log_term + b.order_eps_term;
  b.c1 = 4.0 * capacitance_series(CapacitanceSeries::extended, 2.0 * epsilon);
  b.sigma_moment = (b.c1 - 2.0 * b.total) / (4.0 * pi);
  return b;
}

}  // namespace lovelab::asymptotics
