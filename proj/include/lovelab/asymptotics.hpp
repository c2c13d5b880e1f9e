#pragma once

#include "lovelab/series.hpp"

namespace lovelab::asymptotics {

enum class EnergySeries { bogoliubov, takahashi, kaminaka_wadati };
enum class CapacitanceSeries { kirchhoff, extended };

double energy_series(EnergySeries which, double gamma);
double capacitance_series(CapacitanceSeries which, double kappa);

// Closed-form constants of the edge integrals.
double gamma0_exact();
double gamma1_exact();
double gamma2_exact();
double gamma2_tilde_exact();
double integral4_exact();
// coefficient of eps in the int phi' K expansion, closed form
double bracket_exact();
// same, assembled from gamma0, gamma1, gamma2
double bracket_from_constants(double g0, double g1, double g2);

// Inversion coefficients a0..a5 of gamma = 8 eps / C1.
struct InversionCoefficients {
  double a0, a1, a2, a3, a4, a5;
};
InversionCoefficients inversion_coefficients();

double epsilon_of_gamma(double gamma);
AsymptoticSeries epsilon_series();
// gamma = 8 eps / C1 with C1 = 4 * extended capacitance at kappa = 2 eps
double gamma_of_epsilon(double epsilon);

// r > 1
double far_field_F(double r);

struct GreenTraces {
  double g_minus;
  double g_plus;
};
GreenTraces green_traces(double r, double r1, double epsilon);

enum class KernelPart { K1, K2, K3, full };
double kernel_K(KernelPart part, double r, double epsilon);

// K2 with the Bessel sum taken directly to n_direct terms and the rest
// from the large-order expansion; n_direct = 0 picks the default.
double kernel_K2(double r, double epsilon, int n_direct = 0);

// -(eps/pi^2) int_0^inf Phi' Li_2(exp(-pi x)) dx
double k2_energy_integral(double epsilon);

struct JSplit {
  double J1;
  double J2;
};
// max(sqrt(0.2 eps), 5 eps): keeps eps/delta <= 0.2
double default_delta(double epsilon);
JSplit j_split(double epsilon, double delta);

// int_{u0}^1 of the subtracted far-field integrand in u = 1 - 1/r
double subtracted_far_field_integral(double u0, double tol = 1e-14);

struct ThirdMomentBreakdown {
  double epsilon;
  double leading;         // 1/(8 eps)
  double constant;        // 2/(3 pi)
  double log2_term;       // -(1/(2 pi^2)) eps log^2 eps
  double log_term;        // ((log 8 pi - 3)/pi^2) eps log eps
  double order_eps_term;  // bracket * eps
  double total;           // int phi' K dr
  double c1;              // 4 * extended capacitance at kappa = 2 eps
  double sigma_moment;    // int_0^1 r^3 sigma dr = (C1 - 2 total) / (4 pi)
};
ThirdMomentBreakdown third_moment_expansion(double epsilon);

struct GroundStateAssembly {
  AsymptoticSeries series;  // e(gamma) through gamma^2
  double value;             // series at gamma
  double direct;            // C1 and the expansion evaluated at eps(gamma)
  double coeff_gamma;
  double coeff_gamma32;
  double coeff_gamma2;
  double coeff_gamma2_log;   // of gamma^2 log gamma
  double coeff_gamma2_log2;  // of gamma^2 log^2 gamma
};
GroundStateAssembly assemble_ground_state(double gamma);

}  // namespace lovelab::asymptotics
