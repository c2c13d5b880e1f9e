#pragma once

#include <numbers>
#include <vector>

namespace lovelab::love {

inline constexpr double gas_v0 = 0.5 * std::numbers::inv_pi;

struct LoveProblem {
  double kappa;
  double v0 = gas_v0;
};

struct LoveSolution {
  LoveProblem problem;
  std::vector<double> nodes;
  std::vector<double> weights;
  std::vector<double> f;
  int panels = 0;
  double residual = 0.0;  // max off-node discrepancy, absolute
};

struct EnergyPoint {
  double kappa;
  double gamma;
  double capacitance;
  double energy;
};

struct Moments {
  double m0;
  double m1;  // vanishes by symmetry
  double m2;
};

inline constexpr int nodes_per_panel = 16;
inline constexpr double min_kappa = 0.01;

// Panels of width about kappa, at least 4 panels.
int default_node_count(double kappa);

// n = 0 picks default_node_count; n is rounded up to whole panels.
LoveSolution solve_love(const LoveProblem& problem, int n = 0);

// Nyström interpolant v0 + sum_j w_j K(x, x_j) f_j.
double interpolate(const LoveSolution& sol, double x);

// (2/pi) arctan(1/kappa)
double operator_norm(double kappa);
// max row sum of the discretized operator, including the row at x = 0
double discretized_sup_norm(double kappa, int n = 0);
// largest singular value of W^{1/2} K W^{1/2}
double discretized_largest_singular_value(double kappa, int n = 0);

Moments moments(const LoveSolution& sol);

// Independent of v0: the density is rescaled to the gas normalization.
EnergyPoint observables(const LoveSolution& sol);

// int_0^1 r^3 sigma(r) dr = m2 / (v0 pi^2)
double third_moment_sigma(const LoveSolution& sol);

// Solves for the kappa whose coupling is gamma.
EnergyPoint solve_at_gamma(double gamma, double rel_tol = 1e-11);

struct WeakCouplingFit {
  double c2;
  double c3;
  double fit_residual;  // rms of the fitted ratio
  double c2_stderr;
};

inline constexpr double weak_gamma_min = 1e-3;
inline constexpr double weak_gamma_max = 5e-2;

// Fits (e - gamma + 4/(3pi) gamma^{3/2}) / gamma^2 = c2 + c3 gamma^{1/2}.
WeakCouplingFit weak_coupling_fit(const std::vector<EnergyPoint>& points);

}  // namespace lovelab::love
