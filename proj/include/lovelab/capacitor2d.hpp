#pragma once

#include <vector>

namespace lovelab::capacitor2d {

// Potential on the plate line of the semi-infinite 2-D capacitor.
struct EdgePotentialSample {
  double x;
  double phi;
  double psi;  // conjugate function, psi(0) = 0
  double phi_prime;
};

EdgePotentialSample phi_psi(double x);

// |pi z - (1 - i pi + exp(i pi Phi_c) + i pi Phi_c)| / max(1, pi x)
double implicit_residual(const EdgePotentialSample& s);

enum class Regime { small, large };

struct SeriesValue {
  double value;
  bool in_regime;  // small: x <= 0.1, large: x >= 5
};

// small: through x^{5/2}; large: 1/(pi x) + log(pi x)/(pi x)^2
SeriesValue phi_series(double x, Regime regime);
// small: through x^3; large: -log(pi x)/pi + (log(pi x) + 1)/(pi^2 x)
SeriesValue psi_series(double x, Regime regime);

// int_0^X Phi(t) dt
double cumulative_phi(double X);
// int_0^X Phi(t) log t dt
double cumulative_phi_log(double X);

struct CumulativeSample {
  double X;
  double phi;      // int_0^X Phi
  double phi_log;  // int_0^X Phi log t
};

// Both integrals at every X (each >= 1) in one sweep.
std::vector<CumulativeSample> cumulative_sweep(std::vector<double> Xs);

// int_0^inf Phi'(x) Li_n(exp(-pi x)) dx, 1 <= n <= 7
double phi_prime_polylog_integral(int n, double tol = 1e-14);

}  // namespace lovelab::capacitor2d
