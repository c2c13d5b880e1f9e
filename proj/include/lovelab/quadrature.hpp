#pragma once

#include <functional>
#include <vector>

namespace lovelab::quadrature {

struct QuadratureRule {
  std::vector<double> nodes;    // increasing, in (-1, 1)
  std::vector<double> weights;  // positive, sum 2
};

// Cached; the reference stays valid for the program lifetime.
const QuadratureRule& gauss_legendre(int n);

using Integrand = std::function<double(double)>;

enum class Scheme { adaptive, tanh_sinh };

struct Estimate {
  double value;
  double error;
};

// Fixed n-point rule on [a, b].
double fixed_gauss(const Integrand& f, double a, double b, int n);

// Tolerances are absolute for |value| <= 1, relative above.
Estimate integrate(const Integrand& f, double a, double b, double tol,
                   Scheme scheme = Scheme::adaptive);

// Doubling panels [a, a+s], [a+s, a+3s], ...; throws DivergenceError when
// panel contributions stop shrinking.
Estimate integrate_semi_infinite(const Integrand& f, double a, double tol,
                                 double scale = 1.0);

struct LogTailSample {
  double X;
  double value;
};

struct LogTailFit {
  double c2;
  double c1;
  double c0;
  double residual;  // rms misfit
};

// Least squares for c2 log^2 X + c1 log X + c0; c2 = 0 unless with_log2.
LogTailFit fit_log_tail(const std::vector<LogTailSample>& samples, bool with_log2);

}  // namespace lovelab::quadrature
