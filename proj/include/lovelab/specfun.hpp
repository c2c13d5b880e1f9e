#pragma once

#include <complex>

namespace lovelab::specfun {

using ComplexValue = std::complex<double>;

struct EllipticPair {
  double k;
  double K;
  double E;
};

// Modulus with its complement k' = sqrt(1 - k^2) carried separately, so
// that values near k = 1 keep full relative accuracy in k'.
struct Modulus {
  double k;
  double kp;
  static Modulus from_k(double k);
  static Modulus from_complement(double kp);
};

EllipticPair elliptic_KE(double k);
EllipticPair elliptic_KE(Modulus m);
// E alone; defined at k = 1.
double elliptic_E(double k);

// dK/dr = (E - (1 - r^2) K) / (r (1 - r^2)).
double elliptic_K_derivative(double r);
double elliptic_K_derivative(Modulus m);

enum class BesselKind { I1, I2, K1 };

// exp(-x) I_nu(x) for I1, I2; exp(x) K_1(x) for K1.
double bessel_scaled(BesselKind kind, double x);

// Principal branch, x >= -1/e.
double lambert_w(double x);

// Limit from above the cut, x < -1/e.
ComplexValue lambert_w_upper_cut(double x);

struct UpperCutW {
  ComplexValue w;
  ComplexValue w_plus_one;  // accurate near the branch point
};

// Same, parametrized by t = log(-x) > -1; never forms exp(t).
UpperCutW lambert_w_upper_cut_log(double t);
// Same, parametrized by s = log(-x) + 1 > 0, the distance from the branch point.
UpperCutW lambert_w_upper_cut_shifted(double s);

// Li_n(x) for 0 <= x <= 1.
double polylog(int n, double x);
// Li_n(exp(mu)) for mu <= 0.
double polylog_exp(int n, double mu);

}  // namespace lovelab::specfun
