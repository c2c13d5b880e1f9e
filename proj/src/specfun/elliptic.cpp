#include "lovelab/errors.hpp"
#include "lovelab/specfun.hpp"

#include <cmath>
#include <numbers>

namespace lovelab::specfun {

namespace {

constexpr double pi = std::numbers::pi;

void check_modulus(Modulus m) {
  if (!(m.k >= 0.0 && m.k <= 1.0 && m.kp >= 0.0 && m.kp <= 1.0))
    throw DomainError("elliptic modulus outside [0,1]");
}

// K and E by AGM; E via the sum of 2^(n-1) c_n^2.
EllipticPair agm(Modulus m) {
  double a = 1.0, b = m.kp, c = m.k;
  double pow2 = 0.5, sum = pow2 * c * c;
  for (int i = 0; i < 64; ++i) {
    if (std::abs(a - b) <= 1e-16 * a) break;
    double an = 0.5 * (a + b);
    double bn = std::sqrt(a * b);
    c = 0.5 * (a - b);
    a = an;
    b = bn;
    pow2 *= 2.0;
    sum += pow2 * c * c;
  }
  double K = pi / (2.0 * a);
  if (m.kp >= 0.3) return {m.k, K, K * (1.0 - sum)};
  // Legendre relation with K(k'), K(k') - E(k') from their series in k'^2
  double x2 = m.kp * m.kp, cn = 1.0, xp = 1.0, Kp = 1.0, D = 0.0;
  for (int n = 1; n < 80; ++n) {
    cn *= ((2.0 * n - 1.0) / (2.0 * n)) * ((2.0 * n - 1.0) / (2.0 * n));
    xp *= x2;
    Kp += cn * xp;
    D += cn * 2.0 * n / (2.0 * n - 1.0) * xp;
    if (cn * xp < 1e-18) break;
  }
  Kp *= 0.5 * pi;
  D *= 0.5 * pi;
  return {m.k, K, (0.5 * pi + K * D) / Kp};
}

}  // namespace

Modulus Modulus::from_k(double k) {
  if (!(k >= 0.0 && k <= 1.0)) throw DomainError("elliptic modulus outside [0,1]");
  return {k, std::sqrt((1.0 - k) * (1.0 + k))};
}

Modulus Modulus::from_complement(double kp) {
  if (!(kp >= 0.0 && kp <= 1.0)) throw DomainError("complementary modulus outside [0,1]");
  return {std::sqrt((1.0 - kp) * (1.0 + kp)), kp};
}

EllipticPair elliptic_KE(Modulus m) {
  check_modulus(m);
  if (m.kp == 0.0) throw PoleError("K(k) has a pole at k = 1");
  return agm(m);
}

EllipticPair elliptic_KE(double k) { return elliptic_KE(Modulus::from_k(k)); }

double elliptic_E(double k) {
  Modulus m = Modulus::from_k(k);
  if (m.kp == 0.0) return 1.0;
  return agm(m).E;
}

double elliptic_K_derivative(Modulus m) {
  check_modulus(m);
  if (m.k <= 0.0 || m.kp <= 0.0)
    throw DomainError("dK/dr needs 0 < r < 1");
  double r = m.k;
  if (r < 0.25) {
    // (pi/2) sum 2n c_n r^(2n-1), c_n = ((2n-1)!!/(2n)!!)^2
    double t = 1.0, sum = 0.0, r2 = r * r, rp = r;
    for (int n = 1; n < 60; ++n) {
      t *= (2.0 * n - 1.0) / (2.0 * n);
      double term = 2.0 * n * t * t * rp;
      sum += term;
      if (term < 1e-18 * sum) break;
      rp *= r2;
    }
    return 0.5 * pi * sum;
  }
  EllipticPair p = agm(m);
  double kp2 = m.kp * m.kp;
  return (p.E - kp2 * p.K) / (r * kp2);
}

double elliptic_K_derivative(double r) {
  if (!(r > 0.0 && r < 1.0)) throw DomainError("dK/dr needs 0 < r < 1");
  return elliptic_K_derivative(Modulus::from_k(r));
}

}  // namespace lovelab::specfun
