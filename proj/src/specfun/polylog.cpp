#include "lovelab/errors.hpp"
#include "lovelab/specfun.hpp"

#include <cmath>
#include <numbers>

namespace lovelab::specfun {

namespace {

constexpr double pi = std::numbers::pi;

double direct(int n, double x) {
  double sum = 0.0, xk = 1.0;
  for (int k = 1; k < 2000; ++k) {
    xk *= x;
    double term = xk / std::pow(double(k), n);
    sum += term;
    if (term < 1e-18 * sum) break;
  }
  return sum;
}

// zeta(m) for integer m != 1
double zeta_int(int m) {
  if (m >= 2) return std::riemann_zeta(double(m));
  if (m == 0) return -0.5;
  int j = -m;
  if (j % 2 == 0) return 0.0;
  // zeta(1-2k) = (-1)^k 2 (2k-1)! zeta(2k) / (2 pi)^(2k)
  int k = (j + 1) / 2;
  double v = 2.0 * std::riemann_zeta(2.0 * k) * std::tgamma(2.0 * k) / std::pow(2.0 * pi, 2 * k);
  return (k % 2 ? -v : v);
}

constexpr int zeta_lo = -64, zeta_hi = 16;

struct ZetaTable {
  double v[zeta_hi - zeta_lo + 1];
  ZetaTable() {
    for (int m = zeta_lo; m <= zeta_hi; ++m) v[m - zeta_lo] = m == 1 ? 0.0 : zeta_int(m);
  }
  double operator()(int m) const { return m <= zeta_hi ? v[m - zeta_lo] : zeta_int(m); }
};

const ZetaTable& zeta_table() {
  static const ZetaTable table;
  return table;
}

}  // namespace

double polylog_exp(int n, double mu) {
  if (n < 1) throw DomainError("polylog order must be >= 1");
  if (!(mu <= 0.0)) throw DomainError("polylog_exp needs mu <= 0");
  if (mu == 0.0) {
    if (n == 1) throw DivergenceError("Li_1(1) diverges");
    return std::riemann_zeta(double(n));
  }
  if (n == 1) return -std::log(-std::expm1(mu));
  if (mu < -0.7) return direct(n, std::exp(mu));
  double harmonic = 0.0;
  for (int j = 1; j < n; ++j) harmonic += 1.0 / j;
  const ZetaTable& zeta = zeta_table();
  double sum = 0.0, mk = 1.0;  // mu^k / k!
  for (int k = 0; k < n - zeta_lo; ++k) {
    if (k > 0) mk *= mu / k;
    sum += k == n - 1 ? mk * (harmonic - std::log(-mu)) : zeta(n - k) * mk;
  }
  return sum;
}

double polylog(int n, double x) {
  if (n < 1) throw DomainError("polylog order must be >= 1");
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("polylog argument outside [0,1]");
  if (x == 0.0) return 0.0;
  if (n == 1) {
    if (x == 1.0) throw DivergenceError("Li_1(1) diverges");
    return -std::log1p(-x);
  }
  if (x <= 0.5) return direct(n, x);
  return polylog_exp(n, std::log(x));
}

}  // namespace lovelab::specfun
