#include "lovelab/asymptotics.hpp"
#include "lovelab/errors.hpp"
#include "lovelab/specfun.hpp"

#include "elliptic_combo.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace lovelab::asymptotics {

namespace {

constexpr double pi = std::numbers::pi;
using specfun::BesselKind;
using specfun::bessel_scaled;

constexpr int k2_default_terms = 4000;

// sum_{n=1}^N z^n / n^p, smallest terms first
double partial_polylog(int p, double z, int N) {
  double s = 0.0;
  for (int n = N; n >= 1; --n) s += std::pow(z, n) / std::pow(double(n), p);
  return s;
}

}  // namespace

double far_field_F(double r) {
  if (!(r > 1.0) || !std::isfinite(r)) throw DomainError("far_field_F needs r > 1");
  double s = r - 1.0;
  if (r <= 2.0) {
    specfun::Modulus m{2.0 * std::sqrt(r) / (1.0 + r), s / (2.0 + s)};
    auto p = specfun::elliptic_KE(m);
    return p.E / (pi * s) - p.K / (pi * (r + 1.0));
  }
  // Landen form in the modulus 1/r
  specfun::Modulus m = detail::inverse_modulus(s);
  return 2.0 * m.k * detail::evaluate(detail::combo_A, m) / (pi * m.kp * m.kp);
}

GreenTraces green_traces(double r, double r1, double epsilon) {
  if (!(r > 0.0 && r1 > 0.0)) throw DomainError("green_traces needs r, r1 > 0");
  if (!(epsilon > 0.0)) throw DomainError("green_traces needs eps > 0");
  if (r == r1) throw DomainError("green_traces is logarithmically singular at r = r1");
  double rl = std::min(r, r1), rg = std::max(r, r1);
  specfun::Modulus m{rl / rg, std::sqrt((rg - rl) * (rg + rl)) / rg};
  auto p = specfun::elliptic_KE(m);
  double g_plus = 2.0 / (pi * rl) * (p.E - p.K);

  double sum = 0.0, gap = pi * (rg - rl) / epsilon;
  for (int n = 1;; ++n) {
    if (n > 2000000) throw ConvergenceError("g_minus Bessel sum too slow for r close to r1", sum);
    double a = n * pi / epsilon;
    double term = bessel_scaled(BesselKind::I1, a * rl) * bessel_scaled(BesselKind::K1, a * rg) * std::exp(-n * gap);
    sum += term;
    if (term <= 1e-17 * sum) break;
  }
  double g_minus = -0.5 / epsilon * (rl / rg) - 2.0 / epsilon * sum;
  return {g_minus, g_plus};
}

double kernel_K2(double r, double epsilon, int n_direct) {
  if (!(r >= 1.0)) throw DomainError("kernel K2 needs r >= 1");
  if (!(epsilon > 0.0)) throw DomainError("kernel K2 needs eps > 0");
  const double x = (r - 1.0) / epsilon;
  const int cap = n_direct > 0 ? n_direct : k2_default_terms;
  double sum = 0.0;
  int n = 1;
  bool decayed = false;
  for (; n <= cap; ++n) {
    double y = n * pi / epsilon;
    double term = bessel_scaled(BesselKind::I2, y) * bessel_scaled(BesselKind::K1, y * r) * std::exp(-n * pi * x) / n;
    sum += term;
    if (n_direct == 0 && term <= 1e-17 * sum) {
      decayed = true;
      break;
    }
  }
  if (!decayed) {
    // I2(y) K1(ry) e^{y - ry} ~ (1/(2y sqrt r)) (1 + alpha'/y + beta'/y^2), y = n pi / eps
    int N = cap;
    double z = std::exp(-pi * x);
    double al = epsilon / pi * (3.0 / (8.0 * r) - 15.0 / 8.0);
    double be = epsilon * epsilon / (pi * pi) * (105.0 / 128.0 - 15.0 / (128.0 * r * r) - 45.0 / (64.0 * r));
    auto tail = [&](int p) { return specfun::polylog_exp(p, -pi * x) - partial_polylog(p, z, N); };
    sum += epsilon / (2.0 * pi * std::sqrt(r)) * (tail(2) + al * tail(3) + be * tail(4));
  }
  return -2.0 / pi * r * sum;
}

double kernel_K(KernelPart part, double r, double epsilon) {
  if (!(r >= 1.0) || !std::isfinite(r)) throw DomainError("kernel K needs r >= 1");
  if (part != KernelPart::K3 && !(epsilon > 0.0)) throw DomainError("kernel K needs eps > 0");
  double s = r - 1.0;
  switch (part) {
    case KernelPart::K3:
      if (s == 0.0) throw PoleError("K3 is logarithmically singular at r = 1");
      return r * r * detail::evaluate(detail::combo_B, detail::inverse_modulus(s));
    case KernelPart::K1: {
      double tail = s == 0.0 ? -2.0 / (3.0 * pi)
                             : r * r * r / (3.0 * pi) * detail::evaluate(detail::combo_D, detail::inverse_modulus(s));
      return -1.0 / (8.0 * epsilon) + tail;
    }
    case KernelPart::K2: return kernel_K2(r, epsilon);
    case KernelPart::full: return kernel_K(KernelPart::K1, r, epsilon) + kernel_K2(r, epsilon);
  }
  return 0.0;
}

}  // namespace lovelab::asymptotics
