#include "lovelab/capacitor2d.hpp"

#include "lovelab/errors.hpp"
#include "lovelab/quadrature.hpp"
#include "lovelab/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

namespace lovelab::capacitor2d {

namespace {

constexpr double pi = std::numbers::pi;
using quadrature::Scheme;

}  // namespace

EdgePotentialSample phi_psi(double x) {
  if (!(x >= 0.0)) throw DomainError("phi_psi needs x >= 0");
  if (x == 0.0) return {0.0, 1.0, 0.0, -std::numeric_limits<double>::infinity()};
  // W = W(-exp(pi x - 1)) from above the cut, q = 1 + W
  auto [w, q] = specfun::lambert_w_upper_cut_shifted(pi * x);
  double im = w.imag();
  EdgePotentialSample s{x, 0.0, 0.0, -im / std::norm(q)};
  if (std::abs(q) < 0.5) {
    s.phi = 1.0 - im / pi;
    s.psi = -0.5 / pi * std::log1p(-2.0 * q.real() + std::norm(q));
  } else {
    s.phi = std::arg(w) / pi;
    s.psi = -std::log(std::abs(w)) / pi;
  }
  return s;
}

double implicit_residual(const EdgePotentialSample& s) {
  using C = std::complex<double>;
  const C i(0.0, 1.0);
  C phic(s.phi, s.psi);
  C rhs = 1.0 - i * pi + std::exp(i * pi * phic) + i * pi * phic;
  return std::abs(pi * s.x - rhs) / std::max(1.0, pi * s.x);
}

SeriesValue phi_series(double x, Regime regime) {
  if (!(x >= 0.0)) throw DomainError("phi_series needs x >= 0");
  if (regime == Regime::small) {
    double r = std::sqrt(x);
    double v = 1.0 - std::sqrt(2.0 / pi) * r + std::sqrt(2.0 * pi) / 18.0 * r * x -
               std::sqrt(2.0) * std::pow(pi, 1.5) / 1080.0 * r * x * x;
    return {v, x <= 0.1};
  }
  if (x == 0.0) throw DomainError("large-x series needs x > 0");
  double px = pi * x;
  return {1.0 / px + std::log(px) / (px * px), x >= 5.0};
}

SeriesValue psi_series(double x, Regime regime) {
  if (!(x >= 0.0)) throw DomainError("psi_series needs x >= 0");
  if (regime == Regime::small) {
    double v = x * (-1.0 / 3.0 + x * (2.0 * pi / 135.0 + x * (4.0 * pi * pi / 8505.0)));
    return {v, x <= 0.1};
  }
  if (x == 0.0) throw DomainError("large-x series needs x > 0");
  double lp = std::log(pi * x);
  return {-lp / pi + (lp + 1.0) / (pi * pi * x), x >= 5.0};
}

std::vector<CumulativeSample> cumulative_sweep(std::vector<double> Xs) {
  std::sort(Xs.begin(), Xs.end());
  if (Xs.empty()) return {};
  if (!(Xs.front() >= 1.0) || !std::isfinite(Xs.back())) throw DomainError("cumulative integrals need X >= 1");
  auto phi = [](double t) { return phi_psi(t).phi; };
  auto phi_log = [](double t) { return phi_psi(t).phi * std::log(t); };
  double a0 = quadrature::integrate(phi, 0.0, 1.0, 1e-15, Scheme::tanh_sinh).value;
  double b0 = quadrature::integrate(phi_log, 0.0, 1.0, 1e-15, Scheme::tanh_sinh).value;

  // geometric breakpoints merged with the requested X values
  std::vector<double> cuts;
  for (double c = 2.0; c < Xs.back(); c *= 2.0) cuts.push_back(c);
  cuts.insert(cuts.end(), Xs.begin(), Xs.end());
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::vector<CumulativeSample> out;
  double lo = 1.0, A = a0, B = b0;
  size_t next = 0;
  while (next < Xs.size() && Xs[next] == 1.0) out.push_back({Xs[next++], A, B});
  for (double hi : cuts) {
    if (hi <= lo) continue;
    const auto& rule = quadrature::gauss_legendre(30);
    double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo), sa = 0.0, sb = 0.0;
    for (size_t i = 0; i < rule.nodes.size(); ++i) {
      double t = mid + half * rule.nodes[i];
      double p = phi_psi(t).phi;
      sa += rule.weights[i] * p;
      sb += rule.weights[i] * p * std::log(t);
    }
    A += half * sa;
    B += half * sb;
    lo = hi;
    while (next < Xs.size() && Xs[next] == hi) out.push_back({Xs[next++], A, B});
  }
  return out;
}

double cumulative_phi(double X) { return cumulative_sweep({X}).front().phi; }

double cumulative_phi_log(double X) { return cumulative_sweep({X}).front().phi_log; }

double phi_prime_polylog_integral(int n, double tol) {
  if (n < 1 || n > 7) throw DomainError("polylog integral order must be in [1, 7]");
  auto f = [n](double x) { return phi_psi(x).phi_prime * specfun::polylog_exp(n, -pi * x); };
  double head = quadrature::integrate(f, 0.0, 1.0, tol, Scheme::tanh_sinh).value;
  // Li_n(exp(-pi x)) < 1e-17 beyond the cut
  double cut = std::log(1e17) / pi;
  double tail = quadrature::integrate(f, 1.0, cut, tol, Scheme::adaptive).value;
  return head + tail;
}

}  // namespace lovelab::capacitor2d
