#include "lovelab/asymptotics.hpp"
#include "lovelab/capacitor2d.hpp"
#include "lovelab/conjectures.hpp"
#include "lovelab/errors.hpp"
#include "lovelab/quadrature.hpp"
#include "lovelab/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numbers>

namespace lovelab::conjectures {

namespace {

constexpr double pi = std::numbers::pi;
using quadrature::Scheme;

std::vector<quadrature::LogTailSample> samples(const std::vector<double>& Xs, bool with_log) {
  std::vector<quadrature::LogTailSample> out;
  for (auto& c : capacitor2d::cumulative_sweep(Xs)) out.push_back({c.X, with_log ? c.phi_log : c.phi});
  return out;
}

double integral4_value() {
  // (2/pi) int_0^1 {2 (1/r - r) K'(r)^2 - 1/(1 - r)} dr in u = 1 - r
  auto f = [](double u) {
    if (u < 1e-250) return 0.0;
    double r = 1.0 - u, kp2 = u * (2.0 - u);
    double dk = specfun::elliptic_K_derivative(specfun::Modulus{r, std::sqrt(kp2)});
    return 2.0 * kp2 / r * dk * dk - 1.0 / u;
  };
  return 2.0 / pi * quadrature::integrate(f, 0.0, 1.0, 1e-14, Scheme::tanh_sinh).value;
}

}  // namespace

ConjectureReport make_report(std::string name, double computed, double target, std::string method,
                             double threshold) {
  ConjectureReport r;
  r.name = std::move(name);
  r.computed = computed;
  r.target = target;
  r.abs_error = std::abs(computed - target);
  double scale = target != 0.0 ? std::abs(target) : 1.0;
  r.digits = r.abs_error == 0.0 ? 15.0 : std::min(15.0, -std::log10(r.abs_error / scale));
  if (!std::isfinite(r.digits)) r.digits = 0.0;
  r.threshold = threshold;
  r.passed = r.digits >= threshold;
  r.method = std::move(method);
  return r;
}

std::vector<double> default_fit_grid() {
  std::vector<double> Xs;
  for (int e = 14; e <= 20; ++e) Xs.push_back(std::pow(10.0, e));
  return Xs;
}

double fit_gamma0(const std::vector<double>& Xs) { return quadrature::fit_log_tail(samples(Xs, false), false).c0; }

double fit_gamma1(const std::vector<double>& Xs) { return quadrature::fit_log_tail(samples(Xs, true), true).c0; }

ConjectureReport verify_gamma0() {
  return make_report("gamma0", fit_gamma0(default_fit_grid()), asymptotics::gamma0_exact(),
                     "int_0^X Phi on X = 1e14..1e20, fit c1 log X + c0");
}

ConjectureReport verify_gamma1() {
  return make_report("gamma1", fit_gamma1(default_fit_grid()), asymptotics::gamma1_exact(),
                     "int_0^X Phi log t on X = 1e14..1e20, fit c2 log^2 X + c1 log X + c0");
}

Gamma2Report verify_gamma2() {
  Gamma2Report out;
  double i4 = integral4_value();
  out.integral4 = make_report("integral4", i4, asymptotics::integral4_exact(),
                              "tanh-sinh of 2(1/r - r) K'^2 - 1/(1-r) in u = 1 - r");
  double l2 = std::log(2.0);
  double via = i4 - 9.0 * l2 * l2 / (4.0 * pi) + pi / 4.0;
  out.via_integral4 = make_report("gamma2", via, asymptotics::gamma2_tilde_exact(),
                                  "integral4 - 9 log^2 2/(4 pi) + pi/4");
  double direct = asymptotics::subtracted_far_field_integral(0.0);
  out.direct = make_report("gamma2_direct", direct, asymptotics::gamma2_tilde_exact(),
                           "tanh-sinh of the subtracted far-field integrand in u = 1 - 1/r");
  out.route_gap = std::abs(via - direct);
  return out;
}

ConjectureReport verify_polylog_claim(int n) {
  if (n < 1 || n > 6) throw DomainError("verify_polylog_claim needs 1 <= n <= 6");
  return make_report("polylog" + std::to_string(n), capacitor2d::phi_prime_polylog_integral(n),
                     tn_first(n).to_double(),
                     "int Phi' Li_" + std::to_string(n) + "(exp(-pi x)) vs (T^" + std::to_string(n) + "[N])_1 = " +
                         tn_first(n).to_string());
}

ConjectureReport residue_identity(int k, double tol) {
  if (k < 1 || k > 8) throw DomainError("residue_identity needs 1 <= k <= 8");
  // x = -exp(t - 1): integrand exp(-k t) Im(1/(1 + W)), W from above the cut
  auto f = [k](double t) {
    auto q = specfun::lambert_w_upper_cut_shifted(t).w_plus_one;
    return std::exp(-k * t) * (-q.imag() / std::norm(q));
  };
  double head = quadrature::integrate(f, 0.0, 1.0, tol, Scheme::tanh_sinh).value;
  double tail = quadrature::integrate_semi_infinite(f, 1.0, tol, 1.0 / k).value;
  double computed = -k / pi * (head + tail);
  double lg = k * std::log(double(k)) - k - std::lgamma(double(k));
  return make_report("residue" + std::to_string(k), computed, std::exp(lg),
                     "branch-cut integral of Im 1/(1+W), x = -exp(t-1), target k^k e^-k/(k-1)!");
}

std::vector<std::string> known_names() {
  std::vector<std::string> names{"gamma0", "gamma1", "gamma2", "gamma2_direct", "integral4"};
  for (int n = 1; n <= 6; ++n) names.push_back("polylog" + std::to_string(n));
  for (int k = 1; k <= 8; ++k) names.push_back("residue" + std::to_string(k));
  return names;
}

bool is_known_name(const std::string& which) {
  if (which == "all" || which == "polylog" || which == "residue") return true;
  auto names = known_names();
  return std::find(names.begin(), names.end(), which) != names.end();
}

std::vector<ConjectureReport> run_named(const std::string& which, double tol) {
  if (!is_known_name(which)) throw ParameterError("unknown conjecture '" + which + "'");
  auto selected = [&](const std::string& name) {
    if (which == "all" || which == name) return true;
    return name.rfind(which, 0) == 0 && (which == "polylog" || which == "residue");
  };
  bool want_g2 = selected("gamma2") || selected("gamma2_direct") || selected("integral4");

  std::vector<std::future<std::vector<ConjectureReport>>> jobs;
  if (selected("gamma0")) jobs.push_back(std::async(std::launch::async, [] { return std::vector{verify_gamma0()}; }));
  if (selected("gamma1")) jobs.push_back(std::async(std::launch::async, [] { return std::vector{verify_gamma1()}; }));
  if (want_g2)
    jobs.push_back(std::async(std::launch::async, [] {
      auto g = verify_gamma2();
      return std::vector{g.via_integral4, g.direct, g.integral4};
    }));
  for (int n = 1; n <= 6; ++n)
    if (selected("polylog" + std::to_string(n)))
      jobs.push_back(std::async(std::launch::async, [n] { return std::vector{verify_polylog_claim(n)}; }));
  for (int k = 1; k <= 8; ++k)
    if (selected("residue" + std::to_string(k)))
      jobs.push_back(std::async(std::launch::async, [k, tol] { return std::vector{residue_identity(k, tol)}; }));

  std::vector<ConjectureReport> all;
  for (auto& j : jobs)
    for (auto& r : j.get())
      if (selected(r.name)) all.push_back(r);
  auto names = known_names();
  auto rank = [&](const ConjectureReport& r) { return std::find(names.begin(), names.end(), r.name) - names.begin(); };
  std::sort(all.begin(), all.end(), [&](auto& a, auto& b) { return rank(a) < rank(b); });
  return all;
}

}  // namespace lovelab::conjectures
