#include "lovelab/asymptotics.hpp"
#include "lovelab/cli.hpp"
#include "lovelab/conjectures.hpp"
#include "lovelab/love.hpp"
#include "lovelab/specfun.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

using namespace lovelab;

namespace {

constexpr double pi = std::numbers::pi;
int failures = 0;

struct Clock {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
};

void report(int id, const std::string& name, bool ok, const std::string& detail) {
  if (!ok) ++failures;
  std::printf("%s %2d %s: %s\n", ok ? "PASS" : "FAIL", id, name.c_str(), detail.c_str());
  std::fflush(stdout);
}

void note(int id, const std::string& detail) {
  std::printf("NOTE %2d %s\n", id, detail.c_str());
  std::fflush(stdout);
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double digits(double computed, double target) {
  double e = std::abs(computed - target);
  if (e == 0) return 15;
  return std::min(15.0, -std::log10(e / std::abs(target)));
}

void guarded(int id, const std::string& name, const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& e) {
    report(id, name, false, std::string("exception: ") + e.what());
  }
}

void c1() {
  Clock clk;
  cli::RunConfig cfg;
  cfg.command = cli::Command::fit_weak;
  auto res = cli::cmd_fit_weak(cfg);
  auto& row = res.table.rows.at(0);
  double c2 = std::get<double>(row[0]), resid = std::get<double>(row[2]), stderr_ = std::get<double>(row[3]);
  double d_kw = std::get<double>(row[5]);
  double target = 1.0 / 6 - 1 / (pi * pi);
  double t = clk.seconds();
  bool ok = std::abs(c2 - target) <= 0.1 * target && d_kw > 5 * resid && t <= 300;
  report(1, "weak-coupling c2", ok,
         fmt("c2=%.8f target=%.8f rel=%.2e, distance to rival %.4f vs 5*residual %.2e (stderr %.2e), %d points, %.1fs",
             c2, target, std::abs(c2 / target - 1), d_kw, 5 * resid, stderr_, cfg.gamma_count, t));
}

void c2() {
  Clock clk;
  cli::RunConfig cfg;
  cfg.command = cli::Command::compare_asymptotics;
  cfg.kappas = {0.1, 0.05, 0.02};
  auto res = cli::cmd_compare_asymptotics(cfg);
  bool ok = res.table.rows.size() == 3;
  double prev = INFINITY;
  std::string detail;
  for (auto& row : res.table.rows) {
    double k = std::get<double>(row[0]), ek = std::get<double>(row[4]), ee = std::get<double>(row[5]);
    ok = ok && ek <= 0.5 * k * std::abs(std::log(k)) && ee < ek && ee / k < prev;
    prev = ee / k;
    detail += fmt("k=%g err_k=%.2e err_e=%.2e; ", k, ek, ee);
  }
  double t = clk.seconds();
  ok = ok && t <= 120;
  report(2, "capacitance series", ok, detail + fmt("%.1fs", t));
}

void c3() {
  auto r = conjectures::verify_gamma0();
  double target = (1 + std::log(pi)) / pi;
  double err = std::abs(r.computed - target);
  report(3, "gamma0", err <= 1e-8, fmt("computed=%.15f target=%.15f err=%.2e", r.computed, target, err));
}

void c4() {
  auto r = conjectures::verify_gamma1();
  double lp = std::log(pi);
  double target = pi / 6 - 1 / pi - lp / pi - lp * lp / (2 * pi);
  double err = std::abs(r.computed - target);
  report(4, "gamma1", err <= 1e-8, fmt("computed=%.15f target=%.15f err=%.2e", r.computed, target, err));
}

void c5() {
  auto g = conjectures::verify_gamma2();
  double target = -0.442303459247;
  double da = digits(g.via_integral4.computed, target), db = digits(g.direct.computed, target);
  // the literal carries 12 digits
  double dcap = 11.5;
  bool ok = g.route_gap <= 1e-9 && std::min(da, dcap) >= 9 && std::min(db, dcap) >= 9;
  report(5, "gamma2 tilde", ok,
         fmt("route a=%.15f (%.1f digits), route b=%.15f (%.1f digits), gap=%.2e", g.via_integral4.computed, da,
             g.direct.computed, db, g.route_gap));
}

void c6() {
  auto g = conjectures::verify_gamma2();
  double target = -2 / pi - pi / 2 + 2 * std::log(8.0) / pi;
  double d = digits(g.integral4.computed, target);
  report(6, "integral4", d >= 9, fmt("computed=%.15f target=%.15f digits=%.1f", g.integral4.computed, target, d));
}

void c7() {
  const double targets[] = {-1.0, -1.0 / 2, -5.0 / 12, -7.0 / 18};
  bool ok = true;
  std::string detail;
  for (int n = 1; n <= 4; ++n) {
    auto r = conjectures::verify_polylog_claim(n);
    double exact = conjectures::tn_first(n).to_double();
    double d = digits(r.computed, targets[n - 1]);
    ok = ok && d >= 9 && exact == targets[n - 1];
    detail += fmt("n=%d %.1f digits; ", n, d);
  }
  report(7, "polylog integrals", ok, detail);
}

void c8() {
  bool ok = true;
  std::string detail;
  for (int k = 1; k <= 4; ++k) {
    auto r = conjectures::residue_identity(k);
    double target = std::pow(double(k), k) * std::exp(-k) / std::tgamma(k);
    double d = digits(r.computed, target);
    ok = ok && d >= 8;
    detail += fmt("k=%d %.1f digits; ", k, d);
  }
  report(8, "residue identity", ok, detail);
}

void c9() {
  bool ok = true;
  std::string detail, sup;
  double worst_sup = 0;
  for (double k : {0.5, 1.0, 2.0, 5.0}) {
    double law = 2 / pi * std::atan(1 / k);
    double s = love::discretized_largest_singular_value(k);
    ok = ok && std::abs(s - law) <= 1e-6;
    detail += fmt("k=%g sigma=%.6f law=%.6f; ", k, s, law);
    worst_sup = std::max(worst_sup, std::abs(love::discretized_sup_norm(k) - law));
  }
  report(9, "operator norm law (largest singular value)", ok, detail);
  note(9, fmt("the law is the sup-norm of the operator: discretized sup-norm matches to %.1e (%s)", worst_sup,
              worst_sup <= 1e-6 ? "ok" : "not ok"));
}

void c10() {
  double e = 1e-3;
  auto a = asymptotics::j_split(e, 0.03), b = asymptotics::j_split(e, 0.06);
  double diff = std::abs(a.J1 + a.J2 - b.J1 - b.J2);
  report(10, "delta cancellation", diff <= 0.02 * e,
         fmt("eps=1e-3, delta 0.03 vs 0.06: |diff|=%.2e bound=%.1e", diff, 0.02 * e));
}

void c11() {
  bool ok = true;
  std::string detail;
  for (double e : {0.02, 0.01, 0.005}) {
    double v = asymptotics::k2_energy_integral(e) * 2 * pi * pi / e;
    ok = ok && std::abs(v - 1) <= 1e-8;
    detail += fmt("eps=%g ratio-1=%.1e; ", e, v - 1);
  }
  report(11, "K2 integral law", ok, detail);
}

void c12() {
  auto a = asymptotics::assemble_ground_state(0.01);
  double target = 1.0 / 6 - 1 / (pi * pi);
  bool ok = std::abs(a.coeff_gamma2_log) <= 1e-10 && std::abs(a.coeff_gamma2_log2) <= 1e-10 &&
            std::abs(a.coeff_gamma2 - target) <= 1e-10;
  report(12, "log cancellation", ok,
         fmt("g2 log=%.1e g2 log2=%.1e g2=%.15f (target %.15f)", a.coeff_gamma2_log, a.coeff_gamma2_log2,
             a.coeff_gamma2, target));
}

void c13() {
  auto p = love::observables(love::solve_love({50.0}));
  double ff = pi * pi / 3;
  double rel = p.energy / ff - 1;
  report(13, "strong coupling", std::abs(rel) <= 0.01,
         fmt("kappa=50 gamma=%.3f e=%.6f pi^2/3=%.6f rel=%.3f%%", p.gamma, p.energy, ff, 100 * rel));
  double g = p.gamma;
  double corrected = ff * (1 - 4 / g + 12 / (g * g));
  double gap = std::abs(p.energy / corrected - 1);
  note(13, fmt("e against pi^2/3(1-4/gamma+12/gamma^2): rel gap %.1e (%s)", gap, gap <= 1e-4 ? "ok" : "not ok"));
}

void c14() {
  Clock clk;
  int bad = 0;
  std::string detail;

  for (int i = 1; i < 20; ++i) {
    double k = i / 20.0, kp = std::sqrt(1 - k * k);
    auto a = specfun::elliptic_KE(k), b = specfun::elliptic_KE(kp);
    if (std::abs(a.E * b.K + b.E * a.K - a.K * b.K - pi / 2) > 1e-12) ++bad;
  }
  for (double r : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    auto a = specfun::elliptic_KE(r), b = specfun::elliptic_KE(2 * std::sqrt(r) / (1 + r));
    if (std::abs(b.K - (1 + r) * a.K) > 1e-12 * b.K) ++bad;
    if (std::abs(b.E - (2 * a.E - (1 - r * r) * a.K) / (1 + r)) > 1e-12 * b.E) ++bad;
  }
  detail += fmt("elliptic %s; ", bad ? "bad" : "ok");

  int before = bad;
  for (double x : {-0.3678, -0.2, -1e-3, 1e-8, 0.5, 1.0, 10.0, 1e3, 1e10}) {
    double w = specfun::lambert_w(x);
    if (std::abs(w * std::exp(w) - x) > 1e-14 * std::max(1.0, std::abs(x))) ++bad;
  }
  detail += fmt("W %s; ", bad > before ? "bad" : "ok");

  before = bad;
  for (double e : {1e-4, 1e-3, 0.01, 0.05})
    for (double r : {1.0, 1.001, 1.5, 3.0})
      if (std::abs(asymptotics::kernel_K2(r, e, 200) - asymptotics::kernel_K2(r, e, 210)) >= 1e-14) ++bad;
  detail += fmt("Bessel truncation %s; ", bad > before ? "bad" : "ok");

  before = bad;
  for (double k : {0.02, 0.3, 3.0}) {
    auto sol = love::solve_love({k});
    size_t n = sol.f.size();
    double fmax = 0;
    for (double v : sol.f) fmax = std::max(fmax, v);
    for (size_t i = 0; i < n; ++i)
      if (std::abs(sol.f[i] - sol.f[n - 1 - i]) > 1e-10 * fmax) ++bad;
  }
  detail += fmt("f symmetry %s; ", bad > before ? "bad" : "ok");

  before = bad;
  for (double k : {0.05, 0.2, 1.0, 4.0}) {
    int n = love::default_node_count(k);
    auto a = love::observables(love::solve_love({k}, n));
    auto b = love::observables(love::solve_love({k}, 2 * n));
    if (std::abs(a.capacitance / b.capacitance - 1) >= 1e-9 || std::abs(a.energy / b.energy - 1) >= 1e-9) ++bad;
  }
  detail += fmt("self-convergence %s; ", bad > before ? "bad" : "ok");

  report(14, "property suites", bad == 0, detail + fmt("%.1fs", clk.seconds()));
}

}  // namespace

int main() {
  Clock total;
  guarded(1, "weak-coupling c2", c1);
  guarded(2, "capacitance series", c2);
  guarded(3, "gamma0", c3);
  guarded(4, "gamma1", c4);
  guarded(5, "gamma2 tilde", c5);
  guarded(6, "integral4", c6);
  guarded(7, "polylog integrals", c7);
  guarded(8, "residue identity", c8);
  guarded(9, "operator norm law (largest singular value)", c9);
  guarded(10, "delta cancellation", c10);
  guarded(11, "K2 integral law", c11);
  guarded(12, "log cancellation", c12);
  guarded(13, "strong coupling", c13);
  guarded(14, "property suites", c14);
  std::printf("%d of 14 criteria failed, %.1fs\n", failures, total.seconds());
  return failures ? 1 : 0;
}
