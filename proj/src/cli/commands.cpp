#include "lovelab/asymptotics.hpp"
#include "lovelab/cli.hpp"
#include "lovelab/conjectures.hpp"
#include "lovelab/love.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace lovelab::cli {

namespace {

constexpr double nan = std::numeric_limits<double>::quiet_NaN();

void check_tol(double tol) {
  if (!(tol >= 1e-14 && tol <= 1e-4)) throw UsageError("--tol must lie in [1e-14, 1e-4]");
}

std::vector<double> checked_kappas(const RunConfig& cfg) {
  if (cfg.kappas.empty()) throw UsageError("kappa grid is empty");
  for (double k : cfg.kappas) {
    if (!std::isfinite(k) || k <= 0) throw UsageError("kappa must be positive, got " + format_number(k));
    if (k < love::min_kappa)
      throw UsageError("kappa " + format_number(k) +
                       " is below 0.01; use compare-asymptotics or the asymptotics module for weak coupling");
  }
  if (cfg.n_nodes < 0) throw UsageError("--nodes must be non-negative");
  auto ks = cfg.kappas;
  std::sort(ks.begin(), ks.end());
  return ks;
}

struct SolveRow {
  love::EnergyPoint point{nan, nan, nan, nan};
  double residual = nan;
  long long nodes = 0;
  std::string error;
};

SolveRow solve_row(double kappa, int n) {
  SolveRow row;
  row.point.kappa = kappa;
  try {
    love::LoveProblem problem{kappa};
    auto sol = love::solve_love(problem, n);
    row.point = love::observables(sol);
    row.residual = sol.residual / problem.v0;
    row.nodes = static_cast<long long>(sol.nodes.size());
  } catch (const Error& e) {
    row.error = e.what();
  }
  return row;
}

}  // namespace

CommandResult cmd_solve(const RunConfig& cfg) {
  auto ks = checked_kappas(cfg);
  std::vector<SolveRow> rows(ks.size());
  parallel_for(static_cast<int>(ks.size()), cfg.threads, [&](int i) { rows[i] = solve_row(ks[i], cfg.n_nodes); });

  CommandResult res;
  res.table.columns = {"kappa", "gamma", "c", "e", "residual", "nodes", "error"};
  for (auto& r : rows) {
    res.table.rows.push_back({r.point.kappa, r.point.gamma, r.point.capacitance, r.point.energy, r.residual, r.nodes,
                              r.error});
    if (!r.error.empty()) {
      res.exit_code = exit_numerical;
      res.messages.push_back("kappa " + format_number(r.point.kappa) + ": " + r.error);
    }
  }
  return res;
}

CommandResult cmd_fit_weak(const RunConfig& cfg) {
  if (!(cfg.gamma_min >= love::weak_gamma_min && cfg.gamma_max <= love::weak_gamma_max &&
        cfg.gamma_min < cfg.gamma_max))
    throw UsageError("gamma grid must satisfy 1e-3 <= gamma-min < gamma-max <= 5e-2");
  if (cfg.gamma_count < 5) throw UsageError("--gamma-count must be at least 5");

  std::vector<double> gammas(cfg.gamma_count);
  for (int i = 0; i < cfg.gamma_count; ++i)
    gammas[i] = cfg.gamma_min * std::pow(cfg.gamma_max / cfg.gamma_min, double(i) / (cfg.gamma_count - 1));

  std::vector<love::EnergyPoint> points(gammas.size());
  if (cfg.synthetic.empty()) {
    parallel_for(cfg.gamma_count, cfg.threads, [&](int i) { points[i] = love::solve_at_gamma(gammas[i]); });
  } else {
    asymptotics::EnergySeries which;
    if (cfg.synthetic == "takahashi")
      which = asymptotics::EnergySeries::takahashi;
    else if (cfg.synthetic == "kaminaka_wadati")
      which = asymptotics::EnergySeries::kaminaka_wadati;
    else
      throw UsageError("--synthetic must be takahashi or kaminaka_wadati");
    for (size_t i = 0; i < gammas.size(); ++i)
      points[i] = {0.5 * std::sqrt(gammas[i]), gammas[i], nan, asymptotics::energy_series(which, gammas[i])};
  }

  auto fit = love::weak_coupling_fit(points);
  double pi2 = std::numbers::pi * std::numbers::pi;
  double d_t = std::abs(fit.c2 - (1.0 / 6 - 1.0 / pi2));
  double d_kw = std::abs(fit.c2 - (1.0 / 8 - 1.0 / pi2));
  std::string verdict = d_t <= d_kw ? "takahashi" : "kaminaka_wadati";

  CommandResult res;
  res.table.columns = {"c2",        "c3", "residual", "c2_stderr", "distance_takahashi", "distance_kaminaka_wadati",
                       "verdict"};
  res.table.rows.push_back({fit.c2, fit.c3, fit.fit_residual, fit.c2_stderr, d_t, d_kw, verdict});
  return res;
}

CommandResult cmd_verify(const RunConfig& cfg) {
  check_tol(cfg.tol);
  if (!conjectures::is_known_name(cfg.which)) throw UsageError("unknown conjecture '" + cfg.which + "'");
  auto reports = conjectures::run_named(cfg.which, cfg.tol);

  CommandResult res;
  res.table.columns = {"name", "computed", "target", "abs_error", "digits", "threshold", "passed", "method"};
  for (auto& r : reports) {
    res.table.rows.push_back({r.name, r.computed, r.target, r.abs_error, r.digits, r.threshold, r.passed, r.method});
    if (!r.passed) {
      res.exit_code = exit_numerical;
      res.messages.push_back(r.name + ": " + format_number(r.digits) + " digits, below " + format_number(r.threshold));
    }
  }
  return res;
}

CommandResult cmd_compare_asymptotics(const RunConfig& cfg) {
  auto ks = checked_kappas(cfg);
  if (ks.back() > 0.3) throw UsageError("compare-asymptotics needs kappa <= 0.3");
  std::reverse(ks.begin(), ks.end());

  std::vector<SolveRow> rows(ks.size());
  parallel_for(static_cast<int>(ks.size()), cfg.threads, [&](int i) { rows[i] = solve_row(ks[i], cfg.n_nodes); });

  CommandResult res;
  res.table.columns = {"kappa", "c_numeric", "c_kirchhoff", "c_extended", "err_k", "err_e"};
  for (size_t i = 0; i < ks.size(); ++i) {
    double c = rows[i].point.capacitance;
    double ck = asymptotics::capacitance_series(asymptotics::CapacitanceSeries::kirchhoff, ks[i]);
    double ce = asymptotics::capacitance_series(asymptotics::CapacitanceSeries::extended, ks[i]);
    res.table.rows.push_back({ks[i], c, ck, ce, std::abs(c - ck), std::abs(c - ce)});
    if (!rows[i].error.empty()) {
      res.exit_code = exit_numerical;
      res.messages.push_back("kappa " + format_number(ks[i]) + ": " + rows[i].error);
    }
  }
  return res;
}

}  // namespace lovelab::cli
