#include "lovelab/love.hpp"

#include "lovelab/errors.hpp"
#include "lovelab/quadrature.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <string>

namespace lovelab::love {

namespace {

constexpr double pi = std::numbers::pi;

double kernel(double x, double y, double kappa) {
  double d = x - y;
  return kappa / (pi * (d * d + kappa * kappa));
}

void check_kappa(double kappa) {
  if (!(kappa > 0.0) || !std::isfinite(kappa)) throw DomainError("kappa must be positive");
}

int panel_count(double kappa, int n) {
  if (n <= 0) n = default_node_count(kappa);
  return std::max(1, (n + nodes_per_panel - 1) / nodes_per_panel);
}

void build_grid(int panels, std::vector<double>& x, std::vector<double>& w) {
  const auto& rule = quadrature::gauss_legendre(nodes_per_panel);
  x.clear();
  w.clear();
  double width = 2.0 / panels;
  for (int p = 0; p < panels; ++p) {
    double a = -1.0 + p * width, mid = a + 0.5 * width;
    for (int i = 0; i < nodes_per_panel; ++i) {
      x.push_back(mid + 0.5 * width * rule.nodes[i]);
      w.push_back(0.5 * width * rule.weights[i]);
    }
  }
}

// Largest gap between the per-panel polynomial and the Nyström interpolant.
double off_node_residual(const LoveSolution& sol) {
  const int p = nodes_per_panel;
  const auto& rule = quadrature::gauss_legendre(p);
  std::vector<double> bw(p);
  for (int j = 0; j < p; ++j) {
    double prod = 1.0;
    for (int k = 0; k < p; ++k)
      if (k != j) prod *= rule.nodes[j] - rule.nodes[k];
    bw[j] = 1.0 / prod;
  }
  double width = 2.0 / sol.panels, worst = 0.0;
  for (int q = 0; q < sol.panels; ++q) {
    double a = -1.0 + q * width, mid = a + 0.5 * width;
    const double* fq = sol.f.data() + q * p;
    for (int i = 0; i + 1 < p; ++i) {
      double t = 0.5 * (rule.nodes[i] + rule.nodes[i + 1]);
      double num = 0.0, den = 0.0;
      for (int j = 0; j < p; ++j) {
        double c = bw[j] / (t - rule.nodes[j]);
        num += c * fq[j];
        den += c;
      }
      double poly = num / den;
      double nys = interpolate(sol, mid + 0.5 * width * t);
      worst = std::max(worst, std::abs(poly - nys));
    }
  }
  return worst;
}

}  // namespace

int default_node_count(double kappa) {
  check_kappa(kappa);
  int panels = std::max(4, static_cast<int>(std::ceil(2.0 / kappa)));
  return panels * nodes_per_panel;
}

LoveSolution solve_love(const LoveProblem& problem, int n) {
  check_kappa(problem.kappa);
  if (!(problem.v0 > 0.0)) throw DomainError("v0 must be positive");
  LoveSolution sol;
  sol.problem = problem;
  sol.panels = panel_count(problem.kappa, n);
  build_grid(sol.panels, sol.nodes, sol.weights);
  const int m = static_cast<int>(sol.nodes.size());
  Eigen::MatrixXd A(m, m);
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < m; ++i)
      A(i, j) = (i == j ? 1.0 : 0.0) - sol.weights[j] * kernel(sol.nodes[i], sol.nodes[j], problem.kappa);
  Eigen::VectorXd rhs = Eigen::VectorXd::Constant(m, problem.v0);
  Eigen::VectorXd f = A.partialPivLu().solve(rhs);
  sol.f.assign(f.data(), f.data() + m);
  sol.residual = off_node_residual(sol);
  if (!(sol.residual <= 1e-8 * problem.v0))
    throw ResolutionError("Love solve under-resolved (off-node residual " + std::to_string(sol.residual) +
                              "); use at least " + std::to_string(2 * m) + " nodes",
                          2 * m);
  return sol;
}

double interpolate(const LoveSolution& sol, double x) {
  double s = 0.0;
  for (size_t j = 0; j < sol.nodes.size(); ++j)
    s += sol.weights[j] * kernel(x, sol.nodes[j], sol.problem.kappa) * sol.f[j];
  return sol.problem.v0 + s;
}

double operator_norm(double kappa) {
  check_kappa(kappa);
  return 2.0 / pi * std::atan(1.0 / kappa);
}

double discretized_sup_norm(double kappa, int n) {
  check_kappa(kappa);
  std::vector<double> x, w;
  build_grid(panel_count(kappa, n), x, w);
  auto row = [&](double xi) {
    double s = 0.0;
    for (size_t j = 0; j < x.size(); ++j) s += w[j] * kernel(xi, x[j], kappa);
    return s;
  };
  double best = row(0.0);
  for (double xi : x) best = std::max(best, row(xi));
  return best;
}

double discretized_largest_singular_value(double kappa, int n) {
  check_kappa(kappa);
  std::vector<double> x, w;
  build_grid(panel_count(kappa, n), x, w);
  const int m = static_cast<int>(x.size());
  Eigen::MatrixXd S(m, m);
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < m; ++i) S(i, j) = std::sqrt(w[i] * w[j]) * kernel(x[i], x[j], kappa);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(S, Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

Moments moments(const LoveSolution& sol) {
  Moments mo{0.0, 0.0, 0.0};
  for (size_t j = 0; j < sol.nodes.size(); ++j) {
    double wf = sol.weights[j] * sol.f[j], x = sol.nodes[j];
    mo.m0 += wf;
    mo.m1 += wf * x;
    mo.m2 += wf * x * x;
  }
  return mo;
}

EnergyPoint observables(const LoveSolution& sol) {
  Moments mo = moments(sol);
  double scale = 1.0 / (2.0 * pi * sol.problem.v0);  // to gas normalization
  double m0 = mo.m0 * scale, m2 = mo.m2 * scale, kappa = sol.problem.kappa;
  double gamma = kappa / m0;
  double g = gamma / kappa;
  return {kappa, gamma, m0, g * g * g * m2};
}

double third_moment_sigma(const LoveSolution& sol) {
  return moments(sol).m2 / (sol.problem.v0 * pi * pi);
}

EnergyPoint solve_at_gamma(double gamma, double rel_tol) {
  if (!(gamma > 0.0)) throw DomainError("gamma must be positive");
  auto at = [](double kappa) { return observables(solve_love({kappa, gas_v0})); };
  // gamma ~ 4 kappa^2 for small coupling
  double k0 = 0.5 * std::sqrt(gamma);
  EnergyPoint p0 = at(k0);
  double k1 = k0 * std::sqrt(gamma / p0.gamma);
  EnergyPoint p1 = at(k1);
  for (int it = 0; it < 30; ++it) {
    if (std::abs(p1.gamma - gamma) <= rel_tol * gamma) return p1;
    double slope = std::log(p1.gamma / p0.gamma) / std::log(k1 / k0);
    if (!(slope > 0.0) || !std::isfinite(slope)) slope = 2.0;
    double k2 = k1 * std::pow(gamma / p1.gamma, 1.0 / slope);
    k0 = k1;
    p0 = p1;
    k1 = k2;
    p1 = at(k1);
  }
  throw ConvergenceError("kappa(gamma) iteration did not converge", p1.kappa);
}

WeakCouplingFit weak_coupling_fit(const std::vector<EnergyPoint>& points) {
  const int m = static_cast<int>(points.size());
  if (m < 5) throw ParameterError("weak_coupling_fit needs at least 5 points");
  Eigen::MatrixXd A(m, 2);
  Eigen::VectorXd y(m);
  for (int i = 0; i < m; ++i) {
    double g = points[i].gamma;
    if (!(g >= weak_gamma_min && g <= weak_gamma_max))
      throw ParameterError("gamma " + std::to_string(g) + " outside the weak-coupling window [1e-3, 5e-2]");
    double sg = std::sqrt(g);
    A(i, 0) = 1.0;
    A(i, 1) = sg;
    y(i) = (points[i].energy - g + 4.0 / (3.0 * pi) * g * sg) / (g * g);
  }
  Eigen::VectorXd c = A.colPivHouseholderQr().solve(y);
  Eigen::VectorXd r = A * c - y;
  double ssr = r.squaredNorm();
  Eigen::Matrix2d cov = (A.transpose() * A).inverse();
  double dof = std::max(1, m - 2);
  return {c(0), c(1), std::sqrt(ssr / m), std::sqrt(ssr / dof * cov(0, 0))};
}

}  // namespace lovelab::love
