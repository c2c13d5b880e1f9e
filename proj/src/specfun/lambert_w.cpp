#include "lovelab/errors.hpp"
#include "lovelab/specfun.hpp"

#include <cmath>
#include <numbers>

namespace lovelab::specfun {

namespace {

using C = ComplexValue;
constexpr double pi = std::numbers::pi;
constexpr double inv_e = 0.36787944117144232160;

// W + 1 near the branch point, in p = sqrt(2(e x + 1)).
template <class T>
T branch_series(T p) {
  return p * (1.0 + p * (-1.0 / 3 + p * (11.0 / 72 + p * (-43.0 / 540 + p * (769.0 / 17280)))));
}

// h(q) = (q - 1) e^q + 1 = sum_{k>=2} (k-1) q^k / k!
C h_series(C q) {
  C term = q, sum = 0.0;
  for (int k = 2; k < 40; ++k) {
    term *= q / double(k);
    C add = double(k - 1) * term;
    sum += add;
    if (std::abs(add) < 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

// Solve h(q) = -E for q = 1 + W near the branch point.
C solve_q(double E) {
  C q = branch_series(C(0.0, std::sqrt(2.0 * E)));
  for (int it = 0; it < 60; ++it) {
    C eq = std::exp(q);
    C f = h_series(q) + E;
    C f1 = q * eq;
    C f2 = (q + 1.0) * eq;
    C dq = f / (f1 - 0.5 * f * f2 / f1);
    q -= dq;
    if (std::abs(dq) <= 1e-16 * std::abs(q)) break;
  }
  return q;
}

// Solve W + log W = L on the upper side.
C solve_log(C L, C w) {
  for (int it = 0; it < 100; ++it) {
    C g = w + std::log(w) - L;
    C g1 = 1.0 + 1.0 / w;
    C g2 = -1.0 / (w * w);
    C dw = g / (g1 - 0.5 * g * g2 / g1);
    w -= dw;
    if (std::abs(dw) <= 2e-16 * std::abs(w)) break;
  }
  return w;
}

}  // namespace

double lambert_w(double x) {
  if (std::isnan(x) || x < -inv_e) throw BranchError("lambert_w needs x >= -1/e");
  if (x == 0.0) return 0.0;
  double w;
  if (x < -0.25) {
    double p = std::sqrt(std::max(0.0, 2.0 * (std::exp(1.0) * x + 1.0)));
    w = branch_series(p) - 1.0;
    if (p == 0.0) return -1.0;
  } else if (x < 3.0) {
    w = std::log1p(x);
  } else {
    double l1 = std::log(x), l2 = std::log(l1);
    w = l1 - l2 + l2 / l1;
  }
  for (int it = 0; it < 60; ++it) {
    double ew = std::exp(w);
    double f = w * ew - x;
    double wp1 = w + 1.0;
    if (wp1 == 0.0) break;
    double dw = f / (ew * wp1 - 0.5 * (w + 2.0) * f / wp1);
    w -= dw;
    if (std::abs(dw) <= 1e-16 * std::max(1.0, std::abs(w))) break;
  }
  return w;
}

UpperCutW lambert_w_upper_cut_log(double t) { return lambert_w_upper_cut_shifted(t + 1.0); }

UpperCutW lambert_w_upper_cut_shifted(double s) {
  if (!(s > 0.0)) throw BranchError("upper cut needs log(-x) > -1");
  double t = s - 1.0;
  if (s < 0.25) {
    C q = solve_q(std::expm1(s));
    return {q - 1.0, q};
  }
  C L(t, pi);
  C seed;
  if (s < 2.0) {
    seed = branch_series(C(0.0, std::sqrt(2.0 * std::expm1(s)))) - 1.0;
  } else {
    C lL = std::log(L);
    seed = L - lL + lL / L;
  }
  C w = solve_log(L, seed);
  return {w, w + 1.0};
}

ComplexValue lambert_w_upper_cut(double x) {
  if (std::isnan(x) || !(x < -inv_e)) throw BranchError("upper cut needs x < -1/e");
  return lambert_w_upper_cut_log(std::log(-x)).w;
}

}  // namespace lovelab::specfun
