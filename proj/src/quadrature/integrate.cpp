#include "lovelab/errors.hpp"
#include "lovelab/quadrature.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <string>

namespace lovelab::quadrature {

namespace {

constexpr double pi = std::numbers::pi;

// Kronrod 15 / Gauss 7 nodes and weights on [-1, 1]
constexpr double xgk[8] = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                           0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                           0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                           0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double wgk[8] = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                           0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                           0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                           0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double wg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                          0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a, b, value, error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

Segment gk15(const Integrand& f, double a, double b) {
  double c = 0.5 * (a + b), h = 0.5 * (b - a);
  double fc = f(c);
  double k = fc * wgk[7], g = fc * wg[3];
  for (int j = 0; j < 7; ++j) {
    double d = h * xgk[j];
    double s = f(c - d) + f(c + d);
    k += wgk[j] * s;
    if (j % 2 == 1) g += wg[j / 2] * s;
  }
  return {a, b, k * h, std::abs((k - g) * h)};
}

double scale_tol(double tol, double value) { return tol * std::max(1.0, std::abs(value)); }

Estimate adaptive(const Integrand& f, double a, double b, double tol) {
  std::priority_queue<Segment> heap;
  Segment first = gk15(f, a, b);
  heap.push(first);
  double value = first.value, error = first.error;
  for (int it = 0; it < 5000; ++it) {
    if (error <= scale_tol(tol, value)) return {value, error};
    Segment s = heap.top();
    heap.pop();
    double m = 0.5 * (s.a + s.b);
    if (!(m > s.a && m < s.b)) {
      heap.push(s);
      break;
    }
    Segment l = gk15(f, s.a, m), r = gk15(f, m, s.b);
    value += l.value + r.value - s.value;
    error += l.error + r.error - s.error;
    heap.push(l);
    heap.push(r);
  }
  if (error <= scale_tol(tol, value)) return {value, error};
  // recompute from the leaves to shed accumulated rounding
  double v = 0.0, e = 0.0;
  while (!heap.empty()) {
    v += heap.top().value;
    e += heap.top().error;
    heap.pop();
  }
  if (e <= scale_tol(tol, v)) return {v, e};
  throw ConvergenceError("adaptive quadrature did not reach tolerance", v);
}

// Endpoint-distance form: nodes never round onto a singular endpoint.
Estimate tanh_sinh(const Integrand& f, double a, double b, double tol) {
  const double len = b - a;
  double abs_total = 0.0;
  auto side_sum = [&](double t) {
    // contributions from +t and -t
    double u = 0.5 * pi * std::sinh(t);
    double e = std::exp(-2.0 * u);
    double d = len * e / (1.0 + e);  // distance to the nearer endpoint
    double w = len * pi * std::cosh(t) * e / ((1.0 + e) * (1.0 + e));
    if (!(w > 1e-300) || !(d > 0.0)) return std::pair<double, bool>{0.0, false};
    double xl = a + d, xr = b - d, sum = 0.0;
    bool any = false;
    if (xl > a) { double v = f(xl); sum += v; abs_total += w * std::abs(v); any = true; }
    if (xr < b) { double v = f(xr); sum += v; abs_total += w * std::abs(v); any = true; }
    return std::pair<double, bool>{w * sum, any};
  };
  auto level_sum = [&](double h, bool odd_only) {
    double sum = 0.0;
    if (!odd_only) {
      double v = len * 0.25 * pi * f(a + 0.5 * len);
      sum += v;
      abs_total += std::abs(v);
    }
    for (int k = 1;; ++k) {
      if (odd_only && k % 2 == 0) continue;
      double t = k * h;
      if (t > 7.0) break;
      auto [s, any] = side_sum(t);
      if (!any) break;
      sum += s;
    }
    return sum;
  };
  double h = 1.0;
  double total = level_sum(h, false);
  double value = h * total, prev = value, diff = INFINITY;
  for (int level = 1; level <= 12; ++level) {
    h *= 0.5;
    total += level_sum(h, true);
    prev = value;
    value = h * total;
    diff = std::abs(value - prev);
    if (level >= 3 && diff <= scale_tol(tol, value)) return {value, diff};
    // roundoff floor
    if (level >= 5 && diff <= 128 * std::numeric_limits<double>::epsilon() * h * abs_total) return {value, diff};
  }
  throw ConvergenceError("tanh-sinh did not stagnate within 12 levels (last change " +
                             std::to_string(diff) + ")",
                         value);
}

}  // namespace

Estimate integrate(const Integrand& f, double a, double b, double tol, Scheme scheme) {
  if (!(a < b)) throw DomainError("integrate needs a < b");
  if (!(tol > 0.0)) throw DomainError("integrate needs tol > 0");
  return scheme == Scheme::tanh_sinh ? tanh_sinh(f, a, b, tol) : adaptive(f, a, b, tol);
}

Estimate integrate_semi_infinite(const Integrand& f, double a, double tol, double scale) {
  if (!(tol > 0.0) || !(scale > 0.0)) throw DomainError("integrate_semi_infinite needs tol, scale > 0");
  double sum = 0.0, err = 0.0, lo = a, width = scale;
  double last = INFINITY;
  int quiet = 0, stalled = 0;
  for (int k = 0; k < 200; ++k) {
    Estimate p = adaptive(f, lo, lo + width, 0.1 * tol);
    sum += p.value;
    err += p.error;
    double mag = std::abs(p.value);
    if (mag <= 0.05 * scale_tol(tol, sum)) {
      if (++quiet >= 2) return {sum, err + mag};
    } else {
      quiet = 0;
    }
    stalled = (k > 8 && mag >= 0.9 * last) ? stalled + 1 : 0;
    if (stalled >= 8) throw DivergenceError("semi-infinite integrand does not decay");
    last = mag;
    lo += width;
    width *= 2.0;
  }
  throw DivergenceError("semi-infinite integral did not converge");
}

}  // namespace lovelab::quadrature
