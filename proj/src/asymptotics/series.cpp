#include "lovelab/series.hpp"

#include "lovelab/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace lovelab::asymptotics {

Rational::Rational(long n, long d) {
  if (d == 0) throw DomainError("zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  long g = std::gcd(n, d);
  if (g == 0) g = 1;
  num = n / g;
  den = d / g;
}

Rational operator+(Rational a, Rational b) { return Rational(a.num * b.den + b.num * a.den, a.den * b.den); }
Rational operator-(Rational a, Rational b) { return Rational(a.num * b.den - b.num * a.den, a.den * b.den); }
Rational operator*(Rational a, Rational b) { return Rational(a.num * b.num, a.den * b.den); }

AsymptoticSeries AsymptoticSeries::constant(Variable v, Rational max_power, double c) {
  return monomial(v, max_power, Rational(0), 0, c);
}

AsymptoticSeries AsymptoticSeries::monomial(Variable v, Rational max_power, Rational p, int q, double c) {
  AsymptoticSeries s(v, max_power);
  s.add_term(p, q, c);
  return s;
}

void AsymptoticSeries::add_term(Rational p, int q, double c) {
  if (q < 0) throw DomainError("negative log power");
  if (max_power_ < p) return;
  auto it = std::find_if(terms_.begin(), terms_.end(),
                         [&](const SeriesTerm& t) { return t.power == p && t.log_power == q; });
  if (it != terms_.end()) {
    it->coefficient += c;
    return;
  }
  terms_.push_back({p, q, c});
  std::sort(terms_.begin(), terms_.end(), [](const SeriesTerm& a, const SeriesTerm& b) {
    if (!(a.power == b.power)) return a.power < b.power;
    return a.log_power > b.log_power;
  });
}

double AsymptoticSeries::coefficient(Rational p, int q) const {
  for (auto& t : terms_)
    if (t.power == p && t.log_power == q) return t.coefficient;
  return 0.0;
}

double AsymptoticSeries::evaluate(double t) const {
  if (!(t > 0.0)) throw DomainError("series evaluated at t <= 0");
  double L = std::log(1.0 / t), sum = 0.0;
  for (auto& term : terms_) sum += term.coefficient * std::pow(t, term.power.value()) * std::pow(L, term.log_power);
  return sum;
}

Rational AsymptoticSeries::leading_power() const {
  if (terms_.empty()) throw DomainError("empty series");
  return terms_.front().power;
}

void AsymptoticSeries::check_compatible(const AsymptoticSeries& o) const {
  if (variable_ != o.variable_) throw DomainError("series in different variables");
}

AsymptoticSeries AsymptoticSeries::operator+(const AsymptoticSeries& o) const {
  check_compatible(o);
  AsymptoticSeries r(variable_, std::min(max_power_, o.max_power_));
  for (auto& t : terms_) r.add_term(t.power, t.log_power, t.coefficient);
  for (auto& t : o.terms_) r.add_term(t.power, t.log_power, t.coefficient);
  return r;
}

AsymptoticSeries AsymptoticSeries::operator-(const AsymptoticSeries& o) const { return *this + o * -1.0; }

AsymptoticSeries AsymptoticSeries::operator*(const AsymptoticSeries& o) const {
  check_compatible(o);
  AsymptoticSeries r(variable_, std::min(max_power_, o.max_power_));
  for (auto& a : terms_)
    for (auto& b : o.terms_) r.add_term(a.power + b.power, a.log_power + b.log_power, a.coefficient * b.coefficient);
  return r;
}

AsymptoticSeries AsymptoticSeries::operator*(double c) const {
  AsymptoticSeries r(variable_, max_power_);
  for (auto& t : terms_) r.add_term(t.power, t.log_power, t.coefficient * c);
  return r;
}

AsymptoticSeries AsymptoticSeries::pow1p(const AsymptoticSeries& u, double m) {
  AsymptoticSeries r = constant(u.variable_, u.max_power_, 1.0);
  if (u.terms_.empty()) return r;
  if (!(Rational(0) < u.leading_power())) throw DomainError("pow1p needs a vanishing argument");
  AsymptoticSeries uk = r;
  double binom = 1.0;
  for (int k = 1; !uk.terms_.empty(); ++k) {
    uk = uk * u;
    binom *= (m - (k - 1)) / k;
    r = r + uk * binom;
  }
  return r;
}

AsymptoticSeries AsymptoticSeries::log1p(const AsymptoticSeries& u) {
  AsymptoticSeries r(u.variable_, u.max_power_);
  if (u.terms_.empty()) return r;
  if (!(Rational(0) < u.leading_power())) throw DomainError("log1p needs a vanishing argument");
  AsymptoticSeries uk = constant(u.variable_, u.max_power_, 1.0);
  for (int k = 1; !uk.terms_.empty(); ++k) {
    uk = uk * u;
    r = r + uk * ((k % 2 ? 1.0 : -1.0) / k);
  }
  return r;
}

std::string AsymptoticSeries::to_string() const {
  const char* name = variable_ == Variable::gamma ? "g" : variable_ == Variable::kappa ? "k" : "e";
  std::ostringstream os;
  os.precision(12);
  for (auto& t : terms_) {
    os << (t.coefficient < 0 ? " - " : " + ") << std::abs(t.coefficient) << " " << name << "^(" << t.power.num;
    if (t.power.den != 1) os << "/" << t.power.den;
    os << ")";
    if (t.log_power) os << " L^" << t.log_power;
  }
  return os.str();
}

}  // namespace lovelab::asymptotics
