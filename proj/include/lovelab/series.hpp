#pragma once

#include <string>
#include <vector>

namespace lovelab::asymptotics {

// Small exact fraction used for series exponents.
struct Rational {
  long num = 0;
  long den = 1;

  Rational() = default;
  Rational(long n, long d = 1);
  double value() const { return double(num) / double(den); }

  friend Rational operator+(Rational a, Rational b);
  friend Rational operator-(Rational a, Rational b);
  friend Rational operator*(Rational a, Rational b);
  friend bool operator==(Rational a, Rational b) { return a.num == b.num && a.den == b.den; }
  friend bool operator<(Rational a, Rational b) { return a.num * b.den < b.num * a.den; }
  friend bool operator<=(Rational a, Rational b) { return !(b < a); }
};

enum class Variable { epsilon, kappa, gamma };

struct SeriesTerm {
  Rational power;
  int log_power;  // power of log(1/t)
  double coefficient;
};

// Truncated expansion sum c t^p log(1/t)^q as t -> 0+, kept sorted by
// increasing p, then decreasing q; terms with p above the cap are dropped.
class AsymptoticSeries {
 public:
  AsymptoticSeries(Variable v, Rational max_power) : variable_(v), max_power_(max_power) {}

  static AsymptoticSeries constant(Variable v, Rational max_power, double c);
  static AsymptoticSeries monomial(Variable v, Rational max_power, Rational p, int q, double c);

  Variable variable() const { return variable_; }
  Rational max_power() const { return max_power_; }
  const std::vector<SeriesTerm>& terms() const { return terms_; }

  void add_term(Rational p, int q, double c);
  double coefficient(Rational p, int q) const;
  double evaluate(double t) const;
  // lowest power present; throws if the series is empty
  Rational leading_power() const;

  AsymptoticSeries operator+(const AsymptoticSeries& o) const;
  AsymptoticSeries operator-(const AsymptoticSeries& o) const;
  AsymptoticSeries operator*(const AsymptoticSeries& o) const;
  AsymptoticSeries operator*(double c) const;

  // (1 + u)^m for u with positive leading power
  static AsymptoticSeries pow1p(const AsymptoticSeries& u, double m);
  // log(1 + u) for u with positive leading power
  static AsymptoticSeries log1p(const AsymptoticSeries& u);

  std::string to_string() const;

 private:
  void check_compatible(const AsymptoticSeries& o) const;
  Variable variable_;
  Rational max_power_;
  std::vector<SeriesTerm> terms_;
};

}  // namespace lovelab::asymptotics
