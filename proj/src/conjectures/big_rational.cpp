#include "lovelab/big_rational.hpp"

#include "lovelab/errors.hpp"

namespace lovelab::conjectures {

namespace mp = boost::multiprecision;

BigRational::BigRational(long long n, long long d) {
  if (d == 0) throw DomainError("BigRational with zero denominator");
  mp::cpp_int num(n), den(d);
  if (den < 0) {
    num = -num;
    den = -den;
  }
  v_ = mp::cpp_rational(num, den);
}

std::string BigRational::numerator() const { return mp::numerator(v_).str(); }
std::string BigRational::denominator() const { return mp::denominator(v_).str(); }

std::string BigRational::to_string() const {
  if (mp::denominator(v_) == 1) return numerator();
  return numerator() + "/" + denominator();
}

double BigRational::to_double() const { return v_.convert_to<double>(); }

BigRational operator+(const BigRational& a, const BigRational& b) { return BigRational(a.v_ + b.v_); }
BigRational operator-(const BigRational& a, const BigRational& b) { return BigRational(a.v_ - b.v_); }
BigRational operator*(const BigRational& a, const BigRational& b) { return BigRational(a.v_ * b.v_); }

BigRational operator/(const BigRational& a, const BigRational& b) {
  if (b.v_ == 0) throw DomainError("BigRational division by zero");
  return BigRational(a.v_ / b.v_);
}

}  // namespace lovelab::conjectures
