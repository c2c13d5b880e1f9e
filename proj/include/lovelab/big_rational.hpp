#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace lovelab::conjectures {

// Exact fraction in lowest terms with positive denominator.
class BigRational {
 public:
  BigRational() = default;
  BigRational(long long n, long long d = 1);

  std::string numerator() const;
  std::string denominator() const;
  std::string to_string() const;  // "n/d", or "n" when d = 1
  double to_double() const;

  friend BigRational operator+(const BigRational& a, const BigRational& b);
  friend BigRational operator-(const BigRational& a, const BigRational& b);
  friend BigRational operator*(const BigRational& a, const BigRational& b);
  friend BigRational operator/(const BigRational& a, const BigRational& b);
  friend bool operator==(const BigRational& a, const BigRational& b) { return a.v_ == b.v_; }

 private:
  explicit BigRational(boost::multiprecision::cpp_rational v) : v_(std::move(v)) {}
  boost::multiprecision::cpp_rational v_;
};

}  // namespace lovelab::conjectures
