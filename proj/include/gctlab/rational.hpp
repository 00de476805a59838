#pragma once

#include <string>

#include "gctlab/bigint.hpp"
#include "gctlab/errors.hpp"

namespace gctlab {

// Exact rational, always normalized (gcd 1, positive denominator). Only the
// power-sum transition coefficients need fractions; every externally visible
// quantity in this project is an integer and is converted back with
// to_integer(), which refuses to round.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(Integer n) : num_(std::move(n)), den_(1) {}  // NOLINT: implicit
  Rational(long long n) : num_(n), den_(1) {}           // NOLINT: implicit

  Rational(Integer n, Integer d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw invalid_input_error("rational with zero denominator");
    normalize();
  }

  const Integer& num() const { return num_; }
  const Integer& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_integer() const { return den_ == Integer(1); }

  Integer to_integer() const {
    if (!is_integer())
      throw verification_error("expected integral value, got " + str());
    return num_;
  }

  std::string str() const {
    return is_integer() ? num_.str() : num_.str() + "/" + den_.str();
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_.is_zero()) throw invalid_input_error("rational division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }

  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  Integer num_;
  Integer den_;

  void normalize() {
    if (den_.sign() < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    if (num_.is_zero()) {
      den_ = 1;
      return;
    }
    Integer g = Integer::gcd(num_, den_);
    num_ = num_.exact_div(g);
    den_ = den_.exact_div(g);
  }
};

}  // namespace gctlab
