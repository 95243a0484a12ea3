#pragma once

// Exact rational scalar, the coefficient type of every polynomial in the
// library. Backed by GMP; values are always kept in lowest terms with a
// positive denominator, and no operation ever rounds.

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "dcsos/errors.hpp"

namespace dcsos {

class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design, mirrors integers
  Rational(int n) : v_(n) {}   // NOLINT
  Rational(long n, long d) : v_(n, d) {
    if (d == 0) throw ParameterError("rational with zero denominator");
    v_.canonicalize();
  }

  // Accepts "p" or "p/q" with arbitrary-precision decimal integers.
  static Rational from_string(const std::string& text) {
    Rational r;
    auto slash = text.find('/');
    try {
      if (slash == std::string::npos) {
        r.v_ = mpq_class(mpz_class(text));
      } else {
        mpz_class num(text.substr(0, slash));
        mpz_class den(text.substr(slash + 1));
        if (den == 0) throw ParameterError("rational with zero denominator");
        r.v_ = mpq_class(num) / mpq_class(den);
      }
    } catch (const std::invalid_argument&) {
      throw ParameterError("malformed rational literal: " + text);
    }
    return r;
  }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational abs() const {
    Rational r;
    r.v_ = ::abs(v_);
    return r;
  }

  Rational reciprocal() const {
    if (is_zero()) throw ParameterError("reciprocal of zero");
    Rational r;
    r.v_ = 1 / v_;
    return r;
  }

  double to_double() const { return v_.get_d(); }

  // "p" when the denominator is 1, otherwise "p/q".
  std::string str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

  std::string numerator_str() const { return v_.get_num().get_str(); }
  std::string denominator_str() const { return v_.get_den().get_str(); }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.v_ + b.v_); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.v_ - b.v_); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.v_ * b.v_); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw ParameterError("division by zero rational");
    return Rational(a.v_ / b.v_);
  }
  Rational operator-() const { return Rational(-v_); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  static Rational pow(const Rational& base, unsigned k) {
    Rational acc(1), sq = base;
    while (k > 0) {
      if (k & 1u) acc *= sq;
      sq *= sq;
      k >>= 1u;
    }
    return acc;
  }

  static Rational factorial(unsigned n) {
    Rational r(1);
    for (unsigned i = 2; i <= n; ++i) r *= Rational(static_cast<long>(i));
    return r;
  }

 private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}

  mpq_class v_;  // canonical: lowest terms, positive denominator
};

}  // namespace dcsos
