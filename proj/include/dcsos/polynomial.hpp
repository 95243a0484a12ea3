#pragma once

// Multivariate polynomials in canonical form: a grlex-ordered map from
// exponent vectors to nonzero exact rational coefficients over a variable
// universe fixed at construction. Values are immutable in spirit; every
// operation returns a fresh polynomial and all arithmetic is exact.

#include <map>
#include <span>
#include <string>
#include <vector>

#include "dcsos/exponent.hpp"
#include "dcsos/rational.hpp"

namespace dcsos {

struct Monomial {
  Rational coeff;
  Exponent exponent;
};

class Polynomial {
 public:
  using TermMap = std::map<Exponent, Rational, GrlexLess>;

  Polynomial() : nvars_(0) {}
  explicit Polynomial(int nvars);

  static Polynomial constant(int nvars, const Rational& c);
  static Polynomial variable(int nvars, int index);  // 0-based index
  static Polynomial monomial(int nvars, const Rational& c, const Exponent& alpha);

  int nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t term_count() const { return terms_.size(); }

  // Degree of the zero polynomial is 0 by convention.
  int degree() const;

  Rational coeff(const Exponent& alpha) const;
  Rational constant_term() const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, const Polynomial& p);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);

  // Adds c * x^alpha * p, fusing the scale and shift into the accumulation.
  void add_scaled(const Rational& c, const Polynomial& p);
  void add_term(const Exponent& alpha, const Rational& c);

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  // Arbitrary total order so polynomials can key ordered containers.
  friend bool operator<(const Polynomial& a, const Polynomial& b);

  Rational evaluate(std::span<const Rational> point) const;
  double evaluate(std::span<const double> point) const;

  Polynomial derivative(int var) const;

  // Row-major n*n matrix of second partials; symmetric by construction.
  std::vector<Polynomial> hessian() const;

 private:
  void check_dims(const Polynomial& o) const;

  int nvars_;
  TermMap terms_;  // invariant: no zero coefficients stored
};

Polynomial pow(const Polynomial& p, unsigned k);

}  // namespace dcsos
