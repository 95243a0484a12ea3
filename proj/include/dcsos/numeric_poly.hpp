#pragma once

// Floating-coefficient polynomials. Only the spectral decompositions need
// these (eigenvalues are irrational in general); everything else in the
// library stays in exact rationals.

#include <cmath>
#include <map>

#include "dcsos/polynomial.hpp"

namespace dcsos {

class NumericPolynomial {
 public:
  using TermMap = std::map<Exponent, double, GrlexLess>;

  NumericPolynomial() : nvars_(0) {}
  explicit NumericPolynomial(int nvars) : nvars_(nvars) {}

  static NumericPolynomial from_exact(const Polynomial& p) {
    NumericPolynomial r(p.nvars());
    for (const auto& [a, c] : p.terms()) r.terms_.emplace(a, c.to_double());
    return r;
  }

  int nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  void add_term(const Exponent& a, double c) {
    auto [it, inserted] = terms_.emplace(a, c);
    if (!inserted) it->second += c;
  }

  void add_scaled(double c, const NumericPolynomial& p) {
    for (const auto& [a, pc] : p.terms_) add_term(a, c * pc);
  }

  friend NumericPolynomial operator*(const NumericPolynomial& a, const NumericPolynomial& b) {
    NumericPolynomial r(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
  }

  double max_abs_coeff() const {
    double m = 0.0;
    for (const auto& [a, c] : terms_) m = std::max(m, std::fabs(c));
    return m;
  }

  // Degree ignoring coefficients below a relative noise threshold.
  int degree(double rel_tol = 1e-9) const {
    double cutoff = rel_tol * (1.0 + max_abs_coeff());
    int d = 0;
    for (const auto& [a, c] : terms_)
      if (std::fabs(c) > cutoff) d = std::max(d, a.degree());
    return d;
  }

  double evaluate(std::span<const double> point) const {
    double total = 0.0;
    for (const auto& [a, c] : terms_) {
      double term = c;
      for (int i = 0; i < nvars_; ++i)
        for (unsigned e = 0; e < a[i]; ++e) term *= point[static_cast<std::size_t>(i)];
      total += term;
    }
    return total;
  }

 private:
  int nvars_;
  TermMap terms_;
};

}  // namespace dcsos
