#include "dcsos/polynomial.hpp"

#include <algorithm>

namespace dcsos {

Polynomial::Polynomial(int nvars) : nvars_(nvars) {
  if (nvars < 0) throw DimensionError("negative variable count");
}

Polynomial Polynomial::constant(int nvars, const Rational& c) {
  Polynomial p(nvars);
  if (!c.is_zero()) p.terms_.emplace(Exponent(nvars), c);
  return p;
}

Polynomial Polynomial::variable(int nvars, int index) {
  if (index < 0 || index >= nvars) throw DimensionError("variable index out of range");
  Exponent a(nvars);
  a.set(index, 1);
  Polynomial p(nvars);
  p.terms_.emplace(a, Rational(1));
  return p;
}

Polynomial Polynomial::monomial(int nvars, const Rational& c, const Exponent& alpha) {
  if (alpha.nvars() != nvars) throw DimensionError("exponent length does not match nvars");
  Polynomial p(nvars);
  if (!c.is_zero()) p.terms_.emplace(alpha, c);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_constant());
}

int Polynomial::degree() const {
  if (terms_.empty()) return 0;
  return terms_.rbegin()->first.degree();  // grlex: last term has max degree
}

Rational Polynomial::coeff(const Exponent& alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::constant_term() const { return coeff(Exponent(nvars_)); }

void Polynomial::check_dims(const Polynomial& o) const {
  if (nvars_ != o.nvars_)
    throw DimensionError("polynomials over different variable universes");
}

void Polynomial::add_term(const Exponent& alpha, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(alpha, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_dims(o);
  for (const auto& [a, c] : o.terms_) add_term(a, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_dims(o);
  for (const auto& [a, c] : o.terms_) add_term(a, -c);
  return *this;
}

void Polynomial::add_scaled(const Rational& c, const Polynomial& p) {
  check_dims(p);
  if (c.is_zero()) return;
  for (const auto& [a, pc] : p.terms_) add_term(a, c * pc);
}

Polynomial Polynomial::operator-() const {
  Polynomial r(nvars_);
  for (const auto& [a, c] : terms_) r.terms_.emplace(a, -c);
  return r;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  Polynomial r = a;
  r += b;
  return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  Polynomial r = a;
  r -= b;
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_dims(b);
  Polynomial r(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
  Polynomial r(p.nvars_);
  if (c.is_zero()) return r;
  for (const auto& [a, pc] : p.terms_) r.terms_.emplace(a, c * pc);
  return r;
}

bool operator<(const Polynomial& a, const Polynomial& b) {
  if (a.nvars_ != b.nvars_) return a.nvars_ < b.nvars_;
  auto ia = a.terms_.begin(), ib = b.terms_.begin();
  GrlexLess less;
  for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
    if (less(ia->first, ib->first)) return true;
    if (less(ib->first, ia->first)) return false;
    if (ia->second != ib->second) return ia->second < ib->second;
  }
  return ia == a.terms_.end() && ib != b.terms_.end();
}

Polynomial pow(const Polynomial& p, unsigned k) {
  Polynomial acc = Polynomial::constant(p.nvars(), Rational(1));
  Polynomial sq = p;
  while (k > 0) {
    if (k & 1u) acc = acc * sq;
    sq = sq * sq;
    k >>= 1u;
  }
  return acc;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (static_cast<int>(point.size()) != nvars_)
    throw DimensionError("evaluation point has wrong length");
  Rational total(0);
  for (const auto& [a, c] : terms_) {
    Rational term = c;
    for (int i = 0; i < nvars_; ++i)
      if (a[i] > 0) term *= Rational::pow(point[static_cast<std::size_t>(i)], a[i]);
    total += term;
  }
  return total;
}

double Polynomial::evaluate(std::span<const double> point) const {
  if (static_cast<int>(point.size()) != nvars_)
    throw DimensionError("evaluation point has wrong length");
  double total = 0.0;
  for (const auto& [a, c] : terms_) {
    double term = c.to_double();
    for (int i = 0; i < nvars_; ++i)
      for (unsigned e = 0; e < a[i]; ++e) term *= point[static_cast<std::size_t>(i)];
    total += term;
  }
  return total;
}

Polynomial Polynomial::derivative(int var) const {
  if (var < 0 || var >= nvars_) throw DimensionError("derivative index out of range");
  Polynomial r(nvars_);
  for (const auto& [a, c] : terms_) {
    unsigned e = a[var];
    if (e == 0) continue;
    Exponent na = a;
    na.set(var, e - 1);
    r.add_term(na, c * Rational(static_cast<long>(e)));
  }
  return r;
}

std::vector<Polynomial> Polynomial::hessian() const {
  std::vector<Polynomial> h;
  h.reserve(static_cast<std::size_t>(nvars_) * static_cast<std::size_t>(nvars_));
  std::vector<Polynomial> first;
  first.reserve(static_cast<std::size_t>(nvars_));
  for (int i = 0; i < nvars_; ++i) first.push_back(derivative(i));
  for (int i = 0; i < nvars_; ++i)
    for (int j = 0; j < nvars_; ++j)
      h.push_back(first[static_cast<std::size_t>(i)].derivative(j));
  return h;
}

}  // namespace dcsos
