#pragma once

// Exponent vectors of monomials over a fixed variable universe, the graded
// lexicographic order used for every canonical iteration, and parity
// separation of a monomial into an odd part times a perfect square.

#include <cstdint>
#include <vector>

#include "dcsos/errors.hpp"

namespace dcsos {

class Exponent {
 public:
  Exponent() = default;
  explicit Exponent(int nvars) : a_(static_cast<std::size_t>(nvars), 0u) {}
  explicit Exponent(std::vector<unsigned> alpha) : a_(std::move(alpha)) {}
  Exponent(std::initializer_list<unsigned> alpha) : a_(alpha) {}

  int nvars() const { return static_cast<int>(a_.size()); }
  unsigned operator[](int i) const { return a_[static_cast<std::size_t>(i)]; }
  void set(int i, unsigned v) { a_[static_cast<std::size_t>(i)] = v; }

  int degree() const {
    long d = 0;
    for (unsigned e : a_) d += e;
    return static_cast<int>(d);
  }

  bool is_constant() const { return degree() == 0; }

  bool all_even() const {
    for (unsigned e : a_)
      if (e % 2 != 0) return false;
    return true;
  }

  bool is_squarefree() const {
    for (unsigned e : a_)
      if (e > 1) return false;
    return true;
  }

  // Indices (0-based) of variables carrying an odd exponent.
  std::vector<int> odd_indices() const {
    std::vector<int> idx;
    for (int i = 0; i < nvars(); ++i)
      if (a_[static_cast<std::size_t>(i)] % 2 == 1) idx.push_back(i);
    return idx;
  }

  // Monomial multiplication.
  Exponent operator+(const Exponent& o) const {
    check_dims(o);
    Exponent r = *this;
    for (int i = 0; i < nvars(); ++i) r.a_[static_cast<std::size_t>(i)] += o[i];
    return r;
  }

  bool divides(const Exponent& o) const {
    check_dims(o);
    for (int i = 0; i < nvars(); ++i)
      if ((*this)[i] > o[i]) return false;
    return true;
  }

  Exponent minus(const Exponent& o) const {
    if (!o.divides(*this)) throw SeparationError("exponent subtraction would go negative");
    Exponent r = *this;
    for (int i = 0; i < nvars(); ++i) r.a_[static_cast<std::size_t>(i)] -= o[i];
    return r;
  }

  // alpha / 2 for an all-even exponent.
  Exponent half() const {
    if (!all_even()) throw SeparationError("halving an exponent with odd entries");
    Exponent r = *this;
    for (auto& e : r.a_) e /= 2;
    return r;
  }

  Exponent floor_half() const {
    Exponent r = *this;
    for (auto& e : r.a_) e /= 2;
    return r;
  }

  friend bool operator==(const Exponent& a, const Exponent& b) { return a.a_ == b.a_; }
  friend bool operator!=(const Exponent& a, const Exponent& b) { return a.a_ != b.a_; }

  const std::vector<unsigned>& raw() const { return a_; }

 private:
  void check_dims(const Exponent& o) const {
    if (nvars() != o.nvars())
      throw DimensionError("exponents over different variable universes");
  }

  std::vector<unsigned> a_;
};

// Graded lexicographic order: total degree first, then lexicographic with
// x1 weighing heaviest. Ascending iteration over a map with this comparator
// matches the display order used throughout.
struct GrlexLess {
  bool operator()(const Exponent& a, const Exponent& b) const {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    // same degree: lex, where a larger leading exponent means a later term
    for (int i = 0; i < a.nvars() && i < b.nvars(); ++i) {
      if (a[i] != b[i]) return a[i] < b[i];
    }
    return a.nvars() < b.nvars();
  }
};

// A monomial exponent factored as odd_part * even_root^2; odd_index_set
// records which variables carry odd degree in the original exponent.
struct ParitySplit {
  Exponent odd_part;
  Exponent even_root;
  std::vector<int> odd_index_set;

  Exponent recombined() const { return odd_part + even_root + even_root; }
};

// Minimal-degree parity separation: the odd part takes exactly one factor of
// each odd-degree variable, so deg(odd_part) = |odd_index_set|.
inline ParitySplit parity_separate(const Exponent& alpha) {
  ParitySplit s;
  s.odd_index_set = alpha.odd_indices();
  Exponent o(alpha.nvars());
  for (int i : s.odd_index_set) o.set(i, 1);
  s.odd_part = o;
  s.even_root = alpha.minus(o).half();
  return s;
}

// Parity separation with a caller-chosen odd part; the quotient alpha/odd
// must have all-even exponents.
inline ParitySplit parity_separate(const Exponent& alpha, const Exponent& odd_part) {
  if (!odd_part.divides(alpha))
    throw SeparationError("odd part does not divide the monomial");
  Exponent rest = alpha.minus(odd_part);
  if (!rest.all_even())
    throw SeparationError("quotient by the odd part is not a perfect square");
  ParitySplit s;
  s.odd_part = odd_part;
  s.even_root = rest.half();
  s.odd_index_set = alpha.odd_indices();
  return s;
}

}  // namespace dcsos
