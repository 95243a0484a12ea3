#pragma once

// Difference-of-sums-of-squares decompositions and the parity-based
// algorithms that produce them. A decomposition denotes
//
//   sum(positive) - sum(negative)
//
// where each entry is weight * base^2 with weight > 0. Exact decompositions
// carry rational squares; the spectral routes emit floating squares instead.

#include <vector>

#include "dcsos/numeric_poly.hpp"
#include "dcsos/polynomial.hpp"

namespace dcsos {

struct SquareTerm {
  Rational weight;  // > 0
  Polynomial base;
};

struct NumericSquareTerm {
  double weight;  // > 0
  NumericPolynomial base;
};

enum class Exactness { exact, floating };

struct DsosDecomposition {
  int nvars = 0;
  Exactness exactness = Exactness::exact;
  std::vector<SquareTerm> positive, negative;
  std::vector<NumericSquareTerm> numeric_positive, numeric_negative;

  std::size_t square_count() const {
    return exactness == Exactness::exact ? positive.size() + negative.size()
                                         : numeric_positive.size() + numeric_negative.size();
  }

  static DsosDecomposition zero(int nvars) {
    DsosDecomposition d;
    d.nvars = nvars;
    return d;
  }
};

// Product rule: all pairwise products of squares, like-signed pairs to the
// positive part and cross pairs to the negative part. Both inputs must be
// exact. The result has |a| * |b| squares.
DsosDecomposition dsos_product(const DsosDecomposition& a, const DsosDecomposition& b);

// Parity decomposition of a single monomial (three squares): writes the odd
// part o through the identity o = (o+s)^2/(2s) - (o^2+s^2)/(2s) and carries
// the even root through. Component degree <= deg(m) + deg(o).
DsosDecomposition dsos_parity_monomial(const Monomial& m, int nvars, const Rational& s,
                                       const ParitySplit& split);

// Squarefree odd parts: pair the variables two by two (an odd count pairs
// the last variable with 1), decompose each pair as a difference of two
// squares, and multiply the pairs left to right with the product rule.
// Component degree is 2*ceil(deg(o)/2), square count <= 2^ceil(deg(o)/2).
DsosDecomposition procedure_d(const Exponent& odd_part);

// Improved parity decomposition: minimal split, procedure_d on the odd part,
// then multiply through by the even root squared. Component degree is
// exactly 2*ceil(deg(m)/2).
DsosDecomposition dsos_parity_improved(const Monomial& m, int nvars);

// Per-monomial decompositions concatenated by linearity (grlex order).
DsosDecomposition dsos_parity_polynomial(const Polynomial& p, const Rational& s);
DsosDecomposition dsos_parity_improved_polynomial(const Polynomial& p);

}  // namespace dcsos
