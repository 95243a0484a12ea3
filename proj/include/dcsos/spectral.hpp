#pragma once

// Spectral route: monomial bases, Gram matrices and their eigendecomposition.
// A valid basis b comes with a symmetric Q such that p = b^T Q b exactly;
// diagonalizing Q = P diag(lambda) P^T turns p into a signed combination of
// squares lambda_i * (P^T b)_i^2. Floating point enters here and only here.

#include <utility>
#include <vector>

#include "dcsos/dsos.hpp"
#include "dcsos/polynomial.hpp"

namespace dcsos {

struct Basis {
  int nvars = 0;
  std::vector<Exponent> elements;  // pairwise distinct

  int size() const { return static_cast<int>(elements.size()); }
  int degree() const {
    int d = 0;
    for (const auto& e : elements) d = std::max(d, e.degree());
    return d;
  }
};

// For each monomial of p, the two basis elements whose product carries it in
// the additive Gram construction.
using PairMap = std::map<Exponent, std::pair<Exponent, Exponent>, GrlexLess>;

struct GramMatrix {
  int size = 0;
  std::vector<Rational> entries;  // row-major, symmetric

  const Rational& at(int i, int j) const { return entries[static_cast<std::size_t>(i) * size + j]; }
  Rational& at(int i, int j) { return entries[static_cast<std::size_t>(i) * size + j]; }
};

struct EigenData {
  int size = 0;
  std::vector<double> values;   // descending
  std::vector<double> vectors;  // row-major; column k is the eigenvector of values[k]
  std::vector<int> kept;        // indices with |lambda| above the zero threshold
  int sweeps = 0;
  double max_off_diagonal = 0.0;

  double vec(int row, int col) const { return vectors[static_cast<std::size_t>(row) * size + col]; }
};

// All monomials of p plus the mandatory element 1, in grlex order.
Basis direct_basis(const Polynomial& p);

struct MinimalBasis {
  Basis basis;
  PairMap pairs;
};

// Union of per-monomial minimal bases, degree <= ceil(deg(p)/2); the pair
// map records each monomial's designated product.
MinimalBasis minimal_basis(const Polynomial& p);

// First representable (i <= j) product pair per monomial, scanning in basis
// order. Throws BasisError when a monomial has no pair (invalid basis).
PairMap find_pair_assignments(const Polynomial& p, const Basis& b);

// Additive Gram construction: each monomial lands on its designated pair,
// halved across the two off-diagonal slots. The identity p = b^T Q b is
// re-checked symbolically before returning.
GramMatrix gram_matrix(const Polynomial& p, const Basis& b, const PairMap& pairs);

// b^T Q b expanded exactly.
Polynomial expand_gram(const Basis& b, const GramMatrix& q);

// Cyclic Jacobi rotations until the largest off-diagonal entry falls below
// 1e-12 or 100 sweeps pass (non-convergence throws NumericalError).
EigenData jacobi_eigen(const GramMatrix& q, double zero_tol = 1e-9);

// Low-level variant on a plain symmetric matrix (used for Hessian spot
// checks as well). Returns eigenvalues, descending; eigenvectors optional.
std::vector<double> jacobi_eigenvalues(std::vector<double> a, int n,
                                       std::vector<double>* vectors = nullptr, int* sweeps = nullptr,
                                       double* max_off = nullptr);

struct DirectSpectralInfo {
  Basis basis;
  double lambda_plus = 0.0;
  double lambda_minus = 0.0;
  std::vector<double> v_plus;   // normalized eigenvectors, closed form
  std::vector<double> v_minus;
};

// Direct-basis route: the Gram matrix has an arrow shape with exactly two
// nonzero eigenvalues in closed form, so no iteration is needed. Exactly two
// squares; component degree <= 2 deg(p). Constant-only input is degenerate.
DsosDecomposition dsos_spectral_direct(const Polynomial& p, DirectSpectralInfo* info = nullptr);

struct SpectralTrace {
  Basis basis;
  GramMatrix gram;
  EigenData eigen;
};

// Generic spectral route with a caller-supplied valid basis.
DsosDecomposition dsos_spectral_custom(const Polynomial& p, const Basis& b,
                                       SpectralTrace* trace = nullptr);

// Minimal-basis route; component degree is exactly 2*ceil(deg(p)/2).
DsosDecomposition dsos_spectral_minimal(const Polynomial& p, SpectralTrace* trace = nullptr);

}  // namespace dcsos
