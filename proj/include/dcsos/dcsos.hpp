#pragma once

// Difference-of-convex-sums-of-squares decompositions. Components are never
// tested for convexity (that is NP-hard in general); instead every emitted
// term carries a certificate built from a grammar that is convex and
// nonnegative by construction:
//
//   affine_square  (affine)^2
//   even_power     x_i^(2k)
//   scale          c * child,          c >= 0
//   sum            child_1 + ... + child_m
//   power          child^k,            k >= 1
//
// The denoted polynomial of any certificate is recoverable by exact
// expansion, which is how every decomposition here is verified.

#include <map>
#include <memory>
#include <vector>

#include "dcsos/polynomial.hpp"

namespace dcsos {

class ConvexCertificate {
 public:
  enum class Kind { affine_square, even_power, scale, sum, power };

  static ConvexCertificate affine_square(Polynomial affine);
  static ConvexCertificate even_power(int nvars, int var, unsigned exponent);
  static ConvexCertificate scale(Rational c, ConvexCertificate child);
  static ConvexCertificate sum(int nvars, std::vector<ConvexCertificate> children);
  static ConvexCertificate power(ConvexCertificate child, unsigned k);

  Kind kind() const { return node_->kind; }
  int nvars() const { return node_->nvars; }

  // Degree of the denoted polynomial. Children are nonnegative, so sums
  // never cancel leading terms and the structural degree is exact.
  int degree() const { return node_->degree; }

  const Polynomial& affine() const { return node_->affine; }
  int var() const { return node_->var; }
  unsigned exponent() const { return node_->exponent; }
  const Rational& factor() const { return node_->factor; }
  const std::vector<ConvexCertificate>& children() const { return node_->children; }

  // Exact expansion; the cache memoizes repeated power computations across
  // one decomposition (identical bases recur heavily in subset expansions).
  struct ExpansionCache {
    std::map<std::pair<Polynomial, unsigned>, Polynomial> powers;
  };
  Polynomial expand(ExpansionCache* cache = nullptr) const;

 private:
  struct Node {
    Kind kind;
    int nvars = 0;
    int degree = 0;
    Polynomial affine;                        // affine_square
    int var = -1;                             // even_power
    unsigned exponent = 0;                    // even_power / power
    Rational factor;                          // scale
    std::vector<ConvexCertificate> children;  // scale/power: one; sum: many
  };

  explicit ConvexCertificate(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

struct WeightedCertificate {
  Rational weight;  // > 0
  ConvexCertificate certificate;
};

// Denotes sum(g) - sum(h); both components are convex and nonnegative.
struct DcsosDecomposition {
  int nvars = 0;
  std::vector<WeightedCertificate> g, h;

  std::size_t square_count() const { return g.size() + h.size(); }

  static DcsosDecomposition zero(int nvars) {
    DcsosDecomposition d;
    d.nvars = nvars;
    return d;
  }
};

// Max degree over both components (0 for the empty decomposition).
int component_degree(const DcsosDecomposition& d);

// The two printed forms for x_i*x_j: a difference of two affine squares, or
// one affine square minus a sum of pure squares.
enum class XYForm { difference_of_squares, square_minus_even };

DcsosDecomposition elementary_xy(int nvars, int i, int j,
                                 XYForm form = XYForm::difference_of_squares);
DcsosDecomposition elementary_x(int nvars, int i);
DcsosDecomposition elementary_even(int nvars, int i, unsigned exponent);

// Product rule: with a = p1 - p2 and b = q1 - q2 (component sums),
//   a*b = 1/2[(p1+q1)^2 + (p2+q2)^2] - 1/2[(p1+q2)^2 + (p2+q1)^2],
// emitted as power-2 certificates over sum nodes. Squares whose inner sum is
// empty denote zero and are dropped, so at most 4 squares result.
DcsosDecomposition dcsos_product(const DcsosDecomposition& a, const DcsosDecomposition& b);

using WorkList = std::vector<DcsosDecomposition>;

enum class EvenPartMode {
  per_square,  // each even variable contributes floor(alpha_i/2) copies of x_i^2
  folded,      // one x_i^(2*floor(alpha_i/2)) item per even variable
};

// Separation of x^alpha into elementary items: minimal parity split, odd
// variables paired as in procedure_d, even part emitted as pure squares.
// Every item has component degree 2 (or the folded even degree).
WorkList procedure_s(const Exponent& alpha, EvenPartMode mode = EvenPartMode::per_square);

// Repeatedly multiplies the two smallest-degree items (stable sort by
// component degree) until one remains.
DcsosDecomposition procedure_m(WorkList items);

// Naive multiplication order; exposed for the order-sensitivity contrast.
DcsosDecomposition multiply_left_to_right(WorkList items);

// Parity DCSOS decomposition of a monomial; improved = true routes the item
// list through procedure_m, giving component degree <= 2^ceil(log2(deg)).
DcsosDecomposition dcsos_parity_monomial(const Monomial& m, int nvars, bool improved);

// Expansion of a product of certified-convex factors through the
// inclusion-exclusion identity
//   prod p_i = 1/n! * sum_{A nonempty} (-1)^(|A|+n) (sum_{j in A} p_j)^n,
// yielding 2^n - 1 power-n certificates.
DcsosDecomposition multilinear_expand(const std::vector<ConvexCertificate>& factors);

// Minimal-degree decomposition: procedure_s items (g_i - h_i), then one
// multilinear expansion per subset of selectable h_i, skipping subsets with
// a zero factor. Component degree is exactly 2*ceil(deg(m)/2).
DcsosDecomposition dcsos_minimal_monomial(const Monomial& m, int nvars);

// Direct minimal-degree formulation: lists the variables of x^alpha with
// multiplicity (padded by 1 when the degree is odd) and applies the identity
// above with even exponent 2*ceil(deg/2), certified as powers of one affine
// square. No procedure_s involved.
DcsosDecomposition dcsos_minimal_direct(const Monomial& m, int nvars);

enum class DcsosAlgo { parity, parity_improved, minimal, minimal_direct };

DcsosDecomposition dcsos_polynomial(const Polynomial& p, DcsosAlgo algo);

}  // namespace dcsos
