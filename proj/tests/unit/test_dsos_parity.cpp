#include <doctest.h>

#include "dcsos/dsos.hpp"
#include "dcsos/errors.hpp"
#include "dcsos/verify.hpp"
#include "test_helpers.hpp"

using namespace dcsos;
using dcsos::testing::P;
using dcsos::testing::small_corpus;

namespace {

int ceil2(int d) { return 2 * ((d + 1) / 2); }

int decomposition_degree(const DsosDecomposition& d) {
  return std::max(expand_component(d.nvars, d.positive).degree(),
                  expand_component(d.nvars, d.negative).degree());
}

}  // namespace

TEST_CASE("parity decomposition reproduces the -2*x1^3*x2^5 example with o = x1^3*x2") {
  Monomial m{Rational(-2), Exponent({3, 5})};
  auto split = parity_separate(m.exponent, Exponent({3, 1}));

  for (Rational s : {Rational(1, 2), Rational(1), Rational(3), Rational(10)}) {
    auto d = dsos_parity_monomial(m, 2, s, split);
    REQUIRE(d.positive.size() == 2);
    REQUIRE(d.negative.size() == 1);
    CHECK(expand_decomposition(d) == P("-2*x1^3*x2^5", 2));
  }

  // with s = 1: -(x1^3*x2^3 + x2^2)^2 + (x1^6*x2^6 + x2^4), term for term
  auto d = dsos_parity_monomial(m, 2, Rational(1), split);
  CHECK(expand_component(2, d.negative) == P("(x1^3*x2^3 + x2^2)^2", 2));
  CHECK(expand_component(2, d.positive) == P("x1^6*x2^6 + x2^4", 2));
  CHECK(decomposition_degree(d) == 12);  // deg(m) + deg(o) = 8 + 4
}

TEST_CASE("parity decomposition edge cases") {
  // a constant monomial: o = 1, e = 1, still exactly 3 squares
  Monomial c{Rational(5), Exponent({0, 0})};
  auto d = dsos_parity_monomial(c, 2, Rational(1), parity_separate(c.exponent));
  CHECK(d.square_count() == 3);
  CHECK(expand_decomposition(d) == P("5", 2));

  // minimal split keeps the degree bound deg(m) + deg(o)
  Monomial m{Rational(5), Exponent({2, 2})};
  auto e = dsos_parity_monomial(m, 2, Rational(1), parity_separate(m.exponent));
  CHECK(expand_decomposition(e) == P("5*x1^2*x2^2", 2));
  CHECK(decomposition_degree(e) <= 4);

  CHECK_THROWS_AS(dsos_parity_monomial(m, 2, Rational(0), parity_separate(m.exponent)),
                  ParameterError);
  CHECK_THROWS_AS(dsos_parity_monomial(m, 2, Rational(-1), parity_separate(m.exponent)),
                  ParameterError);
}

TEST_CASE("procedure_d pairs variables two by two") {
  // even count: {(x1,x2),(x3,x4)}
  auto d = procedure_d(Exponent({1, 1, 1, 1}));
  REQUIRE(d.positive.size() == 2);
  REQUIRE(d.negative.size() == 2);
  CHECK(d.positive[0].base == P("(x1+x2)*(x3+x4)", 4));
  CHECK(d.positive[0].weight == Rational(1, 16));
  CHECK(d.negative[0].base == P("(x1+x2)*(x3-x4)", 4));
  CHECK(expand_decomposition(d) == P("x1*x2*x3*x4", 4));

  // odd count: {(x1,x2),(x3,1)}
  auto t = procedure_d(Exponent({1, 1, 1}));
  CHECK(t.square_count() == 4);
  CHECK(t.positive[0].base == P("(x1+x2)*(x3+1)", 3));
  CHECK(expand_decomposition(t) == P("x1*x2*x3", 3));
  CHECK(decomposition_degree(t) == 4);  // 2*ceil(3/2)

  // single variable: ((x1+1)/2)^2 - ((x1-1)/2)^2
  auto s = procedure_d(Exponent({1}));
  REQUIRE(s.square_count() == 2);
  CHECK(s.positive[0].weight == Rational(1, 4));
  CHECK(s.positive[0].base == P("x1+1", 1));
  CHECK(s.negative[0].base == P("x1-1", 1));
  CHECK(decomposition_degree(s) == 2);

  CHECK_THROWS_AS(procedure_d(Exponent({2, 1})), PreconditionError);
}

TEST_CASE("dsos_product multiplies square lists pairwise") {
  auto dx1 = procedure_d(Exponent({1, 0}));
  auto dx2 = procedure_d(Exponent({0, 1}));

  auto prod = dsos_product(dx1, dx2);
  CHECK(prod.square_count() == 4);
  CHECK(expand_decomposition(prod) == P("x1*x2", 2));

  // the constant 1 is the identity element
  DsosDecomposition one = DsosDecomposition::zero(2);
  one.positive.push_back({Rational(1), P("1", 2)});
  auto same = dsos_product(dx1, one);
  REQUIRE(same.square_count() == dx1.square_count());
  CHECK(same.positive[0].base == dx1.positive[0].base);
  CHECK(expand_decomposition(same) == P("x1", 2));

  // squaring the decomposition of x1
  auto sq = dsos_product(dx1, dx1);
  CHECK(expand_decomposition(sq) == P("x1^2", 2));

  DsosDecomposition floating = DsosDecomposition::zero(2);
  floating.exactness = Exactness::floating;
  CHECK_THROWS_AS(dsos_product(dx1, floating), PreconditionError);
}

TEST_CASE("improved parity reproduces the -2*x1^3*x2^5 example") {
  Monomial m{Rational(-2), Exponent({3, 5})};
  auto d = dsos_parity_improved(m, 2);

  // -2[x1*x2^2*(x1+x2)/2]^2 + 2[x1*x2^2*(x1-x2)/2]^2
  REQUIRE(d.positive.size() == 1);
  REQUIRE(d.negative.size() == 1);
  CHECK(expand_component(2, d.negative) == P("2*(1/2*x1*x2^2*(x1+x2))^2", 2));
  CHECK(expand_component(2, d.positive) == P("2*(1/2*x1*x2^2*(x1-x2))^2", 2));
  CHECK(expand_decomposition(d) == P("-2*x1^3*x2^5", 2));
  CHECK(decomposition_degree(d) == 8);  // exactly 2*ceil(8/2)
}

TEST_CASE("improved parity edge cases") {
  auto c = dsos_parity_improved(Monomial{Rational(7), Exponent({0})}, 1);
  REQUIRE(c.positive.size() == 1);
  CHECK(c.negative.empty());
  CHECK(c.positive[0].weight == Rational(7));
  CHECK(c.positive[0].base == P("1", 1));

  // no odd variables: one square, degree 2*ceil(deg/2)
  auto e = dsos_parity_improved(Monomial{Rational(1), Exponent({2, 4})}, 2);
  REQUIRE(e.square_count() == 1);
  CHECK(e.positive[0].base == P("x1*x2^2", 2));
  CHECK(decomposition_degree(e) == 6);
  CHECK(expand_decomposition(e) == P("x1^2*x2^4", 2));
}

TEST_CASE("polynomial-level parity decompositions") {
  CHECK(dsos_parity_polynomial(Polynomial(2), Rational(1)).square_count() == 0);
  CHECK(dsos_parity_improved_polynomial(Polynomial(2)).square_count() == 0);

  auto d = dsos_parity_improved_polynomial(P("x1^2 - x2^2", 2));
  REQUIRE(d.positive.size() == 1);
  REQUIRE(d.negative.size() == 1);
  CHECK(d.positive[0].base == P("x1", 2));
  CHECK(d.negative[0].base == P("x2", 2));

  auto p = P("3*x1^2*x2 - x2^3 + 2*x1 - 7 + x1*x2", 2);
  auto a1 = dsos_parity_polynomial(p, Rational(1));
  CHECK(a1.square_count() == 3 * p.term_count());
  CHECK(expand_decomposition(a1) == p);
}

TEST_CASE("parity properties over a random corpus") {
  for (const auto& p : small_corpus(25, 77)) {
    // s-independence of correctness
    for (Rational s : {Rational(1, 2), Rational(1), Rational(3), Rational(10)}) {
      auto d = dsos_parity_polynomial(p, s);
      CHECK(expand_decomposition(d) == p);
      CHECK(d.square_count() == 3 * p.term_count());
    }

    auto d2 = dsos_parity_improved_polynomial(p);
    CHECK(expand_decomposition(d2) == p);
    CHECK(decomposition_degree(d2) == ceil2(p.degree()));

    // per-monomial square-count bound 2^ceil(|O(m)|/2)
    std::size_t bound = 0;
    for (const auto& [a, c] : p.terms())
      bound += std::size_t{1} << ((a.odd_indices().size() + 1) / 2);
    CHECK(d2.square_count() <= bound);
  }
}
