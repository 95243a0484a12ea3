#include <doctest.h>

#include "dcsos/dcsos.hpp"
#include "dcsos/dsos.hpp"
#include "dcsos/errors.hpp"
#include "dcsos/spectral.hpp"
#include "dcsos/verify.hpp"
#include "test_helpers.hpp"

using namespace dcsos;
using dcsos::testing::P;
using dcsos::testing::small_corpus;

TEST_CASE("expand_decomposition on the worked outputs") {
  auto d = dsos_parity_improved(Monomial{Rational(-2), Exponent({3, 5})}, 2);
  CHECK(expand_decomposition(d) == P("-2*x1^3*x2^5", 2));

  CHECK(expand_decomposition(DsosDecomposition::zero(3)) == Polynomial(3));
  CHECK(expand_decomposition(DcsosDecomposition::zero(3)) == Polynomial(3));

  DsosDecomposition floating = DsosDecomposition::zero(1);
  floating.exactness = Exactness::floating;
  CHECK_THROWS_AS(expand_decomposition(floating), PreconditionError);
}

TEST_CASE("audit: per-algorithm claims on fixed inputs") {
  Polynomial p = P("2+2*x1+2*x2^3+2*x1^2*x2", 2);

  auto r4 = audit(p, dsos_spectral_direct(p), AlgoTag::alg4);
  CHECK(r4.passed());
  CHECK(r4.square_count == 2);
  CHECK(r4.square_is_equality);
  CHECK(r4.match == VerificationReport::Match::numeric);

  auto r5 = audit(p, dsos_spectral_minimal(p), AlgoTag::alg5);
  CHECK(r5.passed());
  CHECK(r5.component_degree == 4);
  CHECK(r5.degree_is_equality);

  Polynomial m = P("-2*x1^3*x2*x3^2", 3);
  auto r8 = audit(m, dcsos_polynomial(m, DcsosAlgo::minimal), AlgoTag::alg8);
  CHECK(r8.passed());
  CHECK(r8.component_degree == 6);
  CHECK(r8.match == VerificationReport::Match::exact);
  CHECK(r8.convexity_checked);
  CHECK(r8.convexity_min_eig >= -1e-8);
  CHECK(r8.min_component_value >= -1e-12);

  auto r2 = audit(p, dsos_parity_improved_polynomial(p), AlgoTag::alg2);
  CHECK(r2.passed());
  CHECK(r2.component_degree == 4);
}

TEST_CASE("audit flags a perturbed exact weight") {
  Polynomial p = P("3*x1^2*x2 - x2^3 + 2*x1", 2);
  auto d = dsos_parity_improved_polynomial(p);
  REQUIRE(audit(p, d, AlgoTag::alg2).passed());

  auto broken = d;
  broken.positive[0].weight += Rational(1, 1000);
  auto rep = audit(p, broken, AlgoTag::alg2);
  CHECK_FALSE(rep.passed());
  CHECK(rep.match == VerificationReport::Match::failed);
}

TEST_CASE("audit flags a perturbed floating weight") {
  Polynomial p = P("2+2*x1+2*x2^3+2*x1^2*x2", 2);
  auto d = dsos_spectral_minimal(p);
  REQUIRE(audit(p, d, AlgoTag::alg5).passed());

  auto broken = d;
  broken.numeric_positive[0].weight += 1e-3;
  auto rep = audit(p, broken, AlgoTag::alg5);
  CHECK_FALSE(rep.passed());
}

TEST_CASE("audit flags a perturbed certificate weight") {
  Polynomial p = P("-2*x1^3*x2*x3^2", 3);
  auto d = dcsos_polynomial(p, DcsosAlgo::minimal);
  auto broken = d;
  broken.g[2].weight += Rational(1, 1000);
  CHECK_FALSE(audit(p, broken, AlgoTag::alg8).passed());
}

TEST_CASE("audit rejects wrong claims, not just wrong expansions") {
  // an exact decomposition of the wrong polynomial
  Polynomial p = P("x1^2 + x2^2", 2);
  auto d = dsos_parity_improved_polynomial(P("x1^2 - x2^2", 2));
  auto rep = audit(p, d, AlgoTag::alg2);
  CHECK_FALSE(rep.passed());
  CHECK(rep.max_residual > 0);
}

TEST_CASE("convexity spot checks are reproducible for a fixed seed") {
  Polynomial p = P("2*x1^3 - x1*x2", 2);
  auto d = dcsos_polynomial(p, DcsosAlgo::parity_improved);
  AuditOptions opts;
  opts.seed = 991;
  auto r1 = audit(p, d, AlgoTag::alg7, opts);
  auto r2 = audit(p, d, AlgoTag::alg7, opts);
  CHECK(r1.convexity_min_eig == r2.convexity_min_eig);
  CHECK(r1.min_component_value == r2.min_component_value);
  CHECK(r1.seed == 991);
}

TEST_CASE("alg1 audit accounts for the explicit split degree") {
  Monomial m{Rational(-2), Exponent({3, 5})};
  Polynomial p = Polynomial::monomial(2, m.coeff, m.exponent);
  auto split = parity_separate(m.exponent, Exponent({3, 1}));
  auto d = dsos_parity_monomial(m, 2, Rational(1), split);

  AuditOptions opts;
  opts.alg1_odd_degree = 4;  // deg(x1^3*x2)
  auto rep = audit(p, d, AlgoTag::alg1, opts);
  CHECK(rep.passed());
  CHECK(rep.degree_bound == 12);

  // with the minimal-split assumption the explicit split must violate
  auto strict = audit(p, d, AlgoTag::alg1);
  CHECK_FALSE(strict.passed());
}

TEST_CASE("claimed bounds recompute from the polynomial alone") {
  Polynomial p = P("x1^3*x2 + x2^2 - 4", 2);  // J = 3, deg 4
  AuditOptions opts;
  bool eq = false;
  CHECK(claimed_square_bound(p, AlgoTag::alg1, opts, &eq) == 9);
  CHECK(eq);
  CHECK(claimed_square_bound(p, AlgoTag::alg4, opts, &eq) == 2);
  CHECK(claimed_square_bound(p, AlgoTag::alg6, opts, &eq) == 12);
  CHECK(claimed_degree_bound(p, AlgoTag::alg2, opts, &eq) == 4);
  CHECK(eq);
  CHECK(claimed_degree_bound(p, AlgoTag::alg4, opts, &eq) == 8);
  CHECK(claimed_degree_bound(p, AlgoTag::alg7, opts, &eq) == 4);
  CHECK(claimed_degree_bound(p, AlgoTag::alg6, opts, &eq) == -1);

  // alg5 square bound: min(2J, C(n + ceil(d/2), n))
  CHECK(claimed_square_bound(p, AlgoTag::alg5, opts, &eq) == 6);
  Polynomial q = P("x1^8 + x1^7 + x1^6 + x1^5 + x1^4 + x1^3 + x1^2 + x1", 1);
  CHECK(claimed_square_bound(q, AlgoTag::alg5, opts, &eq) == 5);  // C(1+4,1) = 5 < 2J = 16
}

TEST_CASE("audit passes across algorithms on a small corpus") {
  for (const auto& p : small_corpus(8, 3111)) {
    CHECK(audit(p, dsos_parity_polynomial(p, Rational(1)), AlgoTag::alg1).passed());
    CHECK(audit(p, dsos_parity_improved_polynomial(p), AlgoTag::alg2).passed());
    CHECK(audit(p, dcsos_polynomial(p, DcsosAlgo::parity), AlgoTag::alg6).passed());
    CHECK(audit(p, dcsos_polynomial(p, DcsosAlgo::parity_improved), AlgoTag::alg7).passed());
    CHECK(audit(p, dcsos_polynomial(p, DcsosAlgo::minimal), AlgoTag::alg8).passed());
    CHECK(audit(p, dcsos_polynomial(p, DcsosAlgo::minimal_direct), AlgoTag::minimal_direct)
              .passed());
    if (!p.is_constant()) {
      CHECK(audit(p, dsos_spectral_direct(p), AlgoTag::alg4).passed());
      CHECK(audit(p, dsos_spectral_minimal(p), AlgoTag::alg5).passed());
    }
  }
}
