#include <doctest.h>

#include "dcsos/dcsos.hpp"
#include "dcsos/json_io.hpp"
#include "dcsos/spectral.hpp"
#include "dcsos/verify.hpp"
#include "test_helpers.hpp"

using namespace dcsos;
using dcsos::testing::P;

namespace {

// elapsed time aside, two audits of the same data must agree field by field
void check_same_report(const VerificationReport& a, const VerificationReport& b) {
  CHECK(a.match == b.match);
  CHECK(a.max_residual == b.max_residual);
  CHECK(a.component_degree == b.component_degree);
  CHECK(a.square_count == b.square_count);
  CHECK(a.degree_bound == b.degree_bound);
  CHECK(a.square_bound == b.square_bound);
  CHECK(a.convexity_min_eig == b.convexity_min_eig);
  CHECK(a.min_component_value == b.min_component_value);
  CHECK(a.violations == b.violations);
}

}  // namespace

TEST_CASE("exact DSOS decompositions round-trip through JSON") {
  Polynomial p = P("3*x1^2*x2 - x2^3 + 2*x1 - 7", 2);
  auto d = dsos_parity_improved_polynomial(p);
  auto restored = dsos_from_json(to_json(d));

  REQUIRE(restored.square_count() == d.square_count());
  CHECK(expand_decomposition(restored) == expand_decomposition(d));
  check_same_report(audit(p, d, AlgoTag::alg2), audit(p, restored, AlgoTag::alg2));
}

TEST_CASE("floating DSOS decompositions round-trip bit-exactly") {
  Polynomial p = P("2+2*x1+2*x2^3+2*x1^2*x2", 2);
  auto d = dsos_spectral_minimal(p);

  // through a serialized string, as the CLI would emit it
  auto text = to_json(d).dump();
  auto restored = dsos_from_json(nlohmann::json::parse(text));

  REQUIRE(restored.numeric_positive.size() == d.numeric_positive.size());
  for (std::size_t i = 0; i < d.numeric_positive.size(); ++i)
    CHECK(restored.numeric_positive[i].weight == d.numeric_positive[i].weight);
  check_same_report(audit(p, d, AlgoTag::alg5), audit(p, restored, AlgoTag::alg5));
}

TEST_CASE("DCSOS certificates round-trip through JSON") {
  Polynomial p = P("-2*x1^3*x2*x3^2 + x1*x2", 3);
  auto d = dcsos_polynomial(p, DcsosAlgo::minimal);
  auto text = to_json(d).dump();
  auto restored = dcsos_from_json(nlohmann::json::parse(text));

  REQUIRE(restored.square_count() == d.square_count());
  CHECK(expand_decomposition(restored) == expand_decomposition(d));
  CHECK(component_degree(restored) == component_degree(d));
  check_same_report(audit(p, d, AlgoTag::alg8), audit(p, restored, AlgoTag::alg8));
}

TEST_CASE("result documents carry the schema fields") {
  Polynomial p = P("x1*x2", 2);
  auto d = dcsos_polynomial(p, DcsosAlgo::parity_improved);
  auto rep = audit(p, d, AlgoTag::alg7);
  auto doc = result_document("x1*x2", "dcsos-parity-improved", p, d, rep);

  for (const char* key : {"input", "algorithm", "nvars", "positive", "negative", "report"})
    CHECK(doc.contains(key));
  CHECK(doc["report"]["pass"].get<bool>());
  CHECK(doc["nvars"].get<int>() == 2);

  // rationals travel as num/den strings
  CHECK(doc["positive"][0]["weight"].get<std::string>() == "1/4");

  // the document itself reconstructs (the verify subcommand's path)
  auto restored = dcsos_from_json(doc);
  CHECK(expand_decomposition(restored) == expand_decomposition(d));
}
