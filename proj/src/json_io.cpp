#include "dcsos/json_io.hpp"

#include "dcsos/errors.hpp"
#include "dcsos/parser.hpp"

namespace dcsos {

using nlohmann::json;

json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const json& j) { return Rational::from_string(j.get<std::string>()); }

json to_json(const Polynomial& p) { return format(p); }

Polynomial polynomial_from_json(const json& j, int nvars) {
  return parse(j.get<std::string>(), nvars);
}

json to_json(const NumericPolynomial& p) {
  json terms = json::array();
  for (const auto& [a, c] : p.terms()) {
    json t;
    t["exp"] = a.raw();
    t["coeff"] = c;
    terms.push_back(std::move(t));
  }
  return terms;
}

NumericPolynomial numeric_polynomial_from_json(const json& j, int nvars) {
  NumericPolynomial p(nvars);
  for (const auto& t : j) {
    std::vector<unsigned> raw = t.at("exp").get<std::vector<unsigned>>();
    if (static_cast<int>(raw.size()) != nvars)
      throw DimensionError("serialized exponent length does not match nvars");
    p.add_term(Exponent(std::move(raw)), t.at("coeff").get<double>());
  }
  return p;
}

json to_json(const ConvexCertificate& c) {
  json j;
  switch (c.kind()) {
    case ConvexCertificate::Kind::affine_square:
      j["kind"] = "affine_square";
      j["affine"] = format(c.affine());
      break;
    case ConvexCertificate::Kind::even_power:
      j["kind"] = "even_power";
      j["var"] = c.var() + 1;  // surface syntax is 1-based
      j["exp"] = c.exponent();
      break;
    case ConvexCertificate::Kind::scale:
      j["kind"] = "scale";
      j["c"] = to_json(c.factor());
      j["child"] = to_json(c.children().front());
      break;
    case ConvexCertificate::Kind::sum: {
      j["kind"] = "sum";
      json kids = json::array();
      for (const auto& ch : c.children()) kids.push_back(to_json(ch));
      j["children"] = std::move(kids);
      break;
    }
    case ConvexCertificate::Kind::power:
      j["kind"] = "power";
      j["exp"] = c.exponent();
      j["child"] = to_json(c.children().front());
      break;
  }
  return j;
}

ConvexCertificate certificate_from_json(const json& j, int nvars) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "affine_square")
    return ConvexCertificate::affine_square(parse(j.at("affine").get<std::string>(), nvars));
  if (kind == "even_power")
    return ConvexCertificate::even_power(nvars, j.at("var").get<int>() - 1,
                                         j.at("exp").get<unsigned>());
  if (kind == "scale")
    return ConvexCertificate::scale(rational_from_json(j.at("c")),
                                    certificate_from_json(j.at("child"), nvars));
  if (kind == "sum") {
    std::vector<ConvexCertificate> kids;
    for (const auto& ch : j.at("children")) kids.push_back(certificate_from_json(ch, nvars));
    return ConvexCertificate::sum(nvars, std::move(kids));
  }
  if (kind == "power")
    return ConvexCertificate::power(certificate_from_json(j.at("child"), nvars),
                                    j.at("exp").get<unsigned>());
  throw ParameterError("unknown certificate kind: " + kind);
}

json to_json(const DsosDecomposition& d) {
  json j;
  j["type"] = "dsos";
  j["nvars"] = d.nvars;
  j["exactness"] = d.exactness == Exactness::exact ? "exact" : "floating";
  auto squares = [](const std::vector<SquareTerm>& v) {
    json arr = json::array();
    for (const auto& t : v) arr.push_back({{"weight", to_json(t.weight)}, {"base", to_json(t.base)}});
    return arr;
  };
  auto numeric_squares = [](const std::vector<NumericSquareTerm>& v) {
    json arr = json::array();
    for (const auto& t : v) arr.push_back({{"weight", t.weight}, {"base", to_json(t.base)}});
    return arr;
  };
  if (d.exactness == Exactness::exact) {
    j["positive"] = squares(d.positive);
    j["negative"] = squares(d.negative);
  } else {
    j["positive"] = numeric_squares(d.numeric_positive);
    j["negative"] = numeric_squares(d.numeric_negative);
  }
  return j;
}

DsosDecomposition dsos_from_json(const json& j) {
  DsosDecomposition d;
  d.nvars = j.at("nvars").get<int>();
  const bool exact = j.at("exactness").get<std::string>() == "exact";
  d.exactness = exact ? Exactness::exact : Exactness::floating;
  for (const char* side : {"positive", "negative"}) {
    for (const auto& t : j.at(side)) {
      if (exact) {
        SquareTerm term{rational_from_json(t.at("weight")),
                        polynomial_from_json(t.at("base"), d.nvars)};
        (side[0] == 'p' ? d.positive : d.negative).push_back(std::move(term));
      } else {
        NumericSquareTerm term{t.at("weight").get<double>(),
                               numeric_polynomial_from_json(t.at("base"), d.nvars)};
        (side[0] == 'p' ? d.numeric_positive : d.numeric_negative).push_back(std::move(term));
      }
    }
  }
  return d;
}

json to_json(const DcsosDecomposition& d) {
  json j;
  j["type"] = "dcsos";
  j["nvars"] = d.nvars;
  j["exactness"] = "exact";
  auto side = [](const std::vector<WeightedCertificate>& v) {
    json arr = json::array();
    for (const auto& t : v)
      arr.push_back({{"weight", to_json(t.weight)}, {"certificate", to_json(t.certificate)}});
    return arr;
  };
  j["positive"] = side(d.g);
  j["negative"] = side(d.h);
  return j;
}

DcsosDecomposition dcsos_from_json(const json& j) {
  DcsosDecomposition d;
  d.nvars = j.at("nvars").get<int>();
  for (const char* side : {"positive", "negative"}) {
    for (const auto& t : j.at(side)) {
      WeightedCertificate wc{rational_from_json(t.at("weight")),
                             certificate_from_json(t.at("certificate"), d.nvars)};
      (side[0] == 'p' ? d.g : d.h).push_back(std::move(wc));
    }
  }
  return d;
}

json to_json(const VerificationReport& r) {
  json j;
  switch (r.match) {
    case VerificationReport::Match::exact: j["match"] = "exact"; break;
    case VerificationReport::Match::numeric: j["match"] = "numeric"; break;
    case VerificationReport::Match::failed: j["match"] = "failed"; break;
  }
  j["max_residual"] = r.max_residual;
  j["component_degree"] = r.component_degree;
  j["square_count"] = r.square_count;
  j["degree_bound"] = r.degree_bound;
  j["degree_is_equality"] = r.degree_is_equality;
  j["square_bound"] = r.square_bound;
  j["square_is_equality"] = r.square_is_equality;
  if (r.convexity_checked) {
    j["convexity_min_eig"] = r.convexity_min_eig;
    j["min_component_value"] = r.min_component_value;
    j["spot_check_seed"] = r.seed;
  }
  j["pass"] = r.passed();
  j["violations"] = r.violations;
  j["elapsed_seconds"] = r.elapsed_seconds;
  return j;
}

namespace {

json document_common(const std::string& input_text, const std::string& algorithm,
                     const Polynomial& input) {
  json j;
  j["input"] = input_text;
  j["canonical_input"] = format(input);
  j["algorithm"] = algorithm;
  j["nvars"] = input.nvars();
  return j;
}

}  // namespace

json result_document(const std::string& input_text, const std::string& algorithm,
                     const Polynomial& input, const DsosDecomposition& d,
                     const VerificationReport& report) {
  json j = document_common(input_text, algorithm, input);
  json dec = to_json(d);
  j["exactness"] = dec["exactness"];
  j["positive"] = std::move(dec["positive"]);
  j["negative"] = std::move(dec["negative"]);
  j["report"] = to_json(report);
  return j;
}

json result_document(const std::string& input_text, const std::string& algorithm,
                     const Polynomial& input, const DcsosDecomposition& d,
                     const VerificationReport& report) {
  json j = document_common(input_text, algorithm, input);
  json dec = to_json(d);
  j["exactness"] = dec["exactness"];
  j["positive"] = std::move(dec["positive"]);
  j["negative"] = std::move(dec["negative"]);
  j["report"] = to_json(report);
  return j;
}

}  // namespace dcsos
