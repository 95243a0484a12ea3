#pragma once

// JSON serialization of decompositions and audit reports. Rationals travel
// as "num/den" strings so nothing is lost; floating data round-trips through
// ordinary JSON doubles.

#include <string>

#include <json.hpp>

#include "dcsos/dcsos.hpp"
#include "dcsos/dsos.hpp"
#include "dcsos/verify.hpp"

namespace dcsos {

nlohmann::json to_json(const Rational& r);
nlohmann::json to_json(const Polynomial& p);
nlohmann::json to_json(const NumericPolynomial& p);
nlohmann::json to_json(const ConvexCertificate& c);
nlohmann::json to_json(const DsosDecomposition& d);
nlohmann::json to_json(const DcsosDecomposition& d);
nlohmann::json to_json(const VerificationReport& r);

Rational rational_from_json(const nlohmann::json& j);
Polynomial polynomial_from_json(const nlohmann::json& j, int nvars);
NumericPolynomial numeric_polynomial_from_json(const nlohmann::json& j, int nvars);
ConvexCertificate certificate_from_json(const nlohmann::json& j, int nvars);
DsosDecomposition dsos_from_json(const nlohmann::json& j);
DcsosDecomposition dcsos_from_json(const nlohmann::json& j);

// Full result document: input, algorithm, components, report.
nlohmann::json result_document(const std::string& input_text, const std::string& algorithm,
                               const Polynomial& input, const DsosDecomposition& d,
                               const VerificationReport& report);
nlohmann::json result_document(const std::string& input_text, const std::string& algorithm,
                               const Polynomial& input, const DcsosDecomposition& d,
                               const VerificationReport& report);

}  // namespace dcsos
