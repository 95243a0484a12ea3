// Python bindings for the main operations: canonical parsing/printing,
// running a decomposition with its audit, and re-verifying serialized
// documents. Structured data crosses the boundary as JSON text.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dcsos/dcsos.hpp"
#include "dcsos/dsos.hpp"
#include "dcsos/errors.hpp"
#include "dcsos/json_io.hpp"
#include "dcsos/parser.hpp"
#include "dcsos/spectral.hpp"
#include "dcsos/verify.hpp"

namespace py = pybind11;
using namespace dcsos;

namespace {

const std::vector<std::string> kAlgorithms = {
    "dsos-parity",  "dsos-parity-improved", "dsos-spectral-direct", "dsos-spectral-minimal",
    "dcsos-parity", "dcsos-parity-improved", "dcsos-minimal",       "dcsos-direct",
};

AlgoTag tag_of(const std::string& algo) {
  if (algo == "dsos-parity") return AlgoTag::alg1;
  if (algo == "dsos-parity-improved") return AlgoTag::alg2;
  if (algo == "dsos-spectral-direct") return AlgoTag::alg4;
  if (algo == "dsos-spectral-minimal") return AlgoTag::alg5;
  if (algo == "dcsos-parity") return AlgoTag::alg6;
  if (algo == "dcsos-parity-improved") return AlgoTag::alg7;
  if (algo == "dcsos-minimal") return AlgoTag::alg8;
  if (algo == "dcsos-direct") return AlgoTag::minimal_direct;
  throw ParameterError("unknown algorithm: " + algo);
}

Polynomial parse_auto(const std::string& expr, int nvars) {
  if (nvars <= 0) nvars = std::max(1, max_variable_index(expr));
  return parse(expr, nvars);
}

std::string canonical(const std::string& expr, int nvars) {
  return format(parse_auto(expr, nvars));
}

std::string decompose_json(const std::string& expr, const std::string& algo, int nvars,
                           const std::string& s_text) {
  Polynomial p = parse_auto(expr, nvars);
  Rational s = Rational::from_string(s_text);
  AlgoTag tag = tag_of(algo);

  nlohmann::json doc;
  switch (tag) {
    case AlgoTag::alg1: {
      auto d = dsos_parity_polynomial(p, s);
      doc = result_document(expr, algo, p, d, audit(p, d, tag));
      break;
    }
    case AlgoTag::alg2: {
      auto d = dsos_parity_improved_polynomial(p);
      doc = result_document(expr, algo, p, d, audit(p, d, tag));
      break;
    }
    case AlgoTag::alg4: {
      auto d = dsos_spectral_direct(p);
      doc = result_document(expr, algo, p, d, audit(p, d, tag));
      break;
    }
    case AlgoTag::alg5: {
      auto d = dsos_spectral_minimal(p);
      doc = result_document(expr, algo, p, d, audit(p, d, tag));
      break;
    }
    default: {
      DcsosAlgo which = tag == AlgoTag::alg6   ? DcsosAlgo::parity
                        : tag == AlgoTag::alg7 ? DcsosAlgo::parity_improved
                        : tag == AlgoTag::alg8 ? DcsosAlgo::minimal
                                               : DcsosAlgo::minimal_direct;
      auto d = dcsos_polynomial(p, which);
      doc = result_document(expr, algo, p, d, audit(p, d, tag));
      break;
    }
  }
  return doc.dump();
}

std::string verify_json(const std::string& document) {
  nlohmann::json doc = nlohmann::json::parse(document);
  const std::string algo = doc.at("algorithm").get<std::string>();
  AlgoTag tag = tag_of(algo);
  Polynomial p = parse(doc.at("canonical_input").get<std::string>(), doc.at("nvars").get<int>());

  VerificationReport rep;
  if (tag == AlgoTag::alg6 || tag == AlgoTag::alg7 || tag == AlgoTag::alg8 ||
      tag == AlgoTag::minimal_direct)
    rep = audit(p, dcsos_from_json(doc), tag);
  else
    rep = audit(p, dsos_from_json(doc), tag);
  return to_json(rep).dump();
}

std::pair<double, double> direct_spectral_lambdas(const std::string& expr, int nvars) {
  DirectSpectralInfo info;
  dsos_spectral_direct(parse_auto(expr, nvars), &info);
  return {info.lambda_plus, info.lambda_minus};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "DSOS / DCSOS polynomial decompositions (C++ core)";

  m.def("algorithms", [] { return kAlgorithms; },
        "Algorithm ids accepted by decompose_json.");
  m.def("canonical", &canonical, py::arg("expr"), py::arg("nvars") = 0,
        "Parse an expression and return its canonical form (grlex order).");
  m.def("decompose_json", &decompose_json, py::arg("expr"), py::arg("algo"),
        py::arg("nvars") = 0, py::arg("s") = "1",
        "Decompose, audit, and return the full result document as JSON text.");
  m.def("verify_json", &verify_json, py::arg("document"),
        "Re-audit a serialized result document; returns the report as JSON text.");
  m.def("direct_spectral_lambdas", &direct_spectral_lambdas, py::arg("expr"),
        py::arg("nvars") = 0,
        "Closed-form eigenvalue pair (lambda+, lambda-) of the direct-basis route.");

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<DimensionError>(m, "DimensionError", PyExc_ValueError);
}
