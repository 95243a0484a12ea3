// Command-line front end: decompose polynomials, verify serialized
// decompositions, and benchmark the algorithms over a seeded corpus.

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "dcsos/corpus.hpp"
#include "dcsos/dcsos.hpp"
#include "dcsos/dsos.hpp"
#include "dcsos/errors.hpp"
#include "dcsos/json_io.hpp"
#include "dcsos/parser.hpp"
#include "dcsos/spectral.hpp"
#include "dcsos/verify.hpp"

namespace {

using namespace dcsos;

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

bool is_dcsos(AlgoTag tag) {
  return tag == AlgoTag::alg6 || tag == AlgoTag::alg7 || tag == AlgoTag::alg8 ||
         tag == AlgoTag::minimal_direct;
}

std::string read_stream(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::string describe(const ConvexCertificate& c) {
  switch (c.kind()) {
    case ConvexCertificate::Kind::affine_square:
      return "(" + format(c.affine()) + ")^2";
    case ConvexCertificate::Kind::even_power: {
      std::ostringstream out;
      out << "x" << (c.var() + 1) << "^" << c.exponent();
      return out.str();
    }
    case ConvexCertificate::Kind::scale:
      return c.factor().str() + "*" + describe(c.children().front());
    case ConvexCertificate::Kind::sum: {
      std::string out = "(";
      for (std::size_t i = 0; i < c.children().size(); ++i) {
        if (i) out += " + ";
        out += describe(c.children()[i]);
      }
      return out + ")";
    }
    case ConvexCertificate::Kind::power: {
      std::string inner = describe(c.children().front());
      if (c.exponent() == 1) return inner;
      const bool wrapped = !inner.empty() && inner.front() == '(' && inner.back() == ')';
      std::ostringstream out;
      out << (wrapped ? inner : "(" + inner + ")") << "^" << c.exponent();
      return out.str();
    }
  }
  return "?";
}

struct DecomposeResult {
  std::optional<DsosDecomposition> dsos;
  std::optional<DcsosDecomposition> dcsos;
  std::optional<DirectSpectralInfo> direct_info;
  VerificationReport report;
};

DecomposeResult run_algorithm(const Polynomial& p, const std::string& algo, const Rational& s) {
  DecomposeResult out;
  AlgoTag tag = tag_of(algo);
  AuditOptions opts;
  switch (tag) {
    case AlgoTag::alg1: out.dsos = dsos_parity_polynomial(p, s); break;
    case AlgoTag::alg2: out.dsos = dsos_parity_improved_polynomial(p); break;
    case AlgoTag::alg4: {
      DirectSpectralInfo info;
      out.dsos = dsos_spectral_direct(p, &info);
      out.direct_info = std::move(info);
      break;
    }
    case AlgoTag::alg5: out.dsos = dsos_spectral_minimal(p); break;
    case AlgoTag::alg6: out.dcsos = dcsos_polynomial(p, DcsosAlgo::parity); break;
    case AlgoTag::alg7: out.dcsos = dcsos_polynomial(p, DcsosAlgo::parity_improved); break;
    case AlgoTag::alg8: out.dcsos = dcsos_polynomial(p, DcsosAlgo::minimal); break;
    case AlgoTag::minimal_direct:
      out.dcsos = dcsos_polynomial(p, DcsosAlgo::minimal_direct);
      break;
    default: throw ParameterError("algorithm not exposed on the CLI");
  }
  if (out.dsos)
    out.report = audit(p, *out.dsos, tag, opts);
  else
    out.report = audit(p, *out.dcsos, tag, opts);
  return out;
}

void print_text_result(std::ostream& os, const std::string& input, const std::string& algo,
                       const Polynomial& p, const DecomposeResult& r) {
  os << "input:      " << format(p) << "\n";
  os << "algorithm:  " << algo << "\n";
  if (r.direct_info) {
    os << "lambda+ =   " << r.direct_info->lambda_plus << "\n";
    os << "lambda- =   " << r.direct_info->lambda_minus << "\n";
  }
  auto print_squares = [&os](const char* name, const auto& squares, auto render) {
    os << name << " (" << squares.size() << "):\n";
    for (const auto& t : squares) os << "  " << render(t) << "\n";
  };
  if (r.dsos) {
    if (r.dsos->exactness == Exactness::exact) {
      auto render = [](const SquareTerm& t) {
        return t.weight.str() + " * (" + format(t.base) + ")^2";
      };
      print_squares("positive", r.dsos->positive, render);
      print_squares("negative", r.dsos->negative, render);
    } else {
      auto render = [](const NumericSquareTerm& t) {
        std::ostringstream o;
        o << std::setprecision(12) << t.weight << " * (";
        bool first = true;
        for (const auto& [a, c] : t.base.terms()) {
          if (first)
            o << c;
          else
            o << (c < 0 ? " - " : " + ") << std::fabs(c);
          for (int i = 0; i < a.nvars(); ++i)
            if (a[i]) {
              o << "*x" << (i + 1);
              if (a[i] > 1) o << "^" << a[i];
            }
          first = false;
        }
        o << ")^2";
        return o.str();
      };
      print_squares("positive", r.dsos->numeric_positive, render);
      print_squares("negative", r.dsos->numeric_negative, render);
    }
  } else {
    auto render = [](const WeightedCertificate& t) {
      return t.weight.str() + " * " + describe(t.certificate);
    };
    print_squares("positive (g)", r.dcsos->g, render);
    print_squares("negative (h)", r.dcsos->h, render);
  }
  os << "report:     " << report_summary(r.report) << "\n";
  (void)input;
}

int cmd_decompose(const std::string& algo, const std::string& expr_arg, int nvars_arg,
                  const std::string& s_text, const std::string& fmt, const std::string& out_path) {
  std::string text = trim(expr_arg.empty() ? read_stream(std::cin) : expr_arg);
  if (text.empty()) {
    std::cerr << "error: empty input expression\n";
    return 2;
  }
  try {
    int nvars = nvars_arg > 0 ? nvars_arg : std::max(1, max_variable_index(text));
    Polynomial p = parse(text, nvars);
    Rational s = Rational::from_string(s_text);
    DecomposeResult r = run_algorithm(p, algo, s);

    std::ostringstream body;
    if (fmt == "json") {
      nlohmann::json doc = r.dsos ? result_document(text, algo, p, *r.dsos, r.report)
                                  : result_document(text, algo, p, *r.dcsos, r.report);
      body << doc.dump(2) << "\n";
    } else {
      print_text_result(body, text, algo, p, r);
    }
    if (out_path.empty()) {
      std::cout << body.str();
    } else {
      std::ofstream f(out_path);
      f << body.str();
    }
    return r.report.passed() ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

int cmd_verify(const std::string& path, const std::string& fmt) {
  try {
    std::string text;
    if (path.empty() || path == "-") {
      text = read_stream(std::cin);
    } else {
      std::ifstream f(path);
      if (!f) {
        std::cerr << "error: cannot open " << path << "\n";
        return 2;
      }
      text = read_stream(f);
    }
    nlohmann::json doc = nlohmann::json::parse(text);
    const std::string algo = doc.at("algorithm").get<std::string>();
    AlgoTag tag = tag_of(algo);
    int nvars = doc.at("nvars").get<int>();
    Polynomial p = parse(doc.at("canonical_input").get<std::string>(), nvars);

    VerificationReport rep;
    if (is_dcsos(tag))
      rep = audit(p, dcsos_from_json(doc), tag);
    else
      rep = audit(p, dsos_from_json(doc), tag);

    if (fmt == "json")
      std::cout << to_json(rep).dump(2) << "\n";
    else
      std::cout << report_summary(rep) << "\n";
    return rep.passed() ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

struct BenchRow {
  int max_degree = 0;
  long long total_squares = 0;
  double seconds = 0.0;
  int passed = 0;
};

int cmd_bench(const CorpusParams& params, int jobs, bool show_time, const std::string& s_text) {
  auto corpus = generate_corpus(params);
  const Rational s = Rational::from_string(s_text);
  const int n_algos = static_cast<int>(kAlgorithms.size());

  // per (algorithm, instance) results, assembled in deterministic order
  std::vector<std::vector<VerificationReport>> reports(
      static_cast<std::size_t>(n_algos), std::vector<VerificationReport>(corpus.size()));
  std::vector<std::vector<double>> times(static_cast<std::size_t>(n_algos),
                                         std::vector<double>(corpus.size(), 0.0));

  auto worker = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i)
      for (int a = 0; a < n_algos; ++a) {
        auto t0 = std::chrono::steady_clock::now();
        DecomposeResult r = run_algorithm(corpus[i], kAlgorithms[static_cast<std::size_t>(a)], s);
        times[static_cast<std::size_t>(a)][i] =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        reports[static_cast<std::size_t>(a)][i] = std::move(r.report);
      }
  };

  auto t0 = std::chrono::steady_clock::now();
  if (jobs <= 1 || corpus.size() < 2) {
    worker(0, corpus.size());
  } else {
    std::vector<std::thread> pool;
    std::size_t chunk = (corpus.size() + static_cast<std::size_t>(jobs) - 1) /
                        static_cast<std::size_t>(jobs);
    for (std::size_t b = 0; b < corpus.size(); b += chunk)
      pool.emplace_back(worker, b, std::min(corpus.size(), b + chunk));
    for (auto& t : pool) t.join();
  }
  double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  std::cout << std::left << std::setw(24) << "algorithm" << std::right << std::setw(12)
            << "max_degree" << std::setw(15) << "total_squares" << std::setw(10) << "time_s"
            << std::setw(11) << "pass_rate" << "\n";
  bool all_passed = true;
  for (int a = 0; a < n_algos; ++a) {
    BenchRow row;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      const auto& rep = reports[static_cast<std::size_t>(a)][i];
      row.max_degree = std::max(row.max_degree, rep.component_degree);
      row.total_squares += rep.square_count;
      row.seconds += times[static_cast<std::size_t>(a)][i];
      if (rep.passed()) ++row.passed;
    }
    double rate = corpus.empty() ? 1.0 : static_cast<double>(row.passed) / corpus.size();
    all_passed = all_passed && row.passed == static_cast<int>(corpus.size());
    std::cout << std::left << std::setw(24) << kAlgorithms[static_cast<std::size_t>(a)]
              << std::right << std::setw(12) << row.max_degree << std::setw(15)
              << row.total_squares;
    if (show_time)
      std::cout << std::setw(10) << std::fixed << std::setprecision(3) << row.seconds
                << std::defaultfloat;
    else
      std::cout << std::setw(10) << "-";
    std::cout << std::setw(11) << std::fixed << std::setprecision(3) << rate << std::defaultfloat
              << "\n";
  }
  if (show_time)
    std::cout << "corpus: " << corpus.size() << " instances, wall " << std::fixed
              << std::setprecision(3) << wall << "s\n";
  else
    std::cout << "corpus: " << corpus.size() << " instances\n";
  return all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"DSOS / DCSOS polynomial decompositions"};
  app.require_subcommand(1);

  std::string algo = "dsos-parity-improved";
  std::string expr;
  std::string fmt = "text";
  std::string out_path;
  std::string s_text = "1";
  int nvars = 0;

  auto* dec = app.add_subcommand("decompose", "decompose a polynomial and audit the result");
  dec->add_option("--algo", algo, "algorithm id")
      ->check(CLI::IsMember(kAlgorithms))
      ->capture_default_str();
  dec->add_option("--nvars", nvars, "variable count (default: highest index used)");
  dec->add_option("--s", s_text, "parameter s > 0 for dsos-parity")->capture_default_str();
  dec->add_option("--format", fmt, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->envname("DCSOS_FORMAT");
  dec->add_option("--out", out_path, "write output to a file instead of stdout");
  dec->add_option("expr", expr, "polynomial expression (reads stdin when omitted)");

  std::string verify_path;
  auto* ver = app.add_subcommand("verify", "re-audit a serialized decomposition document");
  ver->add_option("--format", fmt, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->envname("DCSOS_FORMAT");
  ver->add_option("file", verify_path, "JSON document (stdin when omitted)");

  CorpusParams params;
  int jobs = static_cast<int>(std::thread::hardware_concurrency());
  bool no_time = false;
  auto* bench = app.add_subcommand("bench", "compare all algorithms over a seeded corpus");
  bench->add_option("--count", params.count, "number of instances")->capture_default_str();
  bench->add_option("--nvars-min", params.nvars_min)->capture_default_str();
  bench->add_option("--nvars-max", params.nvars_max)->capture_default_str();
  bench->add_option("--degree-min", params.degree_min)->capture_default_str();
  bench->add_option("--degree-max", params.degree_max)->capture_default_str();
  bench->add_option("--terms", params.max_terms, "max monomials per instance")
      ->capture_default_str();
  bench->add_option("--coeff-max", params.coeff_max)->capture_default_str();
  bench->add_option("--seed", params.seed)->capture_default_str();
  bench->add_option("--jobs", jobs, "worker threads")->capture_default_str();
  bench->add_option("--s", s_text, "parameter s > 0 for dsos-parity")->capture_default_str();
  bench->add_flag("--no-time", no_time, "suppress timing columns (byte-stable output)");

  CLI11_PARSE(app, argc, argv);

  if (dec->parsed()) return cmd_decompose(algo, expr, nvars, s_text, fmt, out_path);
  if (ver->parsed()) return cmd_verify(verify_path, fmt);
  if (bench->parsed()) return cmd_bench(params, jobs, !no_time, s_text);
  return 2;
}
