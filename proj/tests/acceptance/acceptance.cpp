// Acceptance suite: one numbered criterion per block, one PASS/FAIL line
// each, nonzero exit if anything fails. Criteria 3-5 and 7 share a single
// seeded 200-instance sweep so every algorithm is audited on every instance.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <vector>

#include "dcsos/corpus.hpp"
#include "dcsos/dcsos.hpp"
#include "dcsos/dsos.hpp"
#include "dcsos/json_io.hpp"
#include "dcsos/parser.hpp"
#include "dcsos/rng.hpp"
#include "dcsos/spectral.hpp"
#include "dcsos/verify.hpp"

using namespace dcsos;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& name, bool ok, const std::string& detail = "") {
  std::printf("criterion %d: %-52s %s%s%s\n", number, name.c_str(), ok ? "PASS" : "FAIL",
              detail.empty() ? "" : "  -- ", detail.c_str());
  if (!ok) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---------------------------------------------------------------------------
// 1. Golden paper examples, exact routes

bool golden_exact(std::string& detail) {
  bool ok = true;
  std::ostringstream why;

  // parity decomposition of -2 x1^3 x2^5 with the explicit split o = x1^3 x2,
  // s = 1:  -(x1^3 x2^3 + x2^2)^2 + (x1^6 x2^6 + x2^4)
  {
    Monomial m{Rational(-2), Exponent({3, 5})};
    auto d = dsos_parity_monomial(m, 2, Rational(1), parity_separate(m.exponent, Exponent({3, 1})));
    if (expand_component(2, d.negative) != parse("(x1^3*x2^3 + x2^2)^2", 2) ||
        expand_component(2, d.positive) != parse("x1^6*x2^6 + x2^4", 2)) {
      ok = false;
      why << "[parity example] ";
    }
  }

  // improved parity on the same monomial:
  // -2 [x1 x2^2 (x1+x2)/2]^2 + 2 [x1 x2^2 (x1-x2)/2]^2
  {
    auto d = dsos_parity_improved(Monomial{Rational(-2), Exponent({3, 5})}, 2);
    if (expand_component(2, d.negative) != parse("2*(1/2*x1*x2^2*(x1+x2))^2", 2) ||
        expand_component(2, d.positive) != parse("2*(1/2*x1*x2^2*(x1-x2))^2", 2) ||
        expand_decomposition(d) != parse("-2*x1^3*x2^5", 2)) {
      ok = false;
      why << "[improved parity example] ";
    }
  }

  // parity DCSOS worked example for 3 x1 x2^2
  {
    auto d = dcsos_parity_monomial(Monomial{Rational(3), Exponent({1, 2})}, 2, false);
    if (expand_component(2, d.g) !=
            parse("3/2*((1/4*(x1+1)^2 + x2^2)^2 + (1/4*(x1-1)^2)^2)", 2) ||
        expand_component(2, d.h) !=
            parse("3/2*((1/4*(x1+1)^2)^2 + (x2^2 + 1/4*(x1-1)^2)^2)", 2)) {
      ok = false;
      why << "[parity DCSOS example] ";
    }
  }

  // improved parity DCSOS on -2 x1^3 x2 x3^2, degree-8 components
  {
    auto d = dcsos_parity_monomial(Monomial{Rational(-2), Exponent({3, 1, 2})}, 3, true);
    if (expand_component(3, d.g) !=
            parse("(x3^2 + 1/2*(1/16*(x2+x1)^4 + (1/4*(x1-x2)^2 + x1^2)^2))^2"
                  " + 1/4*((1/4*(x2+x1)^2 + x1^2)^2 + 1/16*(x1-x2)^4)^2",
                  3) ||
        expand_component(3, d.h) !=
            parse("(x3^2 + 1/2*((1/4*(x2+x1)^2 + x1^2)^2 + 1/16*(x1-x2)^4))^2"
                  " + 1/4*(1/16*(x2+x1)^4 + (1/4*(x1-x2)^2 + x1^2)^2)^2",
                  3) ||
        component_degree(d) != 8) {
      ok = false;
      why << "[improved parity DCSOS example] ";
    }
  }

  // minimal-degree DCSOS on the same monomial, degree-6 certificates
  {
    auto d = dcsos_minimal_monomial(Monomial{Rational(-2), Exponent({3, 1, 2})}, 3);
    if (expand_component(3, d.g) !=
            parse("1/192*(x1-x2)^6 + 1/3*(x1^2+x3^2)^3 + 1/3*(1/4*(x1+x2)^2 + x1^2)^3"
                  " + 1/3*(1/4*(x1+x2)^2 + x3^2)^3 + 1/3*x1^6 + 1/3*x3^6"
                  " + 1/3*(1/4*(x1-x2)^2 + x1^2 + x3^2)^3",
                  3) ||
        expand_component(3, d.h) !=
            parse("1/3*(1/4*(x1-x2)^2 + x1^2)^3 + 1/3*(1/4*(x1-x2)^2 + x3^2)^3"
                  " + 1/3*(x1^2+x3^2)^3 + 1/3*(1/4*(x1+x2)^2 + x1^2 + x3^2)^3"
                  " + 1/192*(x1+x2)^6 + 1/3*x1^6 + 1/3*x3^6",
                  3) ||
        component_degree(d) != 6 ||
        expand_decomposition(d) != parse("-2*x1^3*x2*x3^2", 3)) {
      ok = false;
      why << "[minimal DCSOS example] ";
    }
  }

  detail = why.str();
  return ok;
}

// ---------------------------------------------------------------------------
// 2. Golden paper examples, numeric routes

bool golden_numeric(std::string& detail) {
  std::ostringstream why;
  bool ok = true;
  Polynomial p = parse("2+2*x1+2*x2^3+2*x1^2*x2", 2);

  DirectSpectralInfo info;
  auto d4 = dsos_spectral_direct(p, &info);
  if (std::fabs(info.lambda_plus - 3.0) > 1e-12 || std::fabs(info.lambda_minus + 1.0) > 1e-12) {
    ok = false;
    why << "[lambda mismatch] ";
  }
  auto vec_close = [](const std::vector<double>& v, const std::vector<double>& want) {
    double direct = 0, flipped = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      direct = std::max(direct, std::fabs(v[i] - want[i]));
      flipped = std::max(flipped, std::fabs(v[i] + want[i]));
    }
    return std::min(direct, flipped) <= 1e-9;
  };
  const double s3 = std::sqrt(3.0);
  if (!vec_close(info.v_plus, {s3 / 2, s3 / 6, s3 / 6, s3 / 6}) ||
      !vec_close(info.v_minus, {-0.5, 0.5, 0.5, 0.5})) {
    ok = false;
    why << "[eigenvector mismatch] ";
  }
  if (!audit(p, d4, AlgoTag::alg4).passed()) {
    ok = false;
    why << "[alg4 audit] ";
  }

  SpectralTrace trace;
  auto d5 = dsos_spectral_minimal(p, &trace);
  const double want[5] = {2.4812, 1.0, 0.6889, -1.0, -1.1701};
  for (int i = 0; i < 5; ++i)
    if (std::fabs(trace.eigen.values[static_cast<std::size_t>(i)] - want[i]) > 1e-3) {
      ok = false;
      why << "[eigenvalue " << i << "] ";
    }
  auto rep = audit(p, d5, AlgoTag::alg5);
  if (!rep.passed() || rep.max_residual > 1e-6) {
    ok = false;
    why << "[alg5 residual " << rep.max_residual << "] ";
  }

  detail = why.str();
  return ok;
}

// ---------------------------------------------------------------------------
// 3-5, 7. The corpus sweep

struct SweepOutcome {
  long long exact_failures = 0;      // criterion 3
  long long degree_failures = 0;     // criterion 4
  long long square_failures = 0;     // criterion 5
  long long convexity_failures = 0;  // criterion 7
  double exact_seconds = 0;
  int instances = 0;
};

SweepOutcome run_sweep() {
  CorpusParams params;  // n in [1,4], deg in [1,8], <= 8 monomials, seed 42
  params.count = 200;
  auto corpus = generate_corpus(params);

  SweepOutcome out;
  out.instances = static_cast<int>(corpus.size());

  auto t0 = std::chrono::steady_clock::now();
  for (const auto& p : corpus) {
    struct Run {
      bool exact_route;
      std::function<VerificationReport()> run;
    };

    std::vector<Run> runs;
    runs.push_back({true,
                    [&] { return audit(p, dsos_parity_polynomial(p, Rational(1)), AlgoTag::alg1); }});
    runs.push_back({true,
                    [&] { return audit(p, dsos_parity_improved_polynomial(p), AlgoTag::alg2); }});
    runs.push_back({true,
                    [&] { return audit(p, dcsos_polynomial(p, DcsosAlgo::parity), AlgoTag::alg6); }});
    runs.push_back({true, [&] {
                      return audit(p, dcsos_polynomial(p, DcsosAlgo::parity_improved),
                                   AlgoTag::alg7);
                    }});
    runs.push_back({true,
                    [&] { return audit(p, dcsos_polynomial(p, DcsosAlgo::minimal), AlgoTag::alg8); }});
    runs.push_back({true, [&] {
                      return audit(p, dcsos_polynomial(p, DcsosAlgo::minimal_direct),
                                   AlgoTag::minimal_direct);
                    }});
    if (!p.is_constant()) {
      // the generic spectral route is exercised with the direct basis
      runs.push_back({false, [&] {
                        return audit(p, dsos_spectral_custom(p, direct_basis(p)), AlgoTag::alg3);
                      }});
      runs.push_back({false,
                      [&] { return audit(p, dsos_spectral_direct(p), AlgoTag::alg4); }});
      runs.push_back({false,
                      [&] { return audit(p, dsos_spectral_minimal(p), AlgoTag::alg5); }});
    }

    for (const auto& r : runs) {
      VerificationReport rep = r.run();
      if (r.exact_route && rep.match != VerificationReport::Match::exact) ++out.exact_failures;
      if (!r.exact_route && rep.match == VerificationReport::Match::failed) ++out.exact_failures;

      bool degree_bad = false, square_bad = false, convex_bad = false;
      for (const auto& v : rep.violations) {
        if (v.find("degree") != std::string::npos) degree_bad = true;
        if (v.find("square count") != std::string::npos) square_bad = true;
        if (v.find("Hessian") != std::string::npos ||
            v.find("component value") != std::string::npos)
          convex_bad = true;
      }
      if (degree_bad) ++out.degree_failures;
      if (square_bad) ++out.square_failures;
      if (convex_bad) ++out.convexity_failures;
    }
  }
  out.exact_seconds = seconds_since(t0);
  return out;
}

// ---------------------------------------------------------------------------
// 6. Factorization identity, exhaustive

bool factorization_identity() {
  for (int n = 1; n <= 4; ++n) {
    for (int m = 1; m <= 6; ++m) {
      Polynomial lhs(n);
      for (unsigned mask = 0; mask < (1u << n); ++mask) {
        Polynomial sum(n);
        int bits = 0;
        for (int j = 0; j < n; ++j)
          if (mask & (1u << j)) {
            sum += Polynomial::variable(n, j);
            ++bits;
          }
        Polynomial powed = pow(sum, static_cast<unsigned>(m));
        if (bits % 2 == 0)
          lhs += powed;
        else
          lhs -= powed;
      }

      Polynomial rhs(n);
      if (m >= n) {
        std::vector<unsigned> alpha(static_cast<std::size_t>(n), 1u);
        auto enumerate = [&](auto&& self, int pos, int left) -> void {
          if (pos == n - 1) {
            alpha[static_cast<std::size_t>(pos)] = static_cast<unsigned>(left);
            Rational coeff = Rational::factorial(static_cast<unsigned>(m));
            for (unsigned e : alpha) coeff /= Rational::factorial(e);
            if (n % 2 == 1) coeff = -coeff;
            rhs.add_term(Exponent(alpha), coeff);
            return;
          }
          for (int e = 1; e <= left - (n - pos - 1); ++e) {
            alpha[static_cast<std::size_t>(pos)] = static_cast<unsigned>(e);
            self(self, pos + 1, left - e);
          }
        };
        enumerate(enumerate, 0, m);
      }
      if (lhs != rhs) return false;

      if (m == n) {
        Polynomial want =
            Rational::factorial(static_cast<unsigned>(n)) *
            Polynomial::monomial(n, Rational(n % 2 ? -1 : 1),
                                 Exponent(std::vector<unsigned>(static_cast<std::size_t>(n), 1u)));
        if (lhs != want) return false;
      }
      if (m < n && !lhs.is_zero()) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// 8. Mutation audit

bool mutation_audit(std::string& detail) {
  CorpusParams params;
  params.count = 60;
  params.seed = 4242;
  auto corpus = generate_corpus(params);

  SplitMix64 rng(777);
  const Rational delta(1, 1000);
  int detected = 0, total = 0;

  for (int round = 0; total < 50; ++round) {
    const Polynomial& p = corpus[static_cast<std::size_t>(round) % corpus.size()];
    switch (round % 4) {
      case 0: {
        auto d = dsos_parity_improved_polynomial(p);
        if (d.positive.empty()) continue;
        auto& t = d.positive[rng.below(d.positive.size())];
        t.weight += delta;
        if (!audit(p, d, AlgoTag::alg2).passed()) ++detected;
        break;
      }
      case 1: {
        auto d = dcsos_polynomial(p, DcsosAlgo::minimal);
        if (d.g.empty()) continue;
        auto& t = d.g[rng.below(d.g.size())];
        t.weight += delta;
        if (!audit(p, d, AlgoTag::alg8).passed()) ++detected;
        break;
      }
      case 2: {
        if (p.is_constant()) continue;
        auto d = dsos_spectral_minimal(p);
        if (d.numeric_positive.empty()) continue;
        auto& t = d.numeric_positive[rng.below(d.numeric_positive.size())];
        t.weight += 1e-3;
        if (!audit(p, d, AlgoTag::alg5).passed()) ++detected;
        break;
      }
      default: {
        auto d = dcsos_polynomial(p, DcsosAlgo::parity_improved);
        if (d.h.empty()) continue;
        auto& t = d.h[rng.below(d.h.size())];
        t.weight += delta;
        if (!audit(p, d, AlgoTag::alg7).passed()) ++detected;
        break;
      }
    }
    ++total;
  }

  std::ostringstream why;
  why << detected << "/" << total << " mutations detected";
  detail = why.str();
  return detected == total && total == 50;
}

}  // namespace

int main() {
  auto t_all = std::chrono::steady_clock::now();

  {
    auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = golden_exact(detail);
    double secs = seconds_since(t0);
    std::ostringstream d;
    d << detail << "runtime " << secs << "s";
    criterion(1, "golden paper examples (exact)", ok && secs < 1.0, d.str());
  }

  {
    std::string detail;
    bool ok = golden_numeric(detail);
    criterion(2, "golden paper examples (numeric)", ok, detail);
  }

  {
    auto sweep = run_sweep();
    {
      std::ostringstream d;
      d << sweep.instances << " instances, " << sweep.exact_failures << " mismatches, runtime "
        << sweep.exact_seconds << "s";
      criterion(3, "exactness sweep (alg 1,2,6,7,8,direct + spectral)",
                sweep.exact_failures == 0 && sweep.instances >= 200 && sweep.exact_seconds < 60.0,
                d.str());
    }
    {
      std::ostringstream d;
      d << sweep.degree_failures << " violations";
      criterion(4, "degree-bound sweep (props 3-9)", sweep.degree_failures == 0, d.str());
    }
    {
      std::ostringstream d;
      d << sweep.square_failures << " violations";
      criterion(5, "square-count sweep", sweep.square_failures == 0, d.str());
    }
    {
      std::ostringstream d;
      d << sweep.convexity_failures << " violations";
      criterion(7, "convexity spot-checks (100 points per component)",
                sweep.convexity_failures == 0, d.str());
    }
  }

  criterion(6, "factorization identity (n <= 4, m <= 6, exact)", factorization_identity());

  {
    std::string detail;
    bool ok = mutation_audit(detail);
    criterion(8, "mutation audit (50 seeded weight perturbations)", ok, detail);
  }

  criterion(9, "no paper-scale performance claims to reproduce", true,
            "paper reports no timings; property suites above are the gate");

  std::printf("acceptance total: %s (%.2fs)\n", g_failures == 0 ? "PASS" : "FAIL",
              seconds_since(t_all));
  return g_failures == 0 ? 0 : 1;
}
