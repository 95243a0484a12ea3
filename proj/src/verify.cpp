#include "dcsos/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

#include "dcsos/errors.hpp"
#include "dcsos/rng.hpp"
#include "dcsos/spectral.hpp"

namespace dcsos {

const char* algo_tag_name(AlgoTag tag) {
  switch (tag) {
    case AlgoTag::alg1: return "dsos-parity";
    case AlgoTag::alg2: return "dsos-parity-improved";
    case AlgoTag::alg3: return "dsos-spectral";
    case AlgoTag::alg4: return "dsos-spectral-direct";
    case AlgoTag::alg5: return "dsos-spectral-minimal";
    case AlgoTag::alg6: return "dcsos-parity";
    case AlgoTag::alg7: return "dcsos-parity-improved";
    case AlgoTag::alg8: return "dcsos-minimal";
    case AlgoTag::minimal_direct: return "dcsos-direct";
  }
  return "?";
}

Polynomial expand_component(int nvars, const std::vector<SquareTerm>& squares) {
  Polynomial r(nvars);
  for (const auto& t : squares) r.add_scaled(t.weight, t.base * t.base);
  return r;
}

Polynomial expand_decomposition(const DsosDecomposition& d) {
  if (d.exactness != Exactness::exact)
    throw PreconditionError("exact expansion of a floating decomposition");
  return expand_component(d.nvars, d.positive) - expand_component(d.nvars, d.negative);
}

NumericPolynomial expand_component_numeric(int nvars,
                                           const std::vector<NumericSquareTerm>& squares) {
  NumericPolynomial r(nvars);
  for (const auto& t : squares) r.add_scaled(t.weight, t.base * t.base);
  return r;
}

NumericPolynomial expand_decomposition_numeric(const DsosDecomposition& d) {
  if (d.exactness == Exactness::exact) {
    return NumericPolynomial::from_exact(expand_decomposition(d));
  }
  NumericPolynomial r = expand_component_numeric(d.nvars, d.numeric_positive);
  r.add_scaled(-1.0, expand_component_numeric(d.nvars, d.numeric_negative));
  return r;
}

Polynomial expand_component(int nvars, const std::vector<WeightedCertificate>& component) {
  ConvexCertificate::ExpansionCache cache;
  Polynomial r(nvars);
  for (const auto& t : component) r.add_scaled(t.weight, t.certificate.expand(&cache));
  return r;
}

Polynomial expand_decomposition(const DcsosDecomposition& d) {
  return expand_component(d.nvars, d.g) - expand_component(d.nvars, d.h);
}

namespace {

int ceil_div2(int d) { return (d + 1) / 2; }

int ceil_log2(int d) {
  int k = 0;
  while ((1 << k) < d) ++k;
  return k;
}

long long binomial(int n, int k) {
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

int alg7_monomial_bound(int deg) {
  if (deg == 0) return 0;
  if (deg == 1) return 2;
  return 1 << ceil_log2(deg);
}

double numeric_tolerance(const Polynomial& p, const AuditOptions& opts) {
  double max_abs = 0.0;
  for (const auto& [a, c] : p.terms()) max_abs = std::max(max_abs, std::fabs(c.to_double()));
  return opts.numeric_tol_scale * (1.0 + max_abs);
}

}  // namespace

int claimed_degree_bound(const Polynomial& p, AlgoTag tag, const AuditOptions& opts,
                         bool* is_equality) {
  *is_equality = false;
  const int d = p.degree();
  switch (tag) {
    case AlgoTag::alg1: {
      int bound = 0;
      for (const auto& [a, c] : p.terms()) {
        int odd = opts.alg1_odd_degree >= 0 ? opts.alg1_odd_degree
                                            : static_cast<int>(a.odd_indices().size());
        bound = std::max(bound, a.degree() + odd);
      }
      return bound;
    }
    case AlgoTag::alg2:
      *is_equality = true;
      return 2 * ceil_div2(d);
    case AlgoTag::alg3:
      return 2 * (opts.alg3_basis_degree >= 0 ? opts.alg3_basis_degree : d);
    case AlgoTag::alg4:
      return 2 * d;
    case AlgoTag::alg5:
      *is_equality = true;
      return 2 * ceil_div2(d);
    case AlgoTag::alg6:
      return -1;  // no claim: the degree depends on the multiplication order
    case AlgoTag::alg7: {
      int bound = 0;
      for (const auto& [a, c] : p.terms()) bound = std::max(bound, alg7_monomial_bound(a.degree()));
      return bound;
    }
    case AlgoTag::alg8:
    case AlgoTag::minimal_direct:
      *is_equality = true;
      return 2 * ceil_div2(d);
  }
  return -1;
}

long long claimed_square_bound(const Polynomial& p, AlgoTag tag, const AuditOptions& opts,
                               bool* is_equality) {
  *is_equality = false;
  const long long terms = static_cast<long long>(p.term_count());
  switch (tag) {
    case AlgoTag::alg1:
      *is_equality = true;
      return 3 * terms;
    case AlgoTag::alg2: {
      long long bound = 0;
      for (const auto& [a, c] : p.terms())
        bound += 1ll << ceil_div2(static_cast<int>(a.odd_indices().size()));
      return bound;
    }
    case AlgoTag::alg3:
      return opts.alg3_basis_length >= 0 ? opts.alg3_basis_length : terms + 1;
    case AlgoTag::alg4:
      *is_equality = true;
      return 2;
    case AlgoTag::alg5:
      return std::min(2 * terms, binomial(p.nvars() + ceil_div2(p.degree()), p.nvars()));
    case AlgoTag::alg6:
    case AlgoTag::alg7:
      return 4 * terms;
    case AlgoTag::alg8:
    case AlgoTag::minimal_direct: {
      long long bound = 0;
      for (const auto& [a, c] : p.terms()) {
        int r = ceil_div2(a.degree());
        bound += 1ll << (2 * r);
      }
      return bound;
    }
  }
  return -1;
}

namespace {

void check_degree_and_count(const Polynomial& p, AlgoTag tag, const AuditOptions& opts,
                            VerificationReport& rep) {
  rep.degree_bound = claimed_degree_bound(p, tag, opts, &rep.degree_is_equality);
  if (rep.degree_bound >= 0 && !p.is_zero()) {
    if (rep.degree_is_equality && rep.component_degree != rep.degree_bound) {
      std::ostringstream v;
      v << "component degree " << rep.component_degree << " != claimed " << rep.degree_bound;
      rep.violations.push_back(v.str());
    } else if (rep.component_degree > rep.degree_bound) {
      std::ostringstream v;
      v << "component degree " << rep.component_degree << " exceeds bound " << rep.degree_bound;
      rep.violations.push_back(v.str());
    }
  }

  rep.square_bound = claimed_square_bound(p, tag, opts, &rep.square_is_equality);
  if (rep.square_bound >= 0) {
    if (rep.square_is_equality && !p.is_zero() && rep.square_count != rep.square_bound) {
      std::ostringstream v;
      v << "square count " << rep.square_count << " != claimed " << rep.square_bound;
      rep.violations.push_back(v.str());
    } else if (rep.square_count > rep.square_bound) {
      std::ostringstream v;
      v << "square count " << rep.square_count << " exceeds bound " << rep.square_bound;
      rep.violations.push_back(v.str());
    }
  }
}

void check_exact_match(const Polynomial& p, const Polynomial& expansion,
                       VerificationReport& rep) {
  if (expansion == p) {
    rep.match = VerificationReport::Match::exact;
    rep.max_residual = 0.0;
  } else {
    rep.match = VerificationReport::Match::failed;
    Polynomial residual = expansion - p;
    double worst = 0.0;
    for (const auto& [a, c] : residual.terms())
      worst = std::max(worst, std::fabs(c.to_double()));
    rep.max_residual = worst;
    rep.violations.push_back("expansion does not reproduce the input exactly");
  }
}

void check_numeric_match(const Polynomial& p, const NumericPolynomial& expansion, double tol,
                         VerificationReport& rep) {
  double worst = 0.0;
  auto target = NumericPolynomial::from_exact(p);
  for (const auto& [a, c] : expansion.terms()) {
    auto it = target.terms().find(a);
    double want = it == target.terms().end() ? 0.0 : it->second;
    worst = std::max(worst, std::fabs(c - want));
  }
  for (const auto& [a, c] : target.terms()) {
    auto it = expansion.terms().find(a);
    if (it == expansion.terms().end()) worst = std::max(worst, std::fabs(c));
  }
  rep.max_residual = worst;
  if (worst <= tol) {
    rep.match = VerificationReport::Match::numeric;
  } else {
    rep.match = VerificationReport::Match::failed;
    std::ostringstream v;
    v << "coefficient residual " << worst << " exceeds tolerance " << tol;
    rep.violations.push_back(v.str());
  }
}

// Min Hessian eigenvalue and min value of a component over seeded sample
// points in [-2, 2]^n. The components are convex by construction; this is a
// redundancy check on the certificate machinery, not a proof.
void spot_check_component(const Polynomial& component, SplitMix64& rng, int points,
                          double& min_eig, double& min_value) {
  const int n = component.nvars();
  NumericPolynomial value = NumericPolynomial::from_exact(component);
  std::vector<NumericPolynomial> hess;
  hess.reserve(static_cast<std::size_t>(n) * n);
  for (const auto& entry : component.hessian())
    hess.push_back(NumericPolynomial::from_exact(entry));

  std::vector<double> x(static_cast<std::size_t>(n));
  std::vector<double> h(static_cast<std::size_t>(n) * n);
  for (int s = 0; s < points; ++s) {
    for (auto& xi : x) xi = rng.real(-2.0, 2.0);
    min_value = std::min(min_value, value.evaluate(x));
    if (n == 0) continue;
    for (std::size_t k = 0; k < h.size(); ++k) h[k] = hess[k].evaluate(x);
    auto eig = jacobi_eigenvalues(h, n);
    min_eig = std::min(min_eig, eig.back());
  }
}

}  // namespace

VerificationReport audit(const Polynomial& p, const DsosDecomposition& d, AlgoTag tag,
                         const AuditOptions& opts) {
  auto start = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.seed = opts.seed;
  rep.square_count = static_cast<long long>(d.square_count());

  if (d.exactness == Exactness::exact) {
    check_exact_match(p, expand_decomposition(d), rep);
    rep.component_degree = std::max(expand_component(d.nvars, d.positive).degree(),
                                    expand_component(d.nvars, d.negative).degree());
  } else {
    NumericPolynomial expansion = expand_decomposition_numeric(d);
    check_numeric_match(p, expansion, numeric_tolerance(p, opts), rep);
    NumericPolynomial pos = expand_component_numeric(d.nvars, d.numeric_positive);
    NumericPolynomial neg = expand_component_numeric(d.nvars, d.numeric_negative);
    rep.component_degree = std::max(pos.degree(), neg.degree());
  }

  check_degree_and_count(p, tag, opts, rep);
  rep.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

VerificationReport audit(const Polynomial& p, const DcsosDecomposition& d, AlgoTag tag,
                         const AuditOptions& opts) {
  auto start = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.seed = opts.seed;
  rep.square_count = static_cast<long long>(d.square_count());

  Polynomial pos = expand_component(d.nvars, d.g);
  Polynomial neg = expand_component(d.nvars, d.h);
  check_exact_match(p, pos - neg, rep);
  rep.component_degree = std::max(pos.degree(), neg.degree());

  check_degree_and_count(p, tag, opts, rep);

  rep.convexity_checked = true;
  rep.convexity_min_eig = 0.0;
  rep.min_component_value = 0.0;
  SplitMix64 rng(opts.seed);
  spot_check_component(pos, rng, opts.spot_points, rep.convexity_min_eig,
                       rep.min_component_value);
  spot_check_component(neg, rng, opts.spot_points, rep.convexity_min_eig,
                       rep.min_component_value);
  if (rep.convexity_min_eig < -1e-8) {
    std::ostringstream v;
    v << "component Hessian eigenvalue " << rep.convexity_min_eig << " below -1e-8";
    rep.violations.push_back(v.str());
  }
  if (rep.min_component_value < -1e-12) {
    std::ostringstream v;
    v << "component value " << rep.min_component_value << " below -1e-12";
    rep.violations.push_back(v.str());
  }

  rep.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

std::string report_summary(const VerificationReport& r) {
  std::ostringstream out;
  out << (r.passed() ? "PASS" : "FAIL");
  out << " match=";
  switch (r.match) {
    case VerificationReport::Match::exact: out << "exact"; break;
    case VerificationReport::Match::numeric: out << "numeric(" << r.max_residual << ")"; break;
    case VerificationReport::Match::failed: out << "failed"; break;
  }
  out << " degree=" << r.component_degree;
  if (r.degree_bound >= 0)
    out << (r.degree_is_equality ? " (claimed = " : " (bound ") << r.degree_bound << ")";
  out << " squares=" << r.square_count;
  if (r.square_bound >= 0)
    out << (r.square_is_equality ? " (claimed = " : " (bound ") << r.square_bound << ")";
  if (r.convexity_checked)
    out << " min_eig=" << r.convexity_min_eig << " min_value=" << r.min_component_value;
  for (const auto& v : r.violations) out << "\n  violation: " << v;
  return out.str();
}

}  // namespace dcsos
