#include "dcsos/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

#include "dcsos/errors.hpp"
#include "dcsos/parser.hpp"

namespace dcsos {

namespace {

constexpr double kOffDiagonalTol = 1e-12;
constexpr int kMaxSweeps = 100;

DsosDecomposition trivial_constant(const Polynomial& p) {
  DsosDecomposition d = DsosDecomposition::zero(p.nvars());
  Rational c = p.constant_term();
  if (c.is_zero()) return d;
  SquareTerm t{c.abs(), Polynomial::constant(p.nvars(), Rational(1))};
  (c.sign() > 0 ? d.positive : d.negative).push_back(std::move(t));
  return d;
}

}  // namespace

Basis direct_basis(const Polynomial& p) {
  Basis b;
  b.nvars = p.nvars();
  b.elements.push_back(Exponent(p.nvars()));  // the element 1 is mandatory
  for (const auto& [a, c] : p.terms())
    if (!a.is_constant()) b.elements.push_back(a);
  return b;
}

MinimalBasis minimal_basis(const Polynomial& p) {
  std::set<Exponent, GrlexLess> elements;
  PairMap pairs;
  for (const auto& [a, c] : p.terms()) {
    const auto odd = a.odd_indices();
    if (odd.empty()) {
      Exponent e = a.half();
      elements.insert(e);
      pairs.emplace(a, std::make_pair(e, e));
    } else {
      // balanced split of the odd variables, lower indices first
      Exponent e1 = a.floor_half();
      Exponent e2 = e1;
      std::size_t take = (odd.size() + 1) / 2;
      for (std::size_t k = 0; k < odd.size(); ++k) {
        Exponent& dst = (k < take) ? e1 : e2;
        dst.set(odd[k], dst[odd[k]] + 1);
      }
      elements.insert(e1);
      elements.insert(e2);
      pairs.emplace(a, std::make_pair(e1, e2));
    }
  }
  MinimalBasis mb;
  mb.basis.nvars = p.nvars();
  mb.basis.elements.assign(elements.begin(), elements.end());
  mb.pairs = std::move(pairs);
  return mb;
}

PairMap find_pair_assignments(const Polynomial& p, const Basis& b) {
  PairMap pairs;
  for (const auto& [a, c] : p.terms()) {
    bool found = false;
    for (std::size_t i = 0; i < b.elements.size() && !found; ++i) {
      for (std::size_t j = i; j < b.elements.size() && !found; ++j) {
        if (b.elements[i] + b.elements[j] == a) {
          pairs.emplace(a, std::make_pair(b.elements[i], b.elements[j]));
          found = true;
        }
      }
    }
    if (!found)
      throw BasisError("basis cannot represent monomial " +
                       format(Polynomial::monomial(p.nvars(), Rational(1), a)));
  }
  return pairs;
}

GramMatrix gram_matrix(const Polynomial& p, const Basis& b, const PairMap& pairs) {
  std::map<Exponent, int, GrlexLess> index;
  for (int i = 0; i < b.size(); ++i)
    if (!index.emplace(b.elements[static_cast<std::size_t>(i)], i).second)
      throw BasisError("basis elements must be pairwise distinct");

  GramMatrix q;
  q.size = b.size();
  q.entries.assign(static_cast<std::size_t>(q.size) * q.size, Rational(0));

  for (const auto& [a, c] : p.terms()) {
    auto pit = pairs.find(a);
    if (pit == pairs.end())
      throw BasisError("no designated pair for monomial " +
                       format(Polynomial::monomial(p.nvars(), Rational(1), a)));
    const auto& [e1, e2] = pit->second;
    if (e1 + e2 != a) throw BasisError("designated pair does not multiply to its monomial");
    auto i1 = index.find(e1), i2 = index.find(e2);
    if (i1 == index.end() || i2 == index.end())
      throw BasisError("designated pair uses elements outside the basis");
    if (i1->second == i2->second) {
      q.at(i1->second, i1->second) += c;
    } else {
      Rational half = c / Rational(2);
      q.at(i1->second, i2->second) += half;
      q.at(i2->second, i1->second) += half;
    }
  }

  if (expand_gram(b, q) != p) throw BasisError("Gram identity b^T Q b = p failed");
  return q;
}

Polynomial expand_gram(const Basis& b, const GramMatrix& q) {
  Polynomial r(b.nvars);
  for (int i = 0; i < q.size; ++i)
    for (int j = 0; j < q.size; ++j) {
      const Rational& c = q.at(i, j);
      if (!c.is_zero())
        r.add_term(b.elements[static_cast<std::size_t>(i)] + b.elements[static_cast<std::size_t>(j)], c);
    }
  return r;
}

std::vector<double> jacobi_eigenvalues(std::vector<double> a, int n, std::vector<double>* vectors,
                                       int* sweeps, double* max_off) {
  std::vector<double> v(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i) * n + i] = 1.0;

  auto off_max = [&]() {
    double m = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q)
        m = std::max(m, std::fabs(a[static_cast<std::size_t>(p) * n + q]));
    return m;
  };

  int sweep = 0;
  double off = off_max();
  while (off > kOffDiagonalTol && sweep < kMaxSweeps) {
    ++sweep;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        double apq = a[static_cast<std::size_t>(p) * n + q];
        if (std::fabs(apq) < 1e-300) continue;
        double app = a[static_cast<std::size_t>(p) * n + p];
        double aqq = a[static_cast<std::size_t>(q) * n + q];
        double theta = (aqq - app) / (2.0 * apq);
        double t = (theta >= 0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        double tau = s / (1.0 + c);

        a[static_cast<std::size_t>(p) * n + p] = app - t * apq;
        a[static_cast<std::size_t>(q) * n + q] = aqq + t * apq;
        a[static_cast<std::size_t>(p) * n + q] = 0.0;
        a[static_cast<std::size_t>(q) * n + p] = 0.0;
        for (int r = 0; r < n; ++r) {
          if (r != p && r != q) {
            double arp = a[static_cast<std::size_t>(r) * n + p];
            double arq = a[static_cast<std::size_t>(r) * n + q];
            a[static_cast<std::size_t>(r) * n + p] = arp - s * (arq + tau * arp);
            a[static_cast<std::size_t>(p) * n + r] = a[static_cast<std::size_t>(r) * n + p];
            a[static_cast<std::size_t>(r) * n + q] = arq + s * (arp - tau * arq);
            a[static_cast<std::size_t>(q) * n + r] = a[static_cast<std::size_t>(r) * n + q];
          }
          double vrp = v[static_cast<std::size_t>(r) * n + p];
          double vrq = v[static_cast<std::size_t>(r) * n + q];
          v[static_cast<std::size_t>(r) * n + p] = vrp - s * (vrq + tau * vrp);
          v[static_cast<std::size_t>(r) * n + q] = vrq + s * (vrp - tau * vrq);
        }
      }
    }
    off = off_max();
  }

  if (sweeps) *sweeps = sweep;
  if (max_off) *max_off = off;

  std::vector<double> values(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) values[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i) * n + i];

  // sort descending by eigenvalue, carrying eigenvector columns along
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return values[static_cast<std::size_t>(x)] > values[static_cast<std::size_t>(y)]; });

  std::vector<double> sorted_values(static_cast<std::size_t>(n));
  std::vector<double> sorted_vectors(static_cast<std::size_t>(n) * n);
  for (int k = 0; k < n; ++k) {
    sorted_values[static_cast<std::size_t>(k)] = values[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])];
    for (int r = 0; r < n; ++r)
      sorted_vectors[static_cast<std::size_t>(r) * n + k] =
          v[static_cast<std::size_t>(r) * n + order[static_cast<std::size_t>(k)]];
  }
  if (vectors) *vectors = std::move(sorted_vectors);
  return sorted_values;
}

EigenData jacobi_eigen(const GramMatrix& q, double zero_tol) {
  const int n = q.size;
  std::vector<double> a(static_cast<std::size_t>(n) * n);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = q.entries[i].to_double();

  EigenData e;
  e.size = n;
  e.values = jacobi_eigenvalues(std::move(a), n, &e.vectors, &e.sweeps, &e.max_off_diagonal);
  if (e.max_off_diagonal > kOffDiagonalTol) {
    std::ostringstream msg;
    msg << "Jacobi iteration did not converge after " << kMaxSweeps
        << " sweeps (max off-diagonal " << e.max_off_diagonal << ")";
    throw NumericalError(msg.str());
  }

  double max_abs = 0.0;
  for (double l : e.values) max_abs = std::max(max_abs, std::fabs(l));
  double cutoff = zero_tol * std::max(1.0, max_abs);
  for (int k = 0; k < n; ++k)
    if (std::fabs(e.values[static_cast<std::size_t>(k)]) > cutoff) e.kept.push_back(k);
  return e;
}

DsosDecomposition dsos_spectral_direct(const Polynomial& p, DirectSpectralInfo* info) {
  if (p.is_constant())
    throw DegenerateInputError(
        "direct-basis route needs a nonconstant monomial; use the trivial decomposition");

  Basis b = direct_basis(p);
  const int r = b.size() - 1;  // nonconstant elements

  Rational c0 = p.constant_term();
  std::vector<Rational> c(static_cast<std::size_t>(r));
  Rational tail(0);  // sum of squared nonconstant coefficients
  for (int i = 0; i < r; ++i) {
    c[static_cast<std::size_t>(i)] = p.coeff(b.elements[static_cast<std::size_t>(i) + 1]);
    tail += c[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(i)];
  }
  const double total = (c0 * c0 + tail).to_double();
  const double root = std::sqrt(total);
  const double c0d = c0.to_double();
  const double lambda_plus = (c0d + root) / 2.0;
  const double lambda_minus = (c0d - root) / 2.0;

  // Unnormalized eigenvectors (1, c_i * t) with t = (root -+ c0) / tail.
  const double taild = tail.to_double();
  const double t_plus = (root - c0d) / taild;
  const double t_minus = (root + c0d) / taild;

  auto make_square = [&](double t, double sign) {
    NumericPolynomial base(p.nvars());
    double norm_sq = 1.0;
    base.add_term(Exponent(p.nvars()), 1.0);
    for (int i = 0; i < r; ++i) {
      double entry = sign * c[static_cast<std::size_t>(i)].to_double() * t;
      base.add_term(b.elements[static_cast<std::size_t>(i) + 1], entry);
      norm_sq += entry * entry;
    }
    return std::make_pair(base, norm_sq);
  };

  auto [base_plus, norm_plus] = make_square(t_plus, 1.0);
  auto [base_minus, norm_minus] = make_square(t_minus, -1.0);

  DsosDecomposition d = DsosDecomposition::zero(p.nvars());
  d.exactness = Exactness::floating;
  d.numeric_positive.push_back({lambda_plus / norm_plus, base_plus});
  if (lambda_minus != 0.0)
    d.numeric_negative.push_back({-lambda_minus / norm_minus, base_minus});

  if (info) {
    info->basis = b;
    info->lambda_plus = lambda_plus;
    info->lambda_minus = lambda_minus;
    auto normalize = [&](const NumericPolynomial& base, double norm_sq) {
      std::vector<double> vec;
      double inv = 1.0 / std::sqrt(norm_sq);
      for (const auto& el : b.elements) {
        auto it = base.terms().find(el);
        vec.push_back(it == base.terms().end() ? 0.0 : it->second * inv);
      }
      return vec;
    };
    info->v_plus = normalize(base_plus, norm_plus);
    info->v_minus = normalize(base_minus, norm_minus);
  }
  return d;
}

namespace {

DsosDecomposition assemble_spectral(const Polynomial& p, const Basis& b, const GramMatrix& q,
                                    SpectralTrace* trace) {
  EigenData e = jacobi_eigen(q);
  DsosDecomposition d = DsosDecomposition::zero(p.nvars());
  d.exactness = Exactness::floating;
  for (int k : e.kept) {
    NumericPolynomial y(p.nvars());
    for (int j = 0; j < e.size; ++j) {
      double entry = e.vec(j, k);
      if (entry != 0.0) y.add_term(b.elements[static_cast<std::size_t>(j)], entry);
    }
    double lambda = e.values[static_cast<std::size_t>(k)];
    if (lambda > 0)
      d.numeric_positive.push_back({lambda, std::move(y)});
    else
      d.numeric_negative.push_back({-lambda, std::move(y)});
  }
  if (trace) {
    trace->basis = b;
    trace->gram = q;
    trace->eigen = std::move(e);
  }
  return d;
}

}  // namespace

DsosDecomposition dsos_spectral_custom(const Polynomial& p, const Basis& b, SpectralTrace* trace) {
  if (p.is_constant()) return trivial_constant(p);
  GramMatrix q = gram_matrix(p, b, find_pair_assignments(p, b));
  return assemble_spectral(p, b, q, trace);
}

DsosDecomposition dsos_spectral_minimal(const Polynomial& p, SpectralTrace* trace) {
  if (p.is_constant()) return trivial_constant(p);
  MinimalBasis mb = minimal_basis(p);
  GramMatrix q = gram_matrix(p, mb.basis, mb.pairs);
  return assemble_spectral(p, mb.basis, q, trace);
}

}  // namespace dcsos
