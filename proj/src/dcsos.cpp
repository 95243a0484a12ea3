#include "dcsos/dcsos.hpp"

#include <algorithm>

#include "dcsos/errors.hpp"

namespace dcsos {

ConvexCertificate ConvexCertificate::affine_square(Polynomial affine) {
  if (affine.degree() > 1)
    throw PreconditionError("affine_square certificate needs an affine polynomial");
  auto node = std::make_shared<Node>();
  node->kind = Kind::affine_square;
  node->nvars = affine.nvars();
  node->degree = 2 * affine.degree();
  node->affine = std::move(affine);
  return ConvexCertificate(std::move(node));
}

ConvexCertificate ConvexCertificate::even_power(int nvars, int var, unsigned exponent) {
  if (var < 0 || var >= nvars) throw DimensionError("even_power variable out of range");
  if (exponent == 0 || exponent % 2 != 0)
    throw PreconditionError("even_power certificate needs a positive even exponent");
  auto node = std::make_shared<Node>();
  node->kind = Kind::even_power;
  node->nvars = nvars;
  node->degree = static_cast<int>(exponent);
  node->var = var;
  node->exponent = exponent;
  return ConvexCertificate(std::move(node));
}

ConvexCertificate ConvexCertificate::scale(Rational c, ConvexCertificate child) {
  if (c.sign() < 0) throw PreconditionError("scale certificate needs a nonnegative factor");
  auto node = std::make_shared<Node>();
  node->kind = Kind::scale;
  node->nvars = child.nvars();
  node->degree = c.is_zero() ? 0 : child.degree();
  node->factor = std::move(c);
  node->children.push_back(std::move(child));
  return ConvexCertificate(std::move(node));
}

ConvexCertificate ConvexCertificate::sum(int nvars, std::vector<ConvexCertificate> children) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::sum;
  node->nvars = nvars;
  for (const auto& ch : children) {
    if (ch.nvars() != nvars) throw DimensionError("sum certificate over mixed variable universes");
    node->degree = std::max(node->degree, ch.degree());
  }
  node->children = std::move(children);
  return ConvexCertificate(std::move(node));
}

ConvexCertificate ConvexCertificate::power(ConvexCertificate child, unsigned k) {
  if (k == 0) throw PreconditionError("power certificate needs exponent >= 1");
  auto node = std::make_shared<Node>();
  node->kind = Kind::power;
  node->nvars = child.nvars();
  node->degree = static_cast<int>(k) * child.degree();
  node->exponent = k;
  node->children.push_back(std::move(child));
  return ConvexCertificate(std::move(node));
}

namespace {

Polynomial cached_pow(const Polynomial& base, unsigned k,
                      ConvexCertificate::ExpansionCache* cache) {
  if (!cache) return pow(base, k);
  auto key = std::make_pair(base, k);
  auto it = cache->powers.find(key);
  if (it != cache->powers.end()) return it->second;
  Polynomial r = pow(base, k);
  cache->powers.emplace(std::move(key), r);
  return r;
}

}  // namespace

Polynomial ConvexCertificate::expand(ExpansionCache* cache) const {
  switch (node_->kind) {
    case Kind::affine_square:
      return node_->affine * node_->affine;
    case Kind::even_power: {
      Exponent a(node_->nvars);
      a.set(node_->var, node_->exponent);
      return Polynomial::monomial(node_->nvars, Rational(1), a);
    }
    case Kind::scale:
      return node_->factor * node_->children.front().expand(cache);
    case Kind::sum: {
      Polynomial r(node_->nvars);
      for (const auto& ch : node_->children) r += ch.expand(cache);
      return r;
    }
    case Kind::power:
      return cached_pow(node_->children.front().expand(cache), node_->exponent, cache);
  }
  throw std::logic_error("unreachable certificate kind");
}

int component_degree(const DcsosDecomposition& d) {
  int deg = 0;
  for (const auto& t : d.g)
    if (!t.weight.is_zero()) deg = std::max(deg, t.certificate.degree());
  for (const auto& t : d.h)
    if (!t.weight.is_zero()) deg = std::max(deg, t.certificate.degree());
  return deg;
}

DcsosDecomposition elementary_xy(int nvars, int i, int j, XYForm form) {
  if (i == j) throw PreconditionError("elementary_xy needs two distinct variables");
  Polynomial xi = Polynomial::variable(nvars, i);
  Polynomial xj = Polynomial::variable(nvars, j);
  DcsosDecomposition d = DcsosDecomposition::zero(nvars);
  if (form == XYForm::difference_of_squares) {
    // x_i x_j = (x_i+x_j)^2/4 - (x_i-x_j)^2/4
    d.g.push_back({Rational(1, 4), ConvexCertificate::affine_square(xi + xj)});
    d.h.push_back({Rational(1, 4), ConvexCertificate::affine_square(xi - xj)});
  } else {
    // x_i x_j = (x_i+x_j)^2/2 - (x_i^2 + x_j^2)/2
    d.g.push_back({Rational(1, 2), ConvexCertificate::affine_square(xi + xj)});
    d.h.push_back({Rational(1, 2),
                   ConvexCertificate::sum(nvars, {ConvexCertificate::even_power(nvars, i, 2),
                                                  ConvexCertificate::even_power(nvars, j, 2)})});
  }
  return d;
}

DcsosDecomposition elementary_x(int nvars, int i) {
  // the pair-with-1 form: x_i = (x_i+1)^2/4 - (x_i-1)^2/4
  Polynomial xi = Polynomial::variable(nvars, i);
  Polynomial one = Polynomial::constant(nvars, Rational(1));
  DcsosDecomposition d = DcsosDecomposition::zero(nvars);
  d.g.push_back({Rational(1, 4), ConvexCertificate::affine_square(xi + one)});
  d.h.push_back({Rational(1, 4), ConvexCertificate::affine_square(xi - one)});
  return d;
}

DcsosDecomposition elementary_even(int nvars, int i, unsigned exponent) {
  DcsosDecomposition d = DcsosDecomposition::zero(nvars);
  d.g.push_back({Rational(1), ConvexCertificate::even_power(nvars, i, exponent)});
  return d;
}

namespace {

// Wraps the weights into the certificates so a whole component can sit
// inside one sum node.
std::vector<ConvexCertificate> as_certificates(const std::vector<WeightedCertificate>& items) {
  std::vector<ConvexCertificate> out;
  out.reserve(items.size());
  for (const auto& t : items)
    out.push_back(t.weight.is_one() ? t.certificate
                                    : ConvexCertificate::scale(t.weight, t.certificate));
  return out;
}

void push_square_of_sum(DcsosDecomposition& d, std::vector<WeightedCertificate>& side,
                        const std::vector<WeightedCertificate>& u,
                        const std::vector<WeightedCertificate>& v) {
  if (u.empty() && v.empty()) return;  // denotes zero, nothing to add
  std::vector<ConvexCertificate> children = as_certificates(u);
  auto rest = as_certificates(v);
  std::move(rest.begin(), rest.end(), std::back_inserter(children));
  ConvexCertificate inner = children.size() == 1
                                ? std::move(children.front())
                                : ConvexCertificate::sum(d.nvars, std::move(children));
  side.push_back({Rational(1, 2), ConvexCertificate::power(std::move(inner), 2)});
}

}  // namespace

DcsosDecomposition dcsos_product(const DcsosDecomposition& a, const DcsosDecomposition& b) {
  if (a.nvars != b.nvars) throw DimensionError("dcsos_product over different variable universes");
  DcsosDecomposition r = DcsosDecomposition::zero(a.nvars);
  push_square_of_sum(r, r.g, a.g, b.g);
  push_square_of_sum(r, r.g, a.h, b.h);
  push_square_of_sum(r, r.h, a.g, b.h);
  push_square_of_sum(r, r.h, a.h, b.g);
  return r;
}

WorkList procedure_s(const Exponent& alpha, EvenPartMode mode) {
  const int nvars = alpha.nvars();
  WorkList items;

  const ParitySplit split = parity_separate(alpha);
  const auto& odd = split.odd_index_set;
  for (std::size_t k = 0; k < odd.size(); k += 2) {
    if (k + 1 < odd.size())
      items.push_back(elementary_xy(nvars, odd[k], odd[k + 1]));
    else
      items.push_back(elementary_x(nvars, odd[k]));
  }
  for (int i = 0; i < nvars; ++i) {
    unsigned half = split.even_root[i];
    if (half == 0) continue;
    if (mode == EvenPartMode::per_square) {
      for (unsigned rep = 0; rep < half; ++rep) items.push_back(elementary_even(nvars, i, 2));
    } else {
      items.push_back(elementary_even(nvars, i, 2 * half));
    }
  }
  return items;
}

DcsosDecomposition procedure_m(WorkList items) {
  if (items.empty()) throw PreconditionError("procedure_m needs a nonempty work list");
  while (items.size() > 1) {
    std::stable_sort(items.begin(), items.end(),
                     [](const DcsosDecomposition& x, const DcsosDecomposition& y) {
                       return component_degree(x) < component_degree(y);
                     });
    DcsosDecomposition prod = dcsos_product(items[0], items[1]);
    items.erase(items.begin(), items.begin() + 2);
    items.push_back(std::move(prod));
  }
  return items.front();
}

DcsosDecomposition multiply_left_to_right(WorkList items) {
  if (items.empty()) throw PreconditionError("empty work list");
  DcsosDecomposition acc = items.front();
  for (std::size_t k = 1; k < items.size(); ++k) acc = dcsos_product(acc, items[k]);
  return acc;
}

namespace {

DcsosDecomposition constant_decomposition(int nvars, const Rational& c) {
  DcsosDecomposition d = DcsosDecomposition::zero(nvars);
  if (c.is_zero()) return d;
  WeightedCertificate t{c.abs(), ConvexCertificate::affine_square(
                                     Polynomial::constant(nvars, Rational(1)))};
  (c.sign() > 0 ? d.g : d.h).push_back(std::move(t));
  return d;
}

// Multiplies every weight by |c| and swaps the components when c < 0.
DcsosDecomposition apply_coefficient(DcsosDecomposition d, const Rational& c) {
  Rational a = c.abs();
  if (!a.is_one())
    for (auto* side : {&d.g, &d.h})
      for (auto& t : *side) t.weight *= a;
  if (c.sign() < 0) std::swap(d.g, d.h);
  return d;
}

}  // namespace

DcsosDecomposition dcsos_parity_monomial(const Monomial& m, int nvars, bool improved) {
  if (m.coeff.is_zero()) return DcsosDecomposition::zero(nvars);
  if (m.exponent.is_constant()) return constant_decomposition(nvars, m.coeff);
  WorkList items = procedure_s(m.exponent);
  DcsosDecomposition d = improved ? procedure_m(std::move(items))
                                  : multiply_left_to_right(std::move(items));
  return apply_coefficient(std::move(d), m.coeff);
}

DcsosDecomposition multilinear_expand(const std::vector<ConvexCertificate>& factors) {
  if (factors.empty()) throw PreconditionError("multilinear_expand needs at least one factor");
  const std::size_t n = factors.size();
  const int nvars = factors.front().nvars();
  const Rational weight = Rational(1) / Rational::factorial(static_cast<unsigned>(n));

  DcsosDecomposition d = DcsosDecomposition::zero(nvars);
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<ConvexCertificate> selected;
    for (std::size_t j = 0; j < n; ++j)
      if (mask & (std::uint64_t{1} << j)) selected.push_back(factors[j]);
    const bool positive = (selected.size() + n) % 2 == 0;  // sign (-1)^(|A|+n)
    ConvexCertificate inner = selected.size() == 1
                                  ? std::move(selected.front())
                                  : ConvexCertificate::sum(nvars, std::move(selected));
    WeightedCertificate t{weight,
                          ConvexCertificate::power(std::move(inner), static_cast<unsigned>(n))};
    (positive ? d.g : d.h).push_back(std::move(t));
  }
  return d;
}

DcsosDecomposition dcsos_minimal_monomial(const Monomial& m, int nvars) {
  if (m.coeff.is_zero()) return DcsosDecomposition::zero(nvars);
  if (m.exponent.is_constant()) return constant_decomposition(nvars, m.coeff);

  // r = ceil(deg(m)/2) elementary items g_i - h_i, all quadratic or zero
  WorkList items = procedure_s(m.exponent, EvenPartMode::per_square);
  const std::size_t r = items.size();

  std::vector<ConvexCertificate> g_certs, h_certs;
  std::vector<bool> has_h;
  for (const auto& item : items) {
    g_certs.push_back(as_certificates(item.g).front());
    if (item.h.empty()) {
      h_certs.push_back(g_certs.back());  // placeholder, never selected
      has_h.push_back(false);
    } else {
      h_certs.push_back(as_certificates(item.h).front());
      has_h.push_back(true);
    }
  }

  DcsosDecomposition out = DcsosDecomposition::zero(nvars);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << r); ++mask) {
    bool zero_factor = false;
    int picked = 0;
    std::vector<ConvexCertificate> factors;
    for (std::size_t i = 0; i < r; ++i) {
      if (mask & (std::uint64_t{1} << i)) {
        if (!has_h[i]) {
          zero_factor = true;
          break;
        }
        factors.push_back(h_certs[i]);
        ++picked;
      } else {
        factors.push_back(g_certs[i]);
      }
    }
    if (zero_factor) continue;

    DcsosDecomposition sub = multilinear_expand(factors);
    const bool positive = picked % 2 == 0;  // sign (-1)^|A|
    auto append = [&](std::vector<WeightedCertificate>& dst,
                      std::vector<WeightedCertificate>& src) {
      std::move(src.begin(), src.end(), std::back_inserter(dst));
    };
    append(positive ? out.g : out.h, sub.g);
    append(positive ? out.h : out.g, sub.h);
  }
  return apply_coefficient(std::move(out), m.coeff);
}

DcsosDecomposition dcsos_minimal_direct(const Monomial& m, int nvars) {
  if (m.coeff.is_zero()) return DcsosDecomposition::zero(nvars);
  if (m.exponent.is_constant()) return constant_decomposition(nvars, m.coeff);

  // the variable list with multiplicity, padded by 1 for odd degree
  std::vector<Polynomial> y;
  for (int i = 0; i < nvars; ++i)
    for (unsigned rep = 0; rep < m.exponent[i]; ++rep)
      y.push_back(Polynomial::variable(nvars, i));
  if (y.size() % 2 != 0) y.push_back(Polynomial::constant(nvars, Rational(1)));

  const std::size_t n = y.size();  // 2*ceil(deg/2), even
  const unsigned half = static_cast<unsigned>(n / 2);
  const Rational weight = Rational(1) / Rational::factorial(static_cast<unsigned>(n));

  DcsosDecomposition d = DcsosDecomposition::zero(nvars);
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    Polynomial linear(nvars);
    int picked = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (mask & (std::uint64_t{1} << j)) {
        linear += y[j];
        ++picked;
      }
    // (sum y_j)^(2*half) certified as (affine^2)^half; sign (-1)^(|A|+n)
    // reduces to (-1)^|A| because n is even
    WeightedCertificate t{
        weight, ConvexCertificate::power(ConvexCertificate::affine_square(std::move(linear)), half)};
    (picked % 2 == 0 ? d.g : d.h).push_back(std::move(t));
  }
  return apply_coefficient(std::move(d), m.coeff);
}

DcsosDecomposition dcsos_polynomial(const Polynomial& p, DcsosAlgo algo) {
  DcsosDecomposition d = DcsosDecomposition::zero(p.nvars());
  for (const auto& [a, c] : p.terms()) {
    Monomial m{c, a};
    DcsosDecomposition part;
    switch (algo) {
      case DcsosAlgo::parity:
        part = dcsos_parity_monomial(m, p.nvars(), false);
        break;
      case DcsosAlgo::parity_improved:
        part = dcsos_parity_monomial(m, p.nvars(), true);
        break;
      case DcsosAlgo::minimal:
        part = dcsos_minimal_monomial(m, p.nvars());
        break;
      case DcsosAlgo::minimal_direct:
        part = dcsos_minimal_direct(m, p.nvars());
        break;
    }
    std::move(part.g.begin(), part.g.end(), std::back_inserter(d.g));
    std::move(part.h.begin(), part.h.end(), std::back_inserter(d.h));
  }
  return d;
}

}  // namespace dcsos
