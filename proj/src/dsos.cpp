#include "dcsos/dsos.hpp"

#include "dcsos/errors.hpp"

namespace dcsos {

namespace {

Polynomial exponent_poly(int nvars, const Exponent& a) {
  return Polynomial::monomial(nvars, Rational(1), a);
}

// Routes the three squares of the parity identity, swapping parts for a
// negative coefficient so stored weights stay positive.
void route(DsosDecomposition& d, bool to_positive, SquareTerm term) {
  (to_positive ? d.positive : d.negative).push_back(std::move(term));
}

}  // namespace

DsosDecomposition dsos_product(const DsosDecomposition& a, const DsosDecomposition& b) {
  if (a.exactness != Exactness::exact || b.exactness != Exactness::exact)
    throw PreconditionError("dsos_product requires exact decompositions");
  if (a.nvars != b.nvars) throw DimensionError("dsos_product over different variable universes");
  DsosDecomposition r = DsosDecomposition::zero(a.nvars);
  auto cross = [&](const std::vector<SquareTerm>& u, const std::vector<SquareTerm>& v,
                   std::vector<SquareTerm>& out) {
    for (const auto& x : u)
      for (const auto& y : v) out.push_back({x.weight * y.weight, x.base * y.base});
  };
  cross(a.positive, b.positive, r.positive);
  cross(a.negative, b.negative, r.positive);
  cross(a.positive, b.negative, r.negative);
  cross(a.negative, b.positive, r.negative);
  return r;
}

DsosDecomposition dsos_parity_monomial(const Monomial& m, int nvars, const Rational& s,
                                       const ParitySplit& split) {
  if (s.sign() <= 0) throw ParameterError("parity decomposition needs s > 0");
  if (split.recombined() != m.exponent)
    throw SeparationError("parity split does not reproduce the monomial");
  DsosDecomposition d = DsosDecomposition::zero(nvars);
  if (m.coeff.is_zero()) return d;

  const Polynomial o = exponent_poly(nvars, split.odd_part);
  const Polynomial e = exponent_poly(nvars, split.even_root);
  const Rational w = m.coeff.abs();
  const bool pos = m.coeff.sign() > 0;
  const Rational half_s = w / (Rational(2) * s);

  // m = c/(2s) (e*o + s*e)^2 - [ c/(2s) (o*e)^2 + c*s/2 * e^2 ]
  route(d, pos, {half_s, e * o + s * e});
  route(d, !pos, {half_s, o * e});
  route(d, !pos, {w * s / Rational(2), e});
  return d;
}

DsosDecomposition procedure_d(const Exponent& odd_part) {
  if (!odd_part.is_squarefree())
    throw PreconditionError("procedure_d needs a squarefree monomial");
  const int nvars = odd_part.nvars();

  // Empty odd part: the multiplicative identity, a single unit square.
  DsosDecomposition acc = DsosDecomposition::zero(nvars);
  acc.positive.push_back({Rational(1), Polynomial::constant(nvars, Rational(1))});

  std::vector<int> vars;
  for (int i = 0; i < nvars; ++i)
    if (odd_part[i] == 1) vars.push_back(i);

  const Rational quarter(1, 4);
  for (std::size_t k = 0; k < vars.size(); k += 2) {
    Polynomial xi = Polynomial::variable(nvars, vars[k]);
    Polynomial xj = (k + 1 < vars.size()) ? Polynomial::variable(nvars, vars[k + 1])
                                          : Polynomial::constant(nvars, Rational(1));
    DsosDecomposition pair = DsosDecomposition::zero(nvars);
    pair.positive.push_back({quarter, xi + xj});
    pair.negative.push_back({quarter, xi - xj});
    acc = dsos_product(acc, pair);
  }
  return acc;
}

DsosDecomposition dsos_parity_improved(const Monomial& m, int nvars) {
  DsosDecomposition d = DsosDecomposition::zero(nvars);
  if (m.coeff.is_zero()) return d;

  const ParitySplit split = parity_separate(m.exponent);
  DsosDecomposition odd = procedure_d(split.odd_part);
  const Polynomial e = exponent_poly(nvars, split.even_root);
  const Rational w = m.coeff.abs();
  const bool pos = m.coeff.sign() > 0;

  auto lift = [&](const std::vector<SquareTerm>& in, std::vector<SquareTerm>& out) {
    for (const auto& t : in) out.push_back({w * t.weight, t.base * e});
  };
  lift(odd.positive, pos ? d.positive : d.negative);
  lift(odd.negative, pos ? d.negative : d.positive);
  return d;
}

namespace {

template <typename Fn>
DsosDecomposition by_linearity(const Polynomial& p, Fn&& per_monomial) {
  DsosDecomposition d = DsosDecomposition::zero(p.nvars());
  for (const auto& [a, c] : p.terms()) {
    DsosDecomposition part = per_monomial(Monomial{c, a});
    std::move(part.positive.begin(), part.positive.end(), std::back_inserter(d.positive));
    std::move(part.negative.begin(), part.negative.end(), std::back_inserter(d.negative));
  }
  return d;
}

}  // namespace

DsosDecomposition dsos_parity_polynomial(const Polynomial& p, const Rational& s) {
  return by_linearity(p, [&](const Monomial& m) {
    return dsos_parity_monomial(m, p.nvars(), s, parity_separate(m.exponent));
  });
}

DsosDecomposition dsos_parity_improved_polynomial(const Polynomial& p) {
  return by_linearity(p, [&](const Monomial& m) { return dsos_parity_improved(m, p.nvars()); });
}

}  // namespace dcsos
