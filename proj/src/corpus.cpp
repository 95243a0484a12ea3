#include "dcsos/corpus.hpp"

#include "dcsos/rng.hpp"

namespace dcsos {

namespace {

// Random exponent of exactly the given total degree.
Exponent random_exponent(SplitMix64& rng, int nvars, int degree) {
  Exponent a(nvars);
  for (int d = 0; d < degree; ++d) {
    int i = static_cast<int>(rng.below(static_cast<std::uint64_t>(nvars)));
    a.set(i, a[i] + 1);
  }
  return a;
}

Rational random_coeff(SplitMix64& rng, int coeff_max) {
  long long c = rng.range(1, coeff_max);
  if (rng.below(2) == 0) c = -c;
  return Rational(static_cast<long>(c));
}

}  // namespace

std::vector<Polynomial> generate_corpus(const CorpusParams& params) {
  SplitMix64 rng(params.seed);
  std::vector<Polynomial> corpus;
  corpus.reserve(static_cast<std::size_t>(params.count));

  while (static_cast<int>(corpus.size()) < params.count) {
    int nvars = static_cast<int>(rng.range(params.nvars_min, params.nvars_max));
    int degree = static_cast<int>(rng.range(params.degree_min, params.degree_max));
    int terms = static_cast<int>(rng.range(1, params.max_terms));

    Polynomial p(nvars);
    // pin the target degree with the first monomial
    p.add_term(random_exponent(rng, nvars, degree), random_coeff(rng, params.coeff_max));
    for (int t = 1; t < terms; ++t) {
      int d = static_cast<int>(rng.range(0, degree));
      Exponent a = random_exponent(rng, nvars, d);
      if (!p.coeff(a).is_zero()) continue;  // keep the drawn term count honest
      p.add_term(a, random_coeff(rng, params.coeff_max));
    }
    if (p.is_zero() || p.degree() != degree) continue;
    corpus.push_back(std::move(p));
  }
  return corpus;
}

}  // namespace dcsos
