#pragma once

// Seeded random polynomial corpus for property sweeps and benchmarks.
// Coefficients are nonzero integers, at least one monomial attains the
// drawn target degree, and a fixed seed reproduces the corpus exactly.

#include <cstdint>
#include <vector>

#include "dcsos/polynomial.hpp"

namespace dcsos {

struct CorpusParams {
  int count = 200;
  int nvars_min = 1, nvars_max = 4;
  int degree_min = 1, degree_max = 8;
  int max_terms = 8;
  int coeff_max = 9;  // coefficients drawn from [-coeff_max, coeff_max] \ {0}
  std::uint64_t seed = 42;
};

std::vector<Polynomial> generate_corpus(const CorpusParams& params);

}  // namespace dcsos
