#pragma once

// Independent verification of decompositions: exact re-expansion for
// rational routes, coefficient-wise residuals for floating routes, and
// audits of the degree and square-count claims attached to each algorithm,
// plus Hessian spot checks for the convex components.
//
// The audit never looks at how a decomposition was produced; everything is
// recomputed from the input polynomial and the emitted term lists.

#include <cstdint>
#include <string>
#include <vector>

#include "dcsos/dcsos.hpp"
#include "dcsos/dsos.hpp"

namespace dcsos {

enum class AlgoTag {
  alg1,           // parity
  alg2,           // improved parity
  alg3,           // spectral, caller-supplied basis
  alg4,           // spectral, direct basis
  alg5,           // spectral, minimal basis
  alg6,           // parity DCSOS
  alg7,           // improved parity DCSOS
  alg8,           // minimal-degree DCSOS
  minimal_direct, // minimal-degree DCSOS, direct formulation
};

const char* algo_tag_name(AlgoTag tag);

struct AuditOptions {
  // Degree of the odd part used by the parity route; -1 means the minimal
  // split (recomputed per monomial).
  int alg1_odd_degree = -1;
  // Basis degree for the custom spectral route; -1 means the direct basis.
  int alg3_basis_degree = -1;
  // Basis length bound for the custom spectral route; -1 means J + 1.
  long long alg3_basis_length = -1;
  std::uint64_t seed = 0x5eedc0de;
  int spot_points = 100;
  double numeric_tol_scale = 1e-6;
};

struct VerificationReport {
  enum class Match { exact, numeric, failed };

  Match match = Match::failed;
  double max_residual = 0.0;
  int component_degree = 0;
  long long square_count = 0;
  int degree_bound = -1;          // -1: no degree claim for this algorithm
  bool degree_is_equality = false;
  long long square_bound = -1;
  bool square_is_equality = false;
  bool convexity_checked = false;
  double convexity_min_eig = 0.0;
  double min_component_value = 0.0;
  std::uint64_t seed = 0;
  double elapsed_seconds = 0.0;
  std::vector<std::string> violations;

  bool passed() const { return violations.empty(); }
};

// Exact expansion of sum(positive) - sum(negative); requires an exact
// decomposition.
Polynomial expand_decomposition(const DsosDecomposition& d);
Polynomial expand_component(int nvars, const std::vector<SquareTerm>& squares);

// Works for both exactness modes, converting rationals to double.
NumericPolynomial expand_decomposition_numeric(const DsosDecomposition& d);
NumericPolynomial expand_component_numeric(int nvars, const std::vector<NumericSquareTerm>& squares);

// Exact expansion of sum(g) - sum(h).
Polynomial expand_decomposition(const DcsosDecomposition& d);
Polynomial expand_component(int nvars, const std::vector<WeightedCertificate>& component);

VerificationReport audit(const Polynomial& p, const DsosDecomposition& d, AlgoTag tag,
                         const AuditOptions& opts = {});
VerificationReport audit(const Polynomial& p, const DcsosDecomposition& d, AlgoTag tag,
                         const AuditOptions& opts = {});

// Claimed bounds, recomputed from the input polynomial alone.
int claimed_degree_bound(const Polynomial& p, AlgoTag tag, const AuditOptions& opts,
                         bool* is_equality);
long long claimed_square_bound(const Polynomial& p, AlgoTag tag, const AuditOptions& opts,
                               bool* is_equality);

std::string report_summary(const VerificationReport& r);

}  // namespace dcsos
