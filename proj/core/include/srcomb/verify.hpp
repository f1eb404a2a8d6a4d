#pragma once

#include <functional>
#include <string>

#include "srcomb/posets.hpp"
#include "srcomb/riordan.hpp"

namespace srcomb {

/// Outcome of a batch of exact identity checks.  Mismatches never throw;
/// the first counterexample is captured with both values so callers (CLI
/// and tests) can print it.
struct VerifyReport {
  bool ok = true;
  long checks = 0;
  std::string first_failure;

  void record(bool pass, const std::function<std::string()>& describe) {
    ++checks;
    if (!pass && ok) {
      ok = false;
      first_failure = describe();
    }
  }
  void merge(const VerifyReport& other) {
    checks += other.checks;
    if (!other.ok && ok) {
      ok = false;
      first_failure = other.first_failure;
    }
  }
};

/// All second-kind recurrences: the three basic identities, the derivative
/// recurrence, the singleton and general block-removal recurrences, the
/// reduction formula, the k = 0 propositions and the Bell recurrences,
/// checked for 0 <= k <= n <= n_max.
VerifyReport verify_recurrences_second(const IndexSet& S, long r, long n_max, std::size_t order);
/// First-kind analogues.
VerifyReport verify_recurrences_first(const IndexSet& S, long r, long n_max, std::size_t order);

/// Generating-function values against the exhaustive enumeration oracles.
VerifyReport verify_oracle_second(const IndexSet& S, long r, long n_max,
                                  EnumerationGuards guards = {});
VerifyReport verify_oracle_first(const IndexSet& S, long r, long n_max,
                                 EnumerationGuards guards = {});

/// M * M^-1 = I for both kinds, plus the inverse relation on pseudo-random
/// integer vectors.  Requires 1 in S.
VerifyReport verify_orthogonality(const SRContext& ctx, std::size_t size);

/// Column sums of the Mobius function of the pair posets against the
/// inverse-matrix entries, all k <= n.
VerifyReport verify_mobius(const IndexSet& S, long r, long n, StirlingKind kind,
                           const PairEnumerationOptions& opts = {});

/// The constrained-orientation count against the (k+r)!^2 formula.
VerifyReport verify_orientation_formula(long n1, long n2, long r, const IndexSet& S);

/// Finite-sum values against EGF coefficients for poly-Bernoulli and both
/// poly-Cauchy kinds, n <= n_max.
VerifyReport verify_poly_egf(const IndexSet& S, long r, long mu, long n_max);

}  // namespace srcomb
