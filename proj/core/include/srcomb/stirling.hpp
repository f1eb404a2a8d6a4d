#pragma once

#include <memory>
#include <vector>

#include "srcomb/index_set.hpp"
#include "srcomb/polynomial.hpp"

namespace srcomb {

/// Size caps for the exhaustive enumeration oracles.  These are safety
/// rails, not semantics; callers may raise them.
struct EnumerationGuards {
  long partitions = 12;    // max n + r for set-partition enumeration
  long permutations = 9;   // max n + r for permutation enumeration
};

/// Computation context for one choice of the index set S, the number of
/// special elements r and a truncation order N bounding every n queried.
///
/// The triangles of both kinds are extracted from the generating functions
///   second kind:  n! [x^n] (1/k!) (sum_{s in S} x^(s-1)/(s-1)!)^r (sum_{s in S} x^s/s!)^k
///   first kind:   n! [x^n] (1/k!) (sum_{s in S} x^(s-1))^r (sum_{s in S} x^s/s)^k
/// at construction time; every entry is checked to be a nonnegative integer.
/// Contexts are immutable and cheap to copy (the tables are shared).
class SRContext {
 public:
  explicit SRContext(IndexSet S, long r, std::size_t order = EgfSeries::default_order,
                     EnumerationGuards guards = {});

  const IndexSet& set() const { return set_; }
  long special_count() const { return r_; }
  std::size_t order() const { return order_; }
  const EnumerationGuards& guards() const { return guards_; }

  /// Number of partitions of [n+r] into k+r blocks, the first r elements in
  /// distinct blocks, every block size in S.  Zero for k > n; throws for n
  /// beyond the truncation order.
  BigInt stirling2(long n, long k) const;
  /// Same for permutations into k+r cycles with cycle sizes in S.
  BigInt stirling1(long n, long k) const;
  /// Row sum of the second-kind triangle.  Cross-checked against the
  /// exponential generating function of the Bell sequence on construction.
  BigInt bell(long n) const;

  IntPolynomial bell_polynomial(long n) const;
  IntPolynomial factorial_polynomial(long n) const;

  /// stirling2(n, 0) recomputed through the reduction proposition
  /// (branching on whether 1 is in S) instead of the generating function.
  BigInt stirling2_k0(long n) const;

 private:
  struct Tables;
  void check_n(long n) const;

  IndexSet set_;
  long r_;
  std::size_t order_;
  EnumerationGuards guards_;
  std::shared_ptr<const Tables> tables_;
};

/// Exhaustive count of the (S,r)-partitions of [n+r] into k+r blocks.
BigInt oracle_partitions(const SRContext& ctx, long n, long k);
/// Per-k counts from one enumeration sweep; index k runs 0..n.
std::vector<BigInt> oracle_partition_counts(const SRContext& ctx, long n);
/// The witnessing partitions themselves (blocks sorted by least element),
/// for small n.  Elements are 1..n+r with 1..r special.
std::vector<std::vector<std::vector<int>>> oracle_partition_witnesses(const SRContext& ctx,
                                                                      long n, long k);

/// Exhaustive count over permutations of [n+r] by cycle count.
BigInt oracle_permutations(const SRContext& ctx, long n, long k);
std::vector<BigInt> oracle_permutation_counts(const SRContext& ctx, long n);

}  // namespace srcomb
