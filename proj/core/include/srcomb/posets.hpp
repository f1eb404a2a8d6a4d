#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "srcomb/index_set.hpp"
#include "srcomb/rational.hpp"

namespace srcomb {

/// An r-tuple of disjoint subsets of [n] (the composition; components may
/// be empty, with sizes in S') together with a set partition of the
/// complement (block sizes in S).  Canonical form: elements sorted inside
/// every set, blocks sorted by least element.
struct CompositionPartitionPair {
  std::vector<std::vector<int>> components;
  std::vector<std::vector<int>> blocks;

  long block_count() const { return static_cast<long>(blocks.size()); }
  void canonicalize();
  /// Checks disjointness, coverage of [n] and the size conditions.
  bool is_valid(const IndexSet& S, long r, long n) const;
  std::string to_string() const;

  friend bool operator==(const CompositionPartitionPair& a, const CompositionPartitionPair& b) {
    return a.components == b.components && a.blocks == b.blocks;
  }
  friend bool operator<(const CompositionPartitionPair& a, const CompositionPartitionPair& b) {
    if (a.components != b.components) return a.components < b.components;
    return a.blocks < b.blocks;
  }
};

/// The first-kind analogue: components carry linear orders, the partition
/// part is a permutation stored as cycles.  Each cycle lists its least
/// element first; cycles are sorted by least element.
struct CompositionPermutationPair {
  std::vector<std::vector<int>> components;  // sequences; order is significant
  std::vector<std::vector<int>> cycles;

  long cycle_count() const { return static_cast<long>(cycles.size()); }
  void canonicalize();
  bool is_valid(const IndexSet& S, long r, long n) const;
  std::string to_string() const;

  friend bool operator==(const CompositionPermutationPair& a,
                         const CompositionPermutationPair& b) {
    return a.components == b.components && a.cycles == b.cycles;
  }
  friend bool operator<(const CompositionPermutationPair& a,
                        const CompositionPermutationPair& b) {
    if (a.components != b.components) return a.components < b.components;
    return a.cycles < b.cycles;
  }
};

/// Direct form of the partial order: every component of b grows from the
/// corresponding component of a by absorbing t whole blocks of a (t in S'),
/// and every block of b is a union of s blocks of a (s in S).
bool leq_pairs(const CompositionPartitionPair& a, const CompositionPartitionPair& b,
               const IndexSet& S);
/// Ordered analogue: components grow by concatenating t cycles (t in S'),
/// cycles of b are concatenations of s cycles of a (s in S), each
/// constituent cycle contributing its least-first sequence.
bool leq_ordered(const CompositionPermutationPair& a, const CompositionPermutationPair& b,
                 const IndexSet& S);

/// Successors reachable by one application of the generating operations
/// (join blocks / absorb blocks into one component, and the cycle
/// analogues).  Used to verify that the operational and direct definitions
/// of the order coincide.
std::vector<CompositionPartitionPair> one_step_successors(const CompositionPartitionPair& p,
                                                          const IndexSet& S);
std::vector<CompositionPermutationPair> one_step_successors(const CompositionPermutationPair& p,
                                                            const IndexSet& S);

struct PairEnumerationOptions {
  /// Accept a yes-up-to-bound monoid verdict.  The bound actually used is
  /// recorded in the poset report string.
  bool allow_bounded_monoid = false;
  long monoid_bound = 64;
  long max_n_partitions = 7;
  long max_n_permutations = 6;
};

/// All composition-partition pairs over [n], canonical and sorted.
/// Requires S to pass the +1-monoid check (see options).
std::vector<CompositionPartitionPair> enumerate_partition_pairs(
    const IndexSet& S, long r, long n, const PairEnumerationOptions& opts = {});
std::vector<CompositionPermutationPair> enumerate_permutation_pairs(
    const IndexSet& S, long r, long n, const PairEnumerationOptions& opts = {});

/// A finite poset materialized as an explicit relation.  The order axioms
/// (reflexivity, antisymmetry, transitivity) are verified on construction,
/// as is the existence of a unique least element.
class Poset {
 public:
  Poset(std::vector<std::string> labels, std::vector<long> part_counts,
        const std::function<bool(std::size_t, std::size_t)>& leq_fn);

  std::size_t size() const { return labels_.size(); }
  bool leq(std::size_t x, std::size_t y) const;
  long part_count(std::size_t x) const { return part_counts_[x]; }
  const std::string& label(std::size_t x) const { return labels_[x]; }
  std::size_t zero_hat() const { return zero_hat_; }

  /// mu(x, y) computed by inverting the zeta matrix of the interval [x, y]
  /// (exact lower-triangular inversion); throws unless x <= y.
  BigInt mobius(std::size_t x, std::size_t y) const;
  /// mu(zero_hat, x) for every x, by the defining recursion in one pass.
  std::vector<BigInt> mobius_from_bottom() const;
  /// sum of mu(zero_hat, x) over elements with the given part count.
  BigInt mobius_column_sum(long k) const;

  /// Number of elements y >= x with part count j.
  BigInt count_above(std::size_t x, long j) const;

  /// Hasse diagram (cover relation) in DOT format; element order and
  /// therefore output bytes are stable.
  std::string to_dot() const;

 private:
  std::size_t words() const { return (size() + 63) / 64; }
  std::vector<std::string> labels_;
  std::vector<long> part_counts_;
  std::vector<std::uint64_t> down_;  // row y: bitset over x with x <= y
  std::vector<std::size_t> linear_extension_;
  std::size_t zero_hat_ = 0;
};

/// The poset of composition-partition pairs with its elements.
struct PartitionPairPoset {
  IndexSet S;
  long r;
  long n;
  std::vector<CompositionPartitionPair> elements;  // sorted; index matches poset
  Poset poset;

  static PartitionPairPoset build(const IndexSet& S, long r, long n,
                                  const PairEnumerationOptions& opts = {});
  std::size_t index_of(const CompositionPartitionPair& p) const;
};

struct PermutationPairPoset {
  IndexSet S;
  long r;
  long n;
  std::vector<CompositionPermutationPair> elements;
  Poset poset;

  static PermutationPairPoset build(const IndexSet& S, long r, long n,
                                    const PairEnumerationOptions& opts = {});
  std::size_t index_of(const CompositionPermutationPair& p) const;
};

enum class StirlingKind { second, first };

/// sum over poset elements with k blocks (resp. cycles) of mu(0-hat, x).
/// By the inversion theorem this equals the (n, k) entry of the inverse
/// Stirling matrix of the respective kind.
BigInt mobius_column_sum(const IndexSet& S, long r, long n, long k, StirlingKind kind,
                         const PairEnumerationOptions& opts = {});

/// Checks |{x >= base : part count j}| == |Pi_{S,r}(k, j)| (resp. the
/// ordered version) where k is the part count of the base element.
bool coideal_cardinality_check(const PartitionPairPoset& poset, std::size_t base_index, long j);
bool coideal_cardinality_check(const PermutationPairPoset& poset, std::size_t base_index, long j);
/// One-shot forms: the universe size is read off the base pair and the
/// poset is materialized on the fly.
bool coideal_cardinality_check(const IndexSet& S, const CompositionPartitionPair& base, long j,
                               const PairEnumerationOptions& opts = {});
bool coideal_cardinality_check(const IndexSet& S, const CompositionPermutationPair& base, long j,
                               const PairEnumerationOptions& opts = {});

}  // namespace srcomb
