#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "srcomb/series.hpp"

namespace srcomb {

/// Verdict of the +1-monoid test.  The closure condition (Lemma form:
/// s1, s2 in S implies s1+s2-1 in S) is decidable analytically for the
/// closed families; explicit and range sets only get a bounded check, and
/// the verdict type keeps that visible.
struct MonoidCheckResult {
  enum class Verdict { yes, no, yes_up_to_bound };

  Verdict verdict;
  long bound = 0;  // meaningful for yes_up_to_bound
  bool one_missing = false;  // failed because 1 is not in S
  std::optional<std::pair<long, long>> witness;  // (s1,s2) with s1+s2-1 not in S

  bool is_yes() const { return verdict == Verdict::yes; }
  bool is_no() const { return verdict == Verdict::no; }
  std::string describe() const;
};

/// The block-size index set S, a subset of the positive integers.  Supports
/// the closed families used throughout (all, odd, even, {1..m}, {m..},
/// {qk+1 : k >= 0}) as well as explicit finite sets, with exact membership
/// under shifting and element removal.
///
/// Base sets contain only positive integers; derived sets (derivative(),
/// or an explicit zero-allowed shift) may contain 0, which is the legal
/// size of an empty composition component.
class IndexSet {
 public:
  enum class Family { explicit_set, up_to, at_least, all, congruence, odd, even };

  static IndexSet all() { return IndexSet(Family::all, 0); }
  static IndexSet odd() { return IndexSet(Family::odd, 0); }
  static IndexSet even() { return IndexSet(Family::even, 0); }
  static IndexSet up_to(long m);
  static IndexSet at_least(long m);
  /// S_q = {qk + 1 : k >= 0}
  static IndexSet congruence(long q);
  static IndexSet explicit_set(std::vector<long> elements);

  /// Grammar (whitespace-insensitive):
  ///   all | odd | even | 1..m | m.. | mod q | {a,b,c}
  static IndexSet parse(std::string_view text);

  bool contains(long s) const;
  /// All elements <= n, strictly increasing.
  std::vector<long> elements_up_to(long n) const;
  /// Smallest element; throws for an empty set.
  long min_element() const;
  bool is_empty() const;
  bool is_finite() const;

  /// Removes u (which must be a member).  The result may be empty.
  IndexSet remove(long u) const;
  /// {s + a : s in S}; throws if the result would leave the allowed range
  /// (minimum 1, or 0 when allow_zero is set).
  IndexSet shifted(long a, bool allow_zero = false) const;
  /// The derivative S' = {s - 1 : s in S}; may contain 0.
  IndexSet derivative() const { return shifted(-1, true); }
  /// Drops 0 if present (block sizes are positive even when component
  /// sizes come from a derived set).
  IndexSet without_zero() const;

  MonoidCheckResult plus_one_monoid_check(long bound) const;

  /// E_S(x) = sum_{s in S} x^s / s!
  EgfSeries block_egf(std::size_t order) const;
  /// sum_{s in S} x^(s-1) / (s-1)!  (sizes of composition components)
  EgfSeries component_egf(std::size_t order) const;
  /// sum_{s in S} x^s / s
  EgfSeries cycle_gf(std::size_t order) const;
  /// F_S(x) = sum_{s in S} (-1)^(s+1) x^s / s
  EgfSeries alternating_cycle_gf(std::size_t order) const;
  /// sum_{s in S} x^(s-1) with ordinary coefficients
  EgfSeries shifted_power_sum(std::size_t order) const;

  std::string to_string() const;

  Family family() const { return family_; }
  bool is_plain_family() const { return offset_ == 0 && removed_.empty(); }

  friend bool operator==(const IndexSet& a, const IndexSet& b) {
    return a.family_ == b.family_ && a.param_ == b.param_ && a.offset_ == b.offset_ &&
           a.elements_ == b.elements_ && a.removed_ == b.removed_;
  }

 private:
  IndexSet(Family family, long param) : family_(family), param_(param) {}
  bool base_contains(long s) const;
  std::optional<long> try_min() const;

  Family family_;
  long param_ = 0;   // m for up_to / at_least, q for congruence
  long offset_ = 0;  // set = {base element + offset}; unused for explicit sets
  std::vector<long> elements_;  // explicit sets only, sorted
  std::vector<long> removed_;   // removed members, sorted, absolute values
};

}  // namespace srcomb
