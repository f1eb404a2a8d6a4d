#include "srcomb/stirling.hpp"

#include <algorithm>
#include <stdexcept>

namespace srcomb {

struct SRContext::Tables {
  std::vector<std::vector<BigInt>> second;  // [n][k]
  std::vector<std::vector<BigInt>> first;
  std::vector<BigInt> bell;
};

namespace {

BigInt entry_as_count(const Rational& coeff, const char* kind, long n, long k) {
  if (!coeff.is_integer() || coeff < Rational(0))
    throw std::logic_error(std::string("SRContext: ") + kind + " entry (" + std::to_string(n) +
                           "," + std::to_string(k) + ") is not a nonnegative integer: " +
                           coeff.to_string());
  return coeff.to_integer();
}

// Fills table[n][k] = n! [x^n] g f^k / k! for 0 <= k <= n <= order.
std::vector<std::vector<BigInt>> triangle_from_gf(const EgfSeries& g, const EgfSeries& f,
                                                  std::size_t order, const char* kind) {
  std::vector<std::vector<BigInt>> table(order + 1);
  for (std::size_t n = 0; n <= order; ++n) table[n].resize(n + 1);
  EgfSeries column = g;  // g f^k / k!, starting at k = 0
  for (std::size_t k = 0; k <= order; ++k) {
    for (std::size_t n = k; n <= order; ++n)
      table[n][k] = entry_as_count(column.egf_coefficient(n), kind, static_cast<long>(n),
                                   static_cast<long>(k));
    if (k < order)
      column = (column * f).scalar_mul(Rational(1, static_cast<long>(k) + 1));
  }
  return table;
}

}  // namespace

SRContext::SRContext(IndexSet S, long r, std::size_t order, EnumerationGuards guards)
    : set_(std::move(S)), r_(r), order_(order), guards_(guards) {
  if (r < 0) throw std::invalid_argument("SRContext: r must be >= 0");
  auto tables = std::make_shared<Tables>();

  const EgfSeries block = set_.block_egf(order);
  const EgfSeries component_power = set_.component_egf(order).pow(static_cast<unsigned long>(r));
  tables->second = triangle_from_gf(component_power, block, order, "second-kind");

  const EgfSeries cycle = set_.cycle_gf(order);
  const EgfSeries shifted_power =
      set_.shifted_power_sum(order).pow(static_cast<unsigned long>(r));
  tables->first = triangle_from_gf(shifted_power, cycle, order, "first-kind");

  // Bell numbers, twice: row sums of the triangle and the closed-form EGF
  // g exp(E_S); the two must agree exactly.
  const EgfSeries bell_egf = component_power * block.exp();
  tables->bell.resize(order + 1);
  for (std::size_t n = 0; n <= order; ++n) {
    BigInt row_sum = 0;
    for (const auto& v : tables->second[n]) row_sum += v;
    const BigInt via_egf =
        entry_as_count(bell_egf.egf_coefficient(n), "bell", static_cast<long>(n), -1);
    if (row_sum != via_egf)
      throw std::logic_error("SRContext: Bell row sum " + row_sum.get_str() +
                             " disagrees with EGF value " + via_egf.get_str() + " at n = " +
                             std::to_string(n));
    tables->bell[n] = row_sum;
  }
  tables_ = std::move(tables);
}

void SRContext::check_n(long n) const {
  if (n < 0 || static_cast<std::size_t>(n) > order_)
    throw std::invalid_argument("SRContext: n = " + std::to_string(n) +
                                " outside truncation order " + std::to_string(order_));
}

BigInt SRContext::stirling2(long n, long k) const {
  check_n(n);
  if (k < 0 || k > n) return 0;
  return tables_->second[n][k];
}

BigInt SRContext::stirling1(long n, long k) const {
  check_n(n);
  if (k < 0 || k > n) return 0;
  return tables_->first[n][k];
}

BigInt SRContext::bell(long n) const {
  check_n(n);
  return tables_->bell[n];
}

IntPolynomial SRContext::bell_polynomial(long n) const {
  check_n(n);
  std::vector<BigInt> coeffs(n + 1);
  for (long k = 0; k <= n; ++k) coeffs[k] = tables_->second[n][k];
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial SRContext::factorial_polynomial(long n) const {
  check_n(n);
  std::vector<BigInt> coeffs(n + 1);
  for (long k = 0; k <= n; ++k) coeffs[k] = tables_->first[n][k];
  return IntPolynomial(std::move(coeffs));
}

BigInt SRContext::stirling2_k0(long n) const {
  check_n(n);
  if (!set_.contains(1)) {
    // {n 0}_{S,r} = r! {n r}_{S - 1}
    const SRContext shifted_ctx(set_.shifted(-1), 0, order_, guards_);
    return factorial(static_cast<unsigned long>(r_)) * shifted_ctx.stirling2(n, r_);
  }
  // 1 in S: sum_i (r)_i {n i} over the derivative set (positive sizes only)
  const SRContext derived_ctx(set_.derivative().without_zero(), 0, order_, guards_);
  BigInt total = 0;
  for (long i = 0; i <= r_; ++i) total += falling_factorial(r_, i) * derived_ctx.stirling2(n, i);
  return total;
}

namespace {

struct PartitionEnumerator {
  const IndexSet& S;
  long r;
  long total;  // n + r elements
  std::vector<std::vector<int>> blocks;
  std::vector<char> block_has_special;
  std::vector<BigInt>* counts = nullptr;  // by k
  std::vector<std::vector<std::vector<int>>>* witnesses = nullptr;
  long witness_k = -1;

  void finish() {
    for (const auto& b : blocks)
      if (!S.contains(static_cast<long>(b.size()))) return;
    const long k = static_cast<long>(blocks.size()) - r;
    if (counts && k >= 0 && k < static_cast<long>(counts->size())) (*counts)[k] += 1;
    if (witnesses && k == witness_k) {
      auto canon = blocks;  // elements are inserted in increasing order already
      std::sort(canon.begin(), canon.end(),
                [](const auto& a, const auto& b) { return a.front() < b.front(); });
      witnesses->push_back(std::move(canon));
    }
  }

  void place(long e) {
    if (e > total) {
      finish();
      return;
    }
    const bool special = e <= r;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      if (special && block_has_special[i]) continue;
      blocks[i].push_back(static_cast<int>(e));
      const char saved = block_has_special[i];
      if (special) block_has_special[i] = 1;
      place(e + 1);
      block_has_special[i] = saved;
      blocks[i].pop_back();
    }
    blocks.push_back({static_cast<int>(e)});
    block_has_special.push_back(special ? 1 : 0);
    place(e + 1);
    block_has_special.pop_back();
    blocks.pop_back();
  }
};

void check_partition_guard(const SRContext& ctx, long n) {
  if (n < 0) throw std::invalid_argument("oracle_partitions: n must be >= 0");
  if (n + ctx.special_count() > ctx.guards().partitions)
    throw std::invalid_argument(
        "oracle_partitions: n + r = " + std::to_string(n + ctx.special_count()) +
        " exceeds enumeration guard " + std::to_string(ctx.guards().partitions));
}

}  // namespace

std::vector<BigInt> oracle_partition_counts(const SRContext& ctx, long n) {
  check_partition_guard(ctx, n);
  std::vector<BigInt> counts(n + 1);
  PartitionEnumerator en{ctx.set(), ctx.special_count(), n + ctx.special_count(), {}, {}};
  en.counts = &counts;
  en.place(1);
  return counts;
}

BigInt oracle_partitions(const SRContext& ctx, long n, long k) {
  if (k < 0 || k > n) return 0;
  return oracle_partition_counts(ctx, n)[k];
}

std::vector<std::vector<std::vector<int>>> oracle_partition_witnesses(const SRContext& ctx,
                                                                      long n, long k) {
  check_partition_guard(ctx, n);
  std::vector<std::vector<std::vector<int>>> out;
  PartitionEnumerator en{ctx.set(), ctx.special_count(), n + ctx.special_count(), {}, {}};
  en.witnesses = &out;
  en.witness_k = k;
  en.place(1);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void check_permutation_guard(const SRContext& ctx, long n) {
  if (n < 0) throw std::invalid_argument("oracle_permutations: n must be >= 0");
  if (n + ctx.special_count() > ctx.guards().permutations)
    throw std::invalid_argument(
        "oracle_permutations: n + r = " + std::to_string(n + ctx.special_count()) +
        " exceeds enumeration guard " + std::to_string(ctx.guards().permutations));
}

}  // namespace

std::vector<BigInt> oracle_permutation_counts(const SRContext& ctx, long n) {
  check_permutation_guard(ctx, n);
  const long r = ctx.special_count();
  const long total = n + r;
  std::vector<BigInt> counts(n + 1);

  std::vector<int> image(total);
  for (long i = 0; i < total; ++i) image[i] = static_cast<int>(i);
  std::vector<char> seen(total);
  do {
    // extract cycles of the one-line form
    std::fill(seen.begin(), seen.end(), 0);
    long cycles = 0;
    bool ok = true;
    for (long start = 0; start < total && ok; ++start) {
      if (seen[start]) continue;
      long len = 0, specials_in_cycle = 0;
      for (long v = start; !seen[v]; v = image[v]) {
        seen[v] = 1;
        ++len;
        if (v < r) ++specials_in_cycle;
      }
      if (specials_in_cycle > 1 || !ctx.set().contains(len)) ok = false;
      ++cycles;
    }
    if (ok) {
      const long k = cycles - r;
      if (k >= 0 && k <= n) counts[k] += 1;
    }
  } while (std::next_permutation(image.begin(), image.end()));
  return counts;
}

BigInt oracle_permutations(const SRContext& ctx, long n, long k) {
  if (k < 0 || k > n) return 0;
  return oracle_permutation_counts(ctx, n)[k];
}

}  // namespace srcomb
