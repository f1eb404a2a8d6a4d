#include "srcomb/verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include "srcomb/graph.hpp"
#include "srcomb/polyseq.hpp"

namespace srcomb {

namespace {

// Builds SRContext instances on demand; recurrences hop between nearby
// (S, r) parameter points and table construction is not free.
class ContextCache {
 public:
  explicit ContextCache(std::size_t order) : order_(order) {}

  const SRContext& get(const IndexSet& S, long r) {
    const auto key = std::make_pair(S.to_string(), r);
    auto it = cache_.find(key);
    if (it == cache_.end())
      it = cache_.emplace(key, SRContext(S, r, order_)).first;
    return it->second;
  }

 private:
  std::size_t order_;
  std::map<std::pair<std::string, long>, SRContext> cache_;
};

std::string show(const char* name, const IndexSet& S, long r, long n, long k,
                 const BigInt& lhs, const BigInt& rhs) {
  std::ostringstream os;
  os << name << " fails at S=" << S.to_string() << " r=" << r << " n=" << n;
  if (k >= 0) os << " k=" << k;
  os << ": " << lhs.get_str() << " != " << rhs.get_str();
  return os.str();
}

}  // namespace

VerifyReport verify_recurrences_second(const IndexSet& S, long r, long n_max,
                                       std::size_t order) {
  if (order < static_cast<std::size_t>(n_max) + 1)
    throw std::invalid_argument("verify_recurrences_second: order must exceed n_max");
  VerifyReport rep;
  ContextCache cc(order);
  const SRContext& c = cc.get(S, r);
  const auto selems = S.elements_up_to(n_max + 2);

  // l! {m l}_{S-1} in the reduction formula counts l-compositions with
  // component sizes in S' (empty components allowed when 1 is in S, per the
  // (E_{S'})^l generating function).  Computed here by a binomial DP so the
  // check stays independent of the EGF engine.
  const auto sprime = S.derivative().elements_up_to(n_max);
  std::vector<std::vector<BigInt>> comp(r + 1, std::vector<BigInt>(n_max + 1));
  comp[0][0] = 1;
  for (long l = 1; l <= r; ++l)
    for (long m = 0; m <= n_max; ++m)
      for (long t : sprime) {
        if (t > m) break;
        comp[l][m] += binomial(m, t) * comp[l - 1][m - t];
      }

  auto S2 = [&](const IndexSet& set, long rr, long n, long k) -> BigInt {
    return cc.get(set, rr).stirling2(n, k);
  };

  for (long n = 0; n <= n_max; ++n) {
    for (long k = 0; k <= n; ++k) {
      const BigInt value = c.stirling2(n, k);

      {  // k {n k} = sum_s C(n,s) {n-s k-1}
        BigInt rhs = 0;
        for (long s : selems)
          if (s <= n) rhs += binomial(n, s) * c.stirling2(n - s, k - 1);
        rep.record(BigInt(k) * value == rhs,
                   [&] { return show("id1", S, r, n, k, BigInt(k) * value, rhs); });
      }
      if (r >= 1) {  // r {n k} = sum_s r C(n,s-1) {n-s+1 k}_{r-1}
        BigInt rhs = 0;
        for (long s : selems)
          if (s - 1 <= n) rhs += BigInt(r) * binomial(n, s - 1) * S2(S, r - 1, n - s + 1, k);
        rep.record(BigInt(r) * value == rhs,
                   [&] { return show("id2", S, r, n, k, BigInt(r) * value, rhs); });
      }
      {  // (n+r) {n k} = sum_s s C(n,s) {n-s k-1} + r sum_s s C(n,s-1) {n-s+1 k}_{r-1}
        BigInt rhs = 0;
        for (long s : selems)
          if (s <= n) rhs += BigInt(s) * binomial(n, s) * c.stirling2(n - s, k - 1);
        if (r >= 1)
          for (long s : selems)
            if (s - 1 <= n)
              rhs += BigInt(r) * BigInt(s) * binomial(n, s - 1) * S2(S, r - 1, n - s + 1, k);
        rep.record(BigInt(n + r) * value == rhs,
                   [&] { return show("id3", S, r, n, k, BigInt(n + r) * value, rhs); });
      }
      {  // {n+1 k} = {n k-1}_{r+1} + r sum_s C(n,s-2) {n-s+2 k}_{r-1}
        BigInt rhs = S2(S, r + 1, n, k - 1);
        if (r >= 1)
          for (long s : selems)
            if (s - 2 <= n && s >= 2)
              rhs += BigInt(r) * binomial(n, s - 2) * S2(S, r - 1, n - s + 2, k);
        rep.record(c.stirling2(n + 1, k) == rhs,
                   [&] { return show("teo8a", S, r, n, k, c.stirling2(n + 1, k), rhs); });
      }
      if (S.contains(1)) {  // singleton-removal recurrence
        const IndexSet s1 = S.remove(1);
        BigInt rhs = 0;
        for (long i = 0; i <= r; ++i)
          for (long j = 0; j <= k; ++j)
            rhs += binomial(r, i) * binomial(n, j) * S2(s1, r - i, n - j, k - j);
        rep.record(value == rhs, [&] { return show("teo9a", S, r, n, k, value, rhs); });
      }
      for (long u : selems) {  // block-removal recurrence, u in S, u <= n
        if (u > n || u < 1) continue;
        const IndexSet su = S.remove(u);
        BigInt rhs = 0;
        for (long i = 0; i <= r; ++i) {
          for (long j = 0; j <= k; ++j) {
            const long rest = n - (u - 1) * i - u * j;
            if (rest < 0) continue;
            const Rational denom =
                rational_pow(Rational(factorial(static_cast<unsigned long>(u - 1))), i) *
                rational_pow(Rational(factorial(static_cast<unsigned long>(u))), j) *
                Rational(factorial(static_cast<unsigned long>(j))) *
                Rational(factorial(static_cast<unsigned long>(rest)));
            // the multinomial weight is an integer; to_integer() enforces it
            const BigInt weight =
                (Rational(factorial(static_cast<unsigned long>(n))) / denom).to_integer();
            rhs += binomial(r, i) * weight * S2(su, r - i, rest, k - j);
          }
        }
        rep.record(value == rhs, [&] {
          return show(("teo9aa(u=" + std::to_string(u) + ")").c_str(), S, r, n, k, value, rhs);
        });
      }
      for (long l = 0; l <= r; ++l) {  // reduction formula, both forms
        BigInt rhs1 = 0, rhs2 = 0;
        for (long j = 0; j <= n; ++j) {
          const BigInt common = binomial(n, j) * S2(S, r - l, j, k);
          rhs1 += common * comp[l][n - j];
          rhs2 += common * cc.get(S, l).stirling2(n - j, 0);
        }
        rep.record(value == rhs1, [&] {
          return show(("reduction-1(l=" + std::to_string(l) + ")").c_str(), S, r, n, k, value,
                      rhs1);
        });
        rep.record(value == rhs2, [&] {
          return show(("reduction-2(l=" + std::to_string(l) + ")").c_str(), S, r, n, k, value,
                      rhs2);
        });
      }
    }

    {  // {n 0} via the branch proposition
      const BigInt direct = c.stirling2(n, 0);
      const BigInt via = c.stirling2_k0(n);
      rep.record(direct == via, [&] { return show("k0-proposition", S, r, n, -1, via, direct); });
    }

    {  // Bell recurrences
      BigInt rhs = 0;
      for (long s : selems)
        if (s - 1 <= n) rhs += binomial(n, s - 1) * c.bell(n - s + 1);
      rep.record(cc.get(S, r + 1).bell(n) == rhs,
                 [&] { return show("bell-up", S, r, n, -1, cc.get(S, r + 1).bell(n), rhs); });

      BigInt rhs2 = 0;
      for (long s : selems)
        if (s <= n) rhs2 += BigInt(s) * binomial(n, s) * c.bell(n - s);
      if (r >= 1)
        for (long s : selems)
          if (s - 1 <= n)
            rhs2 += BigInt(r) * BigInt(s) * binomial(n, s - 1) * cc.get(S, r - 1).bell(n - s + 1);
      rep.record(BigInt(n + r) * c.bell(n) == rhs2,
                 [&] { return show("bell-weighted", S, r, n, -1, BigInt(n + r) * c.bell(n), rhs2); });

      BigInt rhs3 = cc.get(S, r + 1).bell(n);
      if (r >= 1)
        for (long s : selems)
          if (s - 2 <= n && s >= 2)
            rhs3 += BigInt(r) * binomial(n, s - 2) * cc.get(S, r - 1).bell(n - s + 2);
      rep.record(c.bell(n + 1) == rhs3,
                 [&] { return show("bell-shift", S, r, n, -1, c.bell(n + 1), rhs3); });
    }
  }
  return rep;
}

VerifyReport verify_recurrences_first(const IndexSet& S, long r, long n_max, std::size_t order) {
  if (order < static_cast<std::size_t>(n_max) + 1)
    throw std::invalid_argument("verify_recurrences_first: order must exceed n_max");
  VerifyReport rep;
  ContextCache cc(order);
  const SRContext& c = cc.get(S, r);
  const auto selems = S.elements_up_to(n_max + 2);

  auto S1 = [&](const IndexSet& set, long rr, long n, long k) -> BigInt {
    return cc.get(set, rr).stirling1(n, k);
  };

  for (long n = 0; n <= n_max; ++n) {
    for (long k = 0; k <= n; ++k) {
      const BigInt value = c.stirling1(n, k);

      {  // k [n k] = sum_s (s-1)! C(n,s) [n-s k-1]
        BigInt rhs = 0;
        for (long s : selems)
          if (s <= n)
            rhs += factorial(static_cast<unsigned long>(s - 1)) * binomial(n, s) *
                   c.stirling1(n - s, k - 1);
        rep.record(BigInt(k) * value == rhs,
                   [&] { return show("id1s1", S, r, n, k, BigInt(k) * value, rhs); });
      }
      if (r >= 1) {  // r [n k] = sum_s r (s-1)! C(n,s-1) [n-s+1 k]_{r-1}
        BigInt rhs = 0;
        for (long s : selems)
          if (s - 1 <= n)
            rhs += BigInt(r) * factorial(static_cast<unsigned long>(s - 1)) *
                   binomial(n, s - 1) * S1(S, r - 1, n - s + 1, k);
        rep.record(BigInt(r) * value == rhs,
                   [&] { return show("id2s1", S, r, n, k, BigInt(r) * value, rhs); });
      }
      {  // (n+r) [n k] = sum_s s! C(n,s) [n-s k-1] + r sum_s s! C(n,s-1) [n-s+1 k]_{r-1}
        BigInt rhs = 0;
        for (long s : selems)
          if (s <= n)
            rhs += factorial(static_cast<unsigned long>(s)) * binomial(n, s) *
                   c.stirling1(n - s, k - 1);
        if (r >= 1)
          for (long s : selems)
            if (s - 1 <= n)
              rhs += BigInt(r) * factorial(static_cast<unsigned long>(s)) * binomial(n, s - 1) *
                     S1(S, r - 1, n - s + 1, k);
        rep.record(BigInt(n + r) * value == rhs,
                   [&] { return show("id3s1", S, r, n, k, BigInt(n + r) * value, rhs); });
      }
      {  // [n+1 k] = [n k-1]_{r+1} + r sum_s (s-1)! C(n,s-2) [n-s+2 k]_{r-1}
        BigInt rhs = S1(S, r + 1, n, k - 1);
        if (r >= 1)
          for (long s : selems)
            if (s - 2 <= n && s >= 2)
              rhs += BigInt(r) * factorial(static_cast<unsigned long>(s - 1)) *
                     binomial(n, s - 2) * S1(S, r - 1, n - s + 2, k);
        rep.record(c.stirling1(n + 1, k) == rhs,
                   [&] { return show("teo8b", S, r, n, k, c.stirling1(n + 1, k), rhs); });
      }
      if (S.contains(1)) {
        const IndexSet s1 = S.remove(1);
        BigInt rhs = 0;
        for (long i = 0; i <= r; ++i)
          for (long j = 0; j <= k; ++j)
            rhs += binomial(r, i) * binomial(n, j) * S1(s1, r - i, n - j, k - j);
        rep.record(value == rhs, [&] { return show("teo9b", S, r, n, k, value, rhs); });
      }
      for (long u : selems) {  // cycle-removal recurrence
        if (u > n || u < 1) continue;
        const IndexSet su = S.remove(u);
        BigInt rhs = 0;
        for (long i = 0; i <= r; ++i) {
          for (long j = 0; j <= k; ++j) {
            const long rest = n - (u - 1) * i - u * j;
            if (rest < 0) continue;
            const Rational denom = rational_pow(Rational(u), j) *
                                   Rational(factorial(static_cast<unsigned long>(j))) *
                                   Rational(factorial(static_cast<unsigned long>(rest)));
            const BigInt weight =
                (Rational(factorial(static_cast<unsigned long>(n))) / denom).to_integer();
            rhs += binomial(r, i) * weight * S1(su, r - i, rest, k - j);
          }
        }
        rep.record(value == rhs, [&] {
          return show(("u-rec(u=" + std::to_string(u) + ")").c_str(), S, r, n, k, value, rhs);
        });
      }
    }
  }
  return rep;
}

VerifyReport verify_oracle_second(const IndexSet& S, long r, long n_max,
                                  EnumerationGuards guards) {
  VerifyReport rep;
  const SRContext ctx(S, r, static_cast<std::size_t>(std::max<long>(n_max, 1)), guards);
  for (long n = 0; n <= n_max; ++n) {
    if (n + r > guards.partitions) break;
    const auto counts = oracle_partition_counts(ctx, n);
    for (long k = 0; k <= n; ++k)
      rep.record(ctx.stirling2(n, k) == counts[k],
                 [&] { return show("oracle2", S, r, n, k, ctx.stirling2(n, k), counts[k]); });
  }
  return rep;
}

VerifyReport verify_oracle_first(const IndexSet& S, long r, long n_max, EnumerationGuards guards) {
  VerifyReport rep;
  const SRContext ctx(S, r, static_cast<std::size_t>(std::max<long>(n_max, 1)), guards);
  for (long n = 0; n <= n_max; ++n) {
    if (n + r > guards.permutations) break;
    const auto counts = oracle_permutation_counts(ctx, n);
    for (long k = 0; k <= n; ++k)
      rep.record(ctx.stirling1(n, k) == counts[k],
                 [&] { return show("oracle1", S, r, n, k, ctx.stirling1(n, k), counts[k]); });
  }
  return rep;
}

VerifyReport verify_orthogonality(const SRContext& ctx, std::size_t size) {
  VerifyReport rep;
  const TriMatrix I = TriMatrix::identity(size);
  for (const bool second : {true, false}) {
    const TriMatrix m =
        second ? matrix_second_kind(ctx, size) : matrix_first_kind(ctx, size);
    const TriMatrix inv = m.inverse();
    rep.record(m * inv == I, [&] {
      return std::string(second ? "second" : "first") + "-kind M * M^-1 != I for S=" +
             ctx.set().to_string() + " r=" + std::to_string(ctx.special_count());
    });
    rep.record(inv * m == I, [&] {
      return std::string(second ? "second" : "first") + "-kind M^-1 * M != I for S=" +
             ctx.set().to_string() + " r=" + std::to_string(ctx.special_count());
    });
    // inverse relation on pseudo-random integer vectors
    std::mt19937 rng(12345);
    std::uniform_int_distribution<long> dist(-9, 9);
    for (int trial = 0; trial < 4; ++trial) {
      std::vector<Rational> g(size);
      for (auto& v : g) v = Rational(dist(rng));
      const auto back = inv.apply(m.apply(g));
      rep.record(back == g, [&] {
        return std::string("inverse relation fails for S=") + ctx.set().to_string();
      });
    }
  }
  return rep;
}

VerifyReport verify_mobius(const IndexSet& S, long r, long n, StirlingKind kind,
                           const PairEnumerationOptions& opts) {
  VerifyReport rep;
  const SRContext ctx(S, r, static_cast<std::size_t>(std::max<long>(n, 1)));
  const TriMatrix m = kind == StirlingKind::second
                          ? matrix_second_kind(ctx, static_cast<std::size_t>(n) + 1)
                          : matrix_first_kind(ctx, static_cast<std::size_t>(n) + 1);
  const TriMatrix inv = m.inverse();
  std::vector<BigInt> sums(n + 1, BigInt(0));
  if (kind == StirlingKind::second) {
    const auto pp = PartitionPairPoset::build(S, r, n, opts);
    const auto mu = pp.poset.mobius_from_bottom();
    for (std::size_t i = 0; i < pp.poset.size(); ++i)
      sums[pp.poset.part_count(i)] += mu[i];
  } else {
    const auto pp = PermutationPairPoset::build(S, r, n, opts);
    const auto mu = pp.poset.mobius_from_bottom();
    for (std::size_t i = 0; i < pp.poset.size(); ++i)
      sums[pp.poset.part_count(i)] += mu[i];
  }
  for (long k = 0; k <= n; ++k) {
    const BigInt expected = inv.at(static_cast<std::size_t>(n), static_cast<std::size_t>(k))
                                .to_integer();
    rep.record(sums[k] == expected,
               [&] { return show("mobius-column", S, r, n, k, sums[k], expected); });
  }
  return rep;
}

VerifyReport verify_orientation_formula(long n1, long n2, long r, const IndexSet& S) {
  VerifyReport rep;
  const SRContext c1(S, r, static_cast<std::size_t>(std::max({n1, n2, 1L})));
  BigInt formula = 0;
  for (long k = 0; k <= std::min(n1, n2); ++k) {
    const BigInt f = factorial(static_cast<unsigned long>(k + r));
    formula += f * f * c1.stirling2(n1, k) * c1.stirling2(n2, k);
  }
  const BigInt brute = count_constrained_orientations(static_cast<int>(n1), static_cast<int>(n2),
                                                      static_cast<int>(r), S);
  rep.record(brute == formula, [&] {
    std::ostringstream os;
    os << "orientation formula fails at n1=" << n1 << " n2=" << n2 << " r=" << r
       << " S=" << S.to_string() << ": brute " << brute.get_str() << " != formula "
       << formula.get_str();
    return os.str();
  });
  return rep;
}

VerifyReport verify_poly_egf(const IndexSet& S, long r, long mu, long n_max) {
  VerifyReport rep;
  const SRContext ctx(S, r, static_cast<std::size_t>(std::max<long>(n_max, 1)));
  const EgfSeries pb = poly_bernoulli_egf(ctx, mu);
  const EgfSeries pc1 = poly_cauchy_first_egf(ctx, mu);
  const EgfSeries pc2 = poly_cauchy_second_egf(ctx, mu);
  auto mismatch = [&](const char* what, long n, const Rational& sum, const Rational& egf) {
    std::ostringstream os;
    os << what << " EGF disagrees with finite sum at S=" << S.to_string() << " r=" << r
       << " mu=" << mu << " n=" << n << ": " << sum.to_string() << " != " << egf.to_string();
    return os.str();
  };
  for (long n = 0; n <= n_max; ++n) {
    const Rational b_sum = poly_bernoulli(ctx, mu, n);
    const Rational b_egf = pb.egf_coefficient(n);
    rep.record(b_sum == b_egf, [&] { return mismatch("poly-Bernoulli", n, b_sum, b_egf); });
    const Rational c1_sum = poly_cauchy_first(ctx, mu, n);
    const Rational c1_egf = pc1.egf_coefficient(n);
    rep.record(c1_sum == c1_egf, [&] { return mismatch("poly-Cauchy-1", n, c1_sum, c1_egf); });
    const Rational c2_sum = poly_cauchy_second(ctx, mu, n);
    const Rational c2_egf = pc2.egf_coefficient(n);
    rep.record(c2_sum == c2_egf, [&] { return mismatch("poly-Cauchy-2", n, c2_sum, c2_egf); });
  }
  return rep;
}

}  // namespace srcomb
