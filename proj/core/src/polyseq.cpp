#include "srcomb/polyseq.hpp"

#include <stdexcept>

namespace srcomb {

namespace {

// n^mu as an exact rational for integer mu of either sign.
Rational integer_power(long n, long mu) { return rational_pow(Rational(n), mu); }

}  // namespace

EgfSeries polylog(long mu, std::size_t order) {
  return EgfSeries::generate(order, [mu](std::size_t n) {
    if (n == 0) return Rational(0);
    return Rational(1) / integer_power(static_cast<long>(n), mu);
  });
}

EgfSeries polylog_factorial(long mu, std::size_t order) {
  return EgfSeries::generate(order, [mu](std::size_t n) {
    return inverse_factorial(n) / integer_power(static_cast<long>(n) + 1, mu);
  });
}

EgfSeries polylog_over_t(long mu, std::size_t order) {
  return EgfSeries::generate(order, [mu](std::size_t n) {
    return Rational(1) / integer_power(static_cast<long>(n) + 1, mu);
  });
}

Rational poly_bernoulli(const SRContext& ctx, long mu, long n) {
  Rational total(0);
  for (long k = 0; k <= n; ++k) {
    const Rational sign((n - k) % 2 == 0 ? 1 : -1);
    total += Rational(ctx.stirling2(n, k)) * sign *
             Rational(factorial(static_cast<unsigned long>(k))) / integer_power(k + 1, mu);
  }
  if (mu <= 0 && !total.is_integer())
    throw std::logic_error("poly_bernoulli: non-integer value for mu <= 0: " + total.to_string());
  return total;
}

EgfSeries poly_bernoulli_egf(const SRContext& ctx, long mu) {
  const std::size_t order = ctx.order();
  // E_S(-t) and E_{S-1}(-t) via sign alternation, never by re-deriving the series.
  const EgfSeries block_neg = ctx.set().block_egf(order).alternate_signs();
  const EgfSeries component_neg = ctx.set().component_egf(order).alternate_signs();
  const EgfSeries inner = -block_neg;  // -E_S(-t), zero constant term
  // Li_mu(u)/u composed with u = -E_S(-t)
  const EgfSeries li_part = polylog_over_t(mu, order).compose(inner);
  return component_neg.pow(static_cast<unsigned long>(ctx.special_count())) * li_part;
}

Rational poly_cauchy_first(const SRContext& ctx, long mu, long n) {
  Rational total(0);
  for (long k = 0; k <= n; ++k) {
    const Rational sign((n - k) % 2 == 0 ? 1 : -1);
    total += Rational(ctx.stirling1(n, k)) * sign / integer_power(k + 1, mu);
  }
  return total;
}

Rational poly_cauchy_second(const SRContext& ctx, long mu, long n) {
  Rational total(0);
  for (long k = 0; k <= n; ++k)
    total += Rational(ctx.stirling1(n, k)) / integer_power(k + 1, mu);
  return (n % 2 == 0) ? total : -total;
}

namespace {

EgfSeries poly_cauchy_egf(const SRContext& ctx, long mu, bool second_kind) {
  const std::size_t order = ctx.order();
  // (sum_{s in S} (-t)^(s-1))^r = shifted power sum with alternated signs:
  // the (-t)^(s-1) term has sign (-1)^(s-1) on the x^(s-1) coefficient.
  const EgfSeries front = ctx.set()
                              .shifted_power_sum(order)
                              .alternate_signs()
                              .pow(static_cast<unsigned long>(ctx.special_count()));
  EgfSeries f = ctx.set().alternating_cycle_gf(order);  // F_S(t)
  if (second_kind) f = -f;
  return front * polylog_factorial(mu, order).compose(f);
}

}  // namespace

EgfSeries poly_cauchy_first_egf(const SRContext& ctx, long mu) {
  return poly_cauchy_egf(ctx, mu, false);
}

EgfSeries poly_cauchy_second_egf(const SRContext& ctx, long mu) {
  return poly_cauchy_egf(ctx, mu, true);
}

}  // namespace srcomb
