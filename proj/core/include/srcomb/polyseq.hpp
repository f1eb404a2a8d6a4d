#pragma once

#include "srcomb/series.hpp"
#include "srcomb/stirling.hpp"

namespace srcomb {

/// Li_mu(t) = sum_{n>=1} t^n / n^mu as a truncated formal series; mu may be
/// any integer (negative mu gives integer numerators n^(-mu)).
EgfSeries polylog(long mu, std::size_t order);
/// Lif_mu(t) = sum_{n>=0} t^n / (n! (n+1)^mu)
EgfSeries polylog_factorial(long mu, std::size_t order);
/// Li_mu(t) / t = sum_{n>=0} t^n / (n+1)^mu; used to divide out the zero
/// constant term of the inner series exactly.
EgfSeries polylog_over_t(long mu, std::size_t order);

/// sum_k stirling2(n,k) (-1)^(n-k) k! / (k+1)^mu, exact.
Rational poly_bernoulli(const SRContext& ctx, long mu, long n);
/// EGF (E_{S-1}(-t))^r Li_mu(-E_S(-t)) / (-E_S(-t)); coefficient n equals
/// poly_bernoulli(ctx, mu, n) for every n up to the context order.
EgfSeries poly_bernoulli_egf(const SRContext& ctx, long mu);

/// sum_k stirling1(n,k) (-1)^(n-k) / (k+1)^mu
Rational poly_cauchy_first(const SRContext& ctx, long mu, long n);
/// sum_k stirling1(n,k) (-1)^n / (k+1)^mu
Rational poly_cauchy_second(const SRContext& ctx, long mu, long n);
/// EGF (sum_{s in S} (-t)^(s-1))^r Lif_mu(F_S(t))
EgfSeries poly_cauchy_first_egf(const SRContext& ctx, long mu);
/// EGF (sum_{s in S} (-t)^(s-1))^r Lif_mu(-F_S(t))
EgfSeries poly_cauchy_second_egf(const SRContext& ctx, long mu);

}  // namespace srcomb
