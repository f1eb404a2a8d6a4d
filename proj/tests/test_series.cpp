#include "srcomb/series.hpp"

#include <doctest.h>

#include "support/oracles.hpp"

using namespace srcomb;
using srcomb::testing::SeriesGen;

namespace {

EgfSeries exp_x(std::size_t order) {
  return EgfSeries::generate(order, [](std::size_t n) { return inverse_factorial(n); });
}

EgfSeries exp_minus_one(std::size_t order) {
  return EgfSeries::generate(order,
                             [](std::size_t n) { return n == 0 ? Rational(0) : inverse_factorial(n); });
}

EgfSeries sinh_x(std::size_t order) {
  return EgfSeries::generate(
      order, [](std::size_t n) { return n % 2 == 1 ? inverse_factorial(n) : Rational(0); });
}

EgfSeries cosh_x(std::size_t order) {
  return EgfSeries::generate(
      order, [](std::size_t n) { return n % 2 == 0 ? inverse_factorial(n) : Rational(0); });
}

EgfSeries log_one_plus_x(std::size_t order) {
  return EgfSeries::generate(order, [](std::size_t n) {
    if (n == 0) return Rational(0);
    return n % 2 == 1 ? Rational(1, static_cast<long>(n)) : Rational(-1, static_cast<long>(n));
  });
}

EgfSeries tanh_x(std::size_t order) { return sinh_x(order) / cosh_x(order); }

}  // namespace

TEST_CASE("addition") {
  const std::size_t N = 8;
  CHECK(EgfSeries::zero(N) + EgfSeries::zero(N) == EgfSeries::zero(N));
  const EgfSeries x = EgfSeries::identity(N);
  CHECK(x + x == x.scalar_mul(2));

  // E_{1} + E_{2} = E_{1,2}: taylor (0, 1, 1/2, 0, ...)
  const EgfSeries e1 = EgfSeries::generate(N, [](std::size_t n) {
    return n == 1 ? Rational(1) : Rational(0);
  });
  const EgfSeries e2 = EgfSeries::generate(N, [](std::size_t n) {
    return n == 2 ? Rational(1, 2) : Rational(0);
  });
  const EgfSeries sum = e1 + e2;
  CHECK(sum.taylor(0) == Rational(0));
  CHECK(sum.taylor(1) == Rational(1));
  CHECK(sum.taylor(2) == Rational(1, 2));
  for (std::size_t n = 3; n <= N; ++n) CHECK(sum.taylor(n) == Rational(0));

  CHECK_THROWS_AS(EgfSeries::zero(4) + EgfSeries::zero(5), std::invalid_argument);
}

TEST_CASE("multiplication") {
  const std::size_t N = 10;
  const EgfSeries e = exp_x(N);
  const EgfSeries s = sinh_x(N);
  CHECK(EgfSeries::one(N) * s == s);

  // e^x * e^x has taylor 2^n / n!
  const EgfSeries sq = e * e;
  for (std::size_t n = 0; n <= N; ++n)
    CHECK(sq.taylor(n) == Rational(rational_pow(Rational(2), static_cast<long>(n))) *
                              inverse_factorial(n));

  // sinh * cosh: EGF coefficients 0,1,0,4,0,16,... (a_{2k+1} = 4^k)
  const EgfSeries sc = s * cosh_x(N);
  CHECK(sc.egf_coefficient(1) == Rational(1));
  CHECK(sc.egf_coefficient(2) == Rational(0));
  CHECK(sc.egf_coefficient(3) == Rational(4));
  CHECK(sc.egf_coefficient(5) == Rational(16));
  CHECK(sc.egf_coefficient(7) == Rational(64));

  CHECK_THROWS_AS(EgfSeries::one(4) * EgfSeries::one(5), std::invalid_argument);
}

TEST_CASE("powers") {
  const std::size_t N = 8;
  const EgfSeries c = cosh_x(N);
  CHECK(c.pow(0) == EgfSeries::one(N));
  CHECK(c.pow(1) == c);
  // cosh^2: EGF coefficients 1,0,2,0,8,0,32,... (2^{n-1} at even n)
  const EgfSeries c2 = c.pow(2);
  CHECK(c2.egf_coefficient(0) == Rational(1));
  CHECK(c2.egf_coefficient(2) == Rational(2));
  CHECK(c2.egf_coefficient(4) == Rational(8));
  CHECK(c2.egf_coefficient(6) == Rational(32));
  CHECK(c2.egf_coefficient(8) == Rational(128));
  CHECK(c2.egf_coefficient(5) == Rational(0));
}

TEST_CASE("composition") {
  const std::size_t N = 10;
  const EgfSeries g = SeriesGen(7).series(N);
  CHECK(g.compose(EgfSeries::identity(N)) == g);

  // exp(ln(1+x)) = 1 + x
  const EgfSeries composed = exp_x(N).compose(log_one_plus_x(N));
  CHECK(composed.taylor(0) == Rational(1));
  CHECK(composed.taylor(1) == Rational(1));
  for (std::size_t n = 2; n <= N; ++n) CHECK(composed.taylor(n) == Rational(0));

  CHECK_THROWS_AS(exp_x(N).compose(EgfSeries::one(N)), std::invalid_argument);
}

TEST_CASE("reversion") {
  const std::size_t N = 9;
  const EgfSeries x = EgfSeries::identity(N);
  CHECK(x.reversion() == x);

  // arcsinh: x - x^3/6 + 3 x^5 / 40 - ...
  const EgfSeries asinh = sinh_x(N).reversion();
  CHECK(asinh.taylor(1) == Rational(1));
  CHECK(asinh.taylor(3) == Rational(-1, 6));
  CHECK(asinh.taylor(5) == Rational(3, 40));

  // arctanh: x + x^3/3 + x^5/5 + ...
  const EgfSeries atanh = tanh_x(N).reversion();
  CHECK(atanh.taylor(1) == Rational(1));
  CHECK(atanh.taylor(3) == Rational(1, 3));
  CHECK(atanh.taylor(5) == Rational(1, 5));
  CHECK(atanh.taylor(2) == Rational(0));

  CHECK(sinh_x(N).compose(asinh) == x);
  CHECK(asinh.compose(sinh_x(N)) == x);

  CHECK_THROWS_AS(EgfSeries::one(N).reversion(), std::invalid_argument);
  CHECK_THROWS_AS(EgfSeries::zero(N).reversion(), std::invalid_argument);
}

TEST_CASE("exp and log") {
  const std::size_t N = 8;
  CHECK(EgfSeries::zero(N).exp() == EgfSeries::one(N));

  // exp(e^x - 1): Bell numbers 1, 1, 2, 5, 15, 52
  const EgfSeries bell = exp_minus_one(N).exp();
  const long expected[] = {1, 1, 2, 5, 15, 52};
  for (std::size_t n = 0; n < 6; ++n)
    CHECK(bell.egf_coefficient(n) == Rational(expected[n]));

  CHECK(exp_x(N).log() == EgfSeries::identity(N).truncated(N));  // log(e^x) = x

  CHECK_THROWS_AS(EgfSeries::one(N).exp(), std::invalid_argument);
  CHECK_THROWS_AS(EgfSeries::zero(N).log(), std::invalid_argument);
}

TEST_CASE("derivative and coefficient access") {
  const std::size_t N = 8;
  const EgfSeries e = exp_x(N);
  CHECK(e.derivative() == exp_x(N - 1));
  CHECK(e.egf_coefficient(5) == Rational(1));
  CHECK(e.taylor(5) == inverse_factorial(5));
  CHECK_THROWS_AS(e.taylor(N + 1), std::invalid_argument);

  const EgfSeries t = EgfSeries::from_taylor({Rational(1), Rational(2), Rational(3)});
  CHECK(t.order() == 2);
  CHECK(t.egf_coefficient(2) == Rational(6));
}

TEST_CASE("reciprocal and division") {
  const std::size_t N = 8;
  // 1 / (1 - x) = sum x^n
  const EgfSeries one_minus_x = EgfSeries::generate(N, [](std::size_t n) {
    if (n == 0) return Rational(1);
    return n == 1 ? Rational(-1) : Rational(0);
  });
  const EgfSeries geo = one_minus_x.reciprocal();
  for (std::size_t n = 0; n <= N; ++n) CHECK(geo.taylor(n) == Rational(1));
  CHECK(one_minus_x * geo == EgfSeries::one(N));
  CHECK_THROWS_AS(EgfSeries::zero(N).reciprocal(), std::invalid_argument);
}

TEST_CASE("truncate, extend, sign alternation") {
  const EgfSeries e = exp_x(8);
  const EgfSeries t = e.truncated(4);
  CHECK(t.order() == 4);
  CHECK(t.taylor(4) == inverse_factorial(4));
  CHECK_THROWS_AS(e.truncated(9), std::invalid_argument);
  CHECK(t.extended(6).taylor(5) == Rational(0));
  CHECK_THROWS_AS(t.extended(2), std::invalid_argument);

  // exp(-x) via sign alternation
  const EgfSeries em = e.alternate_signs();
  CHECK(em.taylor(1) == Rational(-1));
  CHECK(em * e == EgfSeries::one(8));
}

TEST_CASE("ring axioms on random series") {
  SeriesGen gen(101);
  const std::size_t N = 8;
  for (int trial = 0; trial < 40; ++trial) {
    const EgfSeries a = gen.series(N), b = gen.series(N), c = gen.series(N);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("composition associativity and inverse properties on random series") {
  SeriesGen gen(202);
  const std::size_t N = 8;
  for (int trial = 0; trial < 25; ++trial) {
    const EgfSeries a = gen.series(N);
    const EgfSeries b = gen.series_zero_constant_unit(N);
    const EgfSeries c = gen.series_zero_constant_unit(N);
    CHECK(a.compose(b).compose(c) == a.compose(b.compose(c)));

    const EgfSeries f = gen.series_zero_constant_unit(N);
    const EgfSeries finv = f.reversion();
    CHECK(f.compose(finv) == EgfSeries::identity(N));
    CHECK(finv.compose(f) == EgfSeries::identity(N));

    // exp(log(s)) = s for s with t0 = 1
    auto coeffs = gen.series(N).taylor_coefficients();
    coeffs[0] = Rational(1);
    const EgfSeries s = EgfSeries::from_taylor(std::move(coeffs));
    CHECK(s.log().exp() == s);

    const EgfSeries z = gen.series_zero_constant_unit(N);
    CHECK(z.exp().log() == z);
  }
}

TEST_CASE("integrality of counting series") {
  // n-th EGF coefficient of exp(e^x - 1) is a positive integer (Bell)
  const EgfSeries bell = exp_minus_one(16).exp();
  for (std::size_t n = 0; n <= 16; ++n) {
    const Rational a = bell.egf_coefficient(n);
    CHECK(a.is_integer());
    CHECK(a > Rational(0));
  }
}
