#include "srcomb/riordan.hpp"

#include <doctest.h>

#include "srcomb/verify.hpp"
#include "support/oracles.hpp"
#include "support/paper_fixtures.hpp"

using namespace srcomb;
using srcomb::testing::SeriesGen;

namespace {

void check_matrix(const TriMatrix& m, const testing::Rows& want) {
  REQUIRE(m.size() == want.size());
  for (std::size_t n = 0; n < want.size(); ++n)
    for (std::size_t k = 0; k <= n; ++k)
      CHECK(m.at(n, k) == Rational(want[n][k]));
}

EgfSeries exp_x(std::size_t order) {
  return EgfSeries::generate(order, [](std::size_t n) { return inverse_factorial(n); });
}

RiordanPair inverse_pair(const RiordanPair& p) {
  const EgfSeries fbar = p.f.reversion();
  return RiordanPair(p.g.compose(fbar).reciprocal(), fbar);
}

}  // namespace

TEST_CASE("classical Riordan arrays") {
  const std::size_t N = 10;
  const TriMatrix pascal = build_riordan(RiordanPair(exp_x(N), EgfSeries::identity(N)), 8);
  for (std::size_t n = 0; n < 8; ++n)
    for (std::size_t k = 0; k <= n; ++k)
      CHECK(pascal.at(n, k) == Rational(binomial(n, k)));

  const EgfSeries em1 = IndexSet::all().block_egf(N);
  const TriMatrix s2 = build_riordan(RiordanPair(EgfSeries::one(N), em1), 7);
  CHECK(s2.at(4, 2) == Rational(7));
  CHECK(s2.at(5, 3) == Rational(25));
  CHECK(s2.at(6, 1) == Rational(1));

  const TriMatrix s1 =
      build_riordan(RiordanPair(EgfSeries::one(N), IndexSet::all().cycle_gf(N)), 7);
  CHECK(s1.at(4, 2) == Rational(11));
  CHECK(s1.at(5, 1) == Rational(24));
}

TEST_CASE("the worked 9x9 matrices") {
  const SRContext e138(IndexSet::explicit_set({1, 3, 8}), 2, 9);
  check_matrix(matrix_second_kind(e138, 9), testing::kMatrixM138r2);
  check_matrix(matrix_second_kind(e138, 9).inverse(), testing::kMatrixT138r2);

  const SRContext odd2(IndexSet::odd(), 2, 9);
  const TriMatrix m_odd = matrix_second_kind(odd2, 9);
  check_matrix(m_odd, testing::kMatrixMOddR2);
  check_matrix(m_odd.inverse(), testing::kMatrixTOddR2);

  const SRContext odd1(IndexSet::odd(), 1, 9);
  const TriMatrix u = matrix_first_kind(odd1, 9).inverse();
  check_matrix(u, testing::kMatrixUOddR1);

  // build from the defining pair gives the same matrix
  check_matrix(build_riordan(riordan_pair_second_kind(odd2), 9), testing::kMatrixMOddR2);

  // the subdiagonal carries 7, 16, 30, 50, 77, 112 in both examples
  for (std::size_t i = 0; i < testing::kA005581.size(); ++i) {
    CHECK(m_odd.at(i + 3, i + 1) == Rational(testing::kA005581[i]));
    CHECK(matrix_second_kind(e138, 9).at(i + 3, i + 1) == Rational(testing::kA005581[i]));
  }
}

TEST_CASE("tangent and cyclically-alternating columns of U") {
  const SRContext odd1(IndexSet::odd(), 1, 9);
  const TriMatrix u = matrix_first_kind(odd1, 9).inverse();
  for (std::size_t i = 0; i < testing::kTangent.size(); ++i) {
    const Rational v = u.at(2 * i + 2, 0);
    CHECK((v < Rational(0) ? -v : v) == Rational(testing::kTangent[i]));
  }
  for (std::size_t i = 0; i < testing::kCyclicAlternating.size(); ++i) {
    const Rational v = u.at(2 * i + 3, 1);
    CHECK((v < Rational(0) ? -v : v) == Rational(testing::kCyclicAlternating[i]));
  }
}

TEST_CASE("first-kind pair for the odd set") {
  // L_{odd,1} = <1/(1-x^2), arctanh>, U_{odd,1} = <cosh^-2, tanh>
  const std::size_t N = 10;
  const SRContext odd1(IndexSet::odd(), 1, N);
  const EgfSeries one_minus_x2 = EgfSeries::generate(N, [](std::size_t n) {
    if (n == 0) return Rational(1);
    return n == 2 ? Rational(-1) : Rational(0);
  });
  const EgfSeries atanh = IndexSet::odd().cycle_gf(N);  // sum x^s/s over odd s
  const TriMatrix l = build_riordan(RiordanPair(one_minus_x2.reciprocal(), atanh), 9);
  CHECK(l == matrix_first_kind(odd1, 9));

  const EgfSeries sinh = IndexSet::odd().block_egf(N);
  const EgfSeries cosh = IndexSet::odd().component_egf(N);
  const TriMatrix u =
      build_riordan(RiordanPair((cosh * cosh).reciprocal(), sinh / cosh), 9);
  check_matrix(u, testing::kMatrixUOddR1);
}

TEST_CASE("inversion by series reversion agrees with forward substitution") {
  const SRContext odd2(IndexSet::odd(), 2, 12);
  const RiordanPair p = riordan_pair_second_kind(odd2);
  CHECK(build_riordan(inverse_pair(p), 9) == matrix_second_kind(odd2, 9).inverse());

  // and (1 + x^2)^{-r/2} is the closed form of the inverse g for even r
  const EgfSeries one_plus_x2 = EgfSeries::generate(12, [](std::size_t n) {
    if (n == 0) return Rational(1);
    return n == 2 ? Rational(1) : Rational(0);
  });
  const RiordanPair inv = inverse_pair(p);
  CHECK(inv.g == one_plus_x2.reciprocal());
  const SRContext odd4(IndexSet::odd(), 4, 12);
  CHECK(inverse_pair(riordan_pair_second_kind(odd4)).g ==
        (one_plus_x2 * one_plus_x2).reciprocal());
  // first kind: U_{odd,r} = <cosh^{-2r}, tanh>
  const SRContext odd2_first(IndexSet::odd(), 2, 12);
  const EgfSeries cosh = IndexSet::odd().component_egf(12);
  CHECK(inverse_pair(riordan_pair_first_kind(odd2_first)).g ==
        (cosh * cosh * cosh * cosh).reciprocal());

  SeriesGen gen(5);
  for (int trial = 0; trial < 10; ++trial) {
    const RiordanPair q(gen.series_unit_constant(10), gen.series_zero_constant_unit(10));
    CHECK(build_riordan(inverse_pair(q), 8) == build_riordan(q, 8).inverse());
  }
}

TEST_CASE("matrix product and the group law") {
  const std::size_t N = 10;
  SeriesGen gen(11);
  const TriMatrix I = TriMatrix::identity(8);
  for (int trial = 0; trial < 12; ++trial) {
    const RiordanPair p(gen.series_unit_constant(N), gen.series_zero_constant_unit(N));
    const RiordanPair q(gen.series_unit_constant(N), gen.series_zero_constant_unit(N));
    const TriMatrix mp = build_riordan(p, 8);
    CHECK(mp * I == mp);
    CHECK(mp * build_riordan(q, 8) == build_riordan(p.product(q), 8));
  }
  CHECK_THROWS_AS(TriMatrix::identity(4) * TriMatrix::identity(5), std::invalid_argument);
}

TEST_CASE("fundamental theorem: matrix action is composition") {
  const std::size_t N = 10;
  SeriesGen gen(21);
  for (int trial = 0; trial < 10; ++trial) {
    const RiordanPair p(gen.series_unit_constant(N), gen.series_zero_constant_unit(N));
    const EgfSeries h = gen.series(N);
    const TriMatrix m = build_riordan(p, N + 1);
    std::vector<Rational> column(N + 1);
    for (std::size_t n = 0; n <= N; ++n) column[n] = h.egf_coefficient(n);
    const auto image = m.apply(column);
    const EgfSeries expected = p.g * h.compose(p.f);
    for (std::size_t n = 0; n <= N; ++n) CHECK(image[n] == expected.egf_coefficient(n));
  }
}

TEST_CASE("orthogonality and row sums") {
  for (const char* text : {"all", "odd", "{1,2}", "{1,3,8}", "1..3", "mod 3"}) {
    const SRContext c(IndexSet::parse(text), 2, 10);
    REQUIRE(is_riordan(c));
    const TriMatrix m = matrix_second_kind(c, 10);
    const TriMatrix t = m.inverse();
    CHECK(m * t == TriMatrix::identity(10));
    CHECK(t * m == TriMatrix::identity(10));
    for (std::size_t n = 0; n < 10; ++n) {
      Rational row(0);
      for (std::size_t k = 0; k <= n; ++k) row += m.at(n, k);
      CHECK(row == Rational(c.bell(static_cast<long>(n))));
    }
  }
}

TEST_CASE("orthogonality reports for both kinds") {
  for (const char* text : {"all", "odd", "{1,2}", "{1,3,8}", "1..3", "mod 3"}) {
    for (long r = 0; r <= 3; ++r) {
      const SRContext c(IndexSet::parse(text), r, 10);
      const auto rep = verify_orthogonality(c, 10);
      CHECK_MESSAGE(rep.ok, rep.first_failure);
    }
  }
}

TEST_CASE("matrices exist but do not invert when 1 is not in S") {
  const SRContext even2(IndexSet::even(), 2, 6);
  CHECK_FALSE(is_riordan(even2));
  const TriMatrix m = matrix_second_kind(even2, 6);
  CHECK(m.at(2, 1) == Rational(even2.stirling2(2, 1)));
  CHECK_THROWS_WITH_AS(m.inverse(), doctest::Contains("row 0"), std::invalid_argument);
  CHECK_THROWS_AS(riordan_pair_second_kind(even2), std::invalid_argument);

  const SRContext even0(IndexSet::even(), 0, 6);
  CHECK_THROWS_WITH_AS(matrix_second_kind(even0, 6).inverse(), doctest::Contains("row 1"),
                       std::invalid_argument);
}

TEST_CASE("determinant-path polynomials equal the sum path") {
  for (const char* text : {"all", "odd", "{1,2}", "{1,3,8}", "1..3", "mod 3"}) {
    for (long r = 0; r <= 2; ++r) {
      const SRContext c(IndexSet::parse(text), r, 8);
      for (long n = 0; n <= 8; ++n) {
        CHECK(bell_polynomial_determinant(c, n) == c.bell_polynomial(n));
        CHECK(factorial_polynomial_determinant(c, n) == c.factorial_polynomial(n));
      }
    }
  }
  const SRContext even0(IndexSet::even(), 0, 4);
  CHECK_THROWS_AS(bell_polynomial_determinant(even0, 3), std::invalid_argument);
}

TEST_CASE("dense symbolic determinant is a second witness") {
  // (-1)^n det of the bordered inverse-entry matrix equals the Bell
  // polynomial (and the factorial analogue), per the worked 7x7 display.
  for (const char* text : {"{1,3,8}", "all", "odd"}) {
    const SRContext c(IndexSet::parse(text), text[0] == '{' ? 2 : 1, 8);
    for (const bool second : {true, false}) {
      const TriMatrix inv = (second ? matrix_second_kind(c, 7) : matrix_first_kind(c, 7))
                                .inverse();
      for (long n = 0; n <= 6; ++n) {
        std::vector<std::vector<IntPolynomial>> dm(n + 1,
                                                   std::vector<IntPolynomial>(n + 1));
        for (long col = 0; col <= n; ++col) dm[0][col] = IntPolynomial::monomial(1, col);
        for (long i = 1; i <= n; ++i)
          for (long col = 0; col <= n; ++col) {
            if (col < i - 1) continue;
            dm[i][col] = col == i - 1
                             ? IntPolynomial({1})
                             : IntPolynomial({inv.at(col, i - 1).to_integer()});
          }
        IntPolynomial det = testing::dense_poly_determinant(dm);
        if (n % 2 == 1) det = -det;
        CHECK(det == (second ? c.bell_polynomial(n) : c.factorial_polynomial(n)));
      }
    }
  }
}

TEST_CASE("JSON round trip") {
  const SRContext c(IndexSet::odd(), 2, 9);
  const TriMatrix m = matrix_second_kind(c, 9);
  CHECK(TriMatrix::from_json(m.to_json()) == m);
  const TriMatrix t = m.inverse();
  CHECK(TriMatrix::from_json(t.to_json()) == t);
  CHECK(m.is_integral());
  m.assert_integral("test");

  // rational entries survive as "p/q"
  TriMatrix q(2);
  q.set(0, 0, Rational(1));
  q.set(1, 0, Rational(-3, 7));
  q.set(1, 1, Rational(2));
  CHECK(TriMatrix::from_json(q.to_json()) == q);
  CHECK_FALSE(q.is_integral());
  CHECK_THROWS_AS(q.assert_integral("test"), std::logic_error);

  CHECK_THROWS_AS(TriMatrix::from_json("{\"size\": 2, \"rows\": [[\"1\"]]}"),
                  std::invalid_argument);
  CHECK_THROWS_AS(m.apply(std::vector<Rational>(3)), std::invalid_argument);
}
