#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "srcomb/rational.hpp"

namespace srcomb {

/// Truncated formal power series over the rationals, used throughout as an
/// exponential generating function.  A series of order N stores the raw
/// Taylor coefficients t_0..t_N of sum_n t_n x^n; the EGF coefficient
/// a_n = n! * t_n is exposed through egf_coefficient().
///
/// Values are immutable after construction and every operation is a pure
/// function, so series can be shared freely between threads.  Binary
/// operations require equal orders; use truncated()/extended() to convert
/// explicitly.
class EgfSeries {
 public:
  static constexpr std::size_t default_order = 32;

  /// The zero series of the given order.
  explicit EgfSeries(std::size_t order) : taylor_(order + 1) {}

  /// Takes the coefficients t_0..t_N verbatim; order = size - 1.
  static EgfSeries from_taylor(std::vector<Rational> taylor);

  static EgfSeries zero(std::size_t order) { return EgfSeries(order); }
  static EgfSeries one(std::size_t order);
  static EgfSeries identity(std::size_t order);  // the series x
  static EgfSeries constant(const Rational& c, std::size_t order);
  /// t_n = gen(n) for n = 0..order.
  static EgfSeries generate(std::size_t order, const std::function<Rational(std::size_t)>& gen);

  std::size_t order() const { return taylor_.size() - 1; }
  const Rational& taylor(std::size_t n) const;
  /// a_n = n! * t_n
  Rational egf_coefficient(std::size_t n) const;
  const std::vector<Rational>& taylor_coefficients() const { return taylor_; }

  bool is_zero() const;

  EgfSeries truncated(std::size_t new_order) const;
  /// Pads with zero coefficients; only meaningful when the dropped tail is known to be zero.
  EgfSeries extended(std::size_t new_order) const;

  EgfSeries operator-() const;
  friend EgfSeries operator+(const EgfSeries& a, const EgfSeries& b);
  friend EgfSeries operator-(const EgfSeries& a, const EgfSeries& b);
  /// Cauchy product truncated to the common order.
  friend EgfSeries operator*(const EgfSeries& a, const EgfSeries& b);
  friend bool operator==(const EgfSeries& a, const EgfSeries& b) {
    return a.taylor_ == b.taylor_;
  }

  EgfSeries scalar_mul(const Rational& c) const;
  EgfSeries pow(unsigned long e) const;

  /// this(inner); requires inner(0) = 0.
  EgfSeries compose(const EgfSeries& inner) const;
  /// Compositional inverse; requires t_0 = 0 and t_1 != 0.
  EgfSeries reversion() const;
  /// exp of a series with zero constant term.
  EgfSeries exp() const;
  /// log of a series with constant term 1.
  EgfSeries log() const;
  /// 1/this; requires a nonzero constant term.
  EgfSeries reciprocal() const;
  friend EgfSeries operator/(const EgfSeries& a, const EgfSeries& b);

  /// Termwise derivative; drops the order by one.
  EgfSeries derivative() const;

  /// The substitution x -> -x (flips the sign of odd coefficients).
  EgfSeries alternate_signs() const;

  std::string to_string() const;

 private:
  std::vector<Rational> taylor_;
};

}  // namespace srcomb
