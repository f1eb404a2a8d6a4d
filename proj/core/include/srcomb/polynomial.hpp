#pragma once

#include <string>
#include <vector>

#include "srcomb/rational.hpp"

namespace srcomb {

/// Polynomial with arbitrary-precision integer coefficients, indexed by
/// degree, trailing zeros trimmed.  The zero polynomial has degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coefficients);
  static IntPolynomial monomial(const BigInt& c, std::size_t degree);

  long degree() const { return static_cast<long>(coefficients_.size()) - 1; }
  bool is_zero() const { return coefficients_.empty(); }
  BigInt coefficient(std::size_t k) const {
    return k < coefficients_.size() ? coefficients_[k] : BigInt(0);
  }
  const std::vector<BigInt>& coefficients() const { return coefficients_; }

  IntPolynomial operator-() const;
  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  IntPolynomial scalar_mul(const BigInt& c) const;
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
    return a.coefficients_ == b.coefficients_;
  }

  BigInt evaluate(const BigInt& x) const;
  Rational evaluate(const Rational& x) const;

  /// Rendered like "x^6+50x^4+220x^2"; the zero polynomial prints "0".
  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> coefficients_;
};

}  // namespace srcomb
