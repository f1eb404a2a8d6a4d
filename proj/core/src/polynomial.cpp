#include "srcomb/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace srcomb {

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients)
    : coefficients_(std::move(coefficients)) {
  trim();
}

IntPolynomial IntPolynomial::monomial(const BigInt& c, std::size_t degree) {
  std::vector<BigInt> coeffs(degree + 1);
  coeffs[degree] = c;
  return IntPolynomial(std::move(coeffs));
}

void IntPolynomial::trim() {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

IntPolynomial IntPolynomial::operator-() const {
  std::vector<BigInt> coeffs(coefficients_.size());
  for (std::size_t i = 0; i < coefficients_.size(); ++i) coeffs[i] = -coefficients_[i];
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> coeffs(std::max(a.coefficients_.size(), b.coefficients_.size()));
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] = a.coefficient(i) + b.coefficient(i);
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) { return a + (-b); }

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return IntPolynomial();
  std::vector<BigInt> coeffs(a.coefficients_.size() + b.coefficients_.size() - 1);
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i)
    for (std::size_t j = 0; j < b.coefficients_.size(); ++j)
      coeffs[i + j] += a.coefficients_[i] * b.coefficients_[j];
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial IntPolynomial::scalar_mul(const BigInt& c) const {
  std::vector<BigInt> coeffs(coefficients_.size());
  for (std::size_t i = 0; i < coefficients_.size(); ++i) coeffs[i] = coefficients_[i] * c;
  return IntPolynomial(std::move(coeffs));
}

BigInt IntPolynomial::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (std::size_t i = coefficients_.size(); i-- > 0;) acc = acc * x + coefficients_[i];
  return acc;
}

Rational IntPolynomial::evaluate(const Rational& x) const {
  Rational acc(0);
  for (std::size_t i = coefficients_.size(); i-- > 0;) acc = acc * x + Rational(coefficients_[i]);
  return acc;
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coefficients_.size(); i-- > 0;) {
    const BigInt& c = coefficients_[i];
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? "-" : "+");
    }
    const BigInt a = abs(c);
    if (a != 1 || i == 0) os << a.get_str();
    if (i >= 1) {
      os << "x";
      if (i >= 2) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace srcomb
