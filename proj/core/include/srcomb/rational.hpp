#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>

namespace srcomb {

using BigInt = mpz_class;

BigInt factorial(unsigned long n);
BigInt binomial(long n, long k);
/// r(r-1)...(r-i+1)
BigInt falling_factorial(long r, long i);

/// Exact rational number, always kept in canonical form:
/// gcd(|num|, den) = 1 and den >= 1.  All arithmetic is exact.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit from integers is intended
  Rational(const BigInt& n) : v_(n) {}
  Rational(const BigInt& num, const BigInt& den) : v_(num, den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    v_.canonicalize();
  }
  Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

  const BigInt numerator() const { return v_.get_num(); }
  const BigInt denominator() const { return v_.get_den(); }
  bool is_zero() const { return v_ == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  /// Throws unless the value is an integer.
  BigInt to_integer() const {
    if (!is_integer())
      throw std::domain_error("Rational: " + to_string() + " is not an integer");
    return v_.get_num();
  }

  std::string to_string() const {
    std::string s = v_.get_num().get_str();
    if (v_.get_den() != 1) s += "/" + v_.get_den().get_str();
    return s;
  }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

 private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

/// 1 / n!
Rational inverse_factorial(unsigned long n);

/// base^e for integer e of either sign (base != 0 when e < 0)
Rational rational_pow(const Rational& base, long e);

}  // namespace srcomb
