#include "srcomb/rational.hpp"

namespace srcomb {

BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt binomial(long n, long k) {
  if (k < 0 || k > n || n < 0) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

BigInt falling_factorial(long r, long i) {
  if (i < 0) throw std::invalid_argument("falling_factorial: negative length");
  BigInt out = 1;
  for (long j = 0; j < i; ++j) out *= (r - j);
  return out;
}

Rational inverse_factorial(unsigned long n) { return Rational(BigInt(1), factorial(n)); }

Rational rational_pow(const Rational& base, long e) {
  if (e == 0) return Rational(1);
  Rational b = base;
  if (e < 0) {
    if (b.is_zero()) throw std::invalid_argument("rational_pow: 0 to a negative power");
    b = Rational(1) / b;
    e = -e;
  }
  Rational acc(1);
  while (e > 0) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

}  // namespace srcomb
