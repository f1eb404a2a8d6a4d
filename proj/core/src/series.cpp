#include "srcomb/series.hpp"

#include <sstream>
#include <stdexcept>

namespace srcomb {

namespace {

void require_equal_orders(const EgfSeries& a, const EgfSeries& b, const char* op) {
  if (a.order() != b.order()) {
    throw std::invalid_argument(std::string(op) + ": order mismatch (" +
                                std::to_string(a.order()) + " vs " +
                                std::to_string(b.order()) + ")");
  }
}

}  // namespace

EgfSeries EgfSeries::from_taylor(std::vector<Rational> taylor) {
  if (taylor.empty()) throw std::invalid_argument("EgfSeries: empty coefficient list");
  EgfSeries s(taylor.size() - 1);
  s.taylor_ = std::move(taylor);
  return s;
}

EgfSeries EgfSeries::one(std::size_t order) {
  EgfSeries s(order);
  s.taylor_[0] = Rational(1);
  return s;
}

EgfSeries EgfSeries::identity(std::size_t order) {
  if (order < 1) throw std::invalid_argument("EgfSeries::identity: order must be >= 1");
  EgfSeries s(order);
  s.taylor_[1] = Rational(1);
  return s;
}

EgfSeries EgfSeries::constant(const Rational& c, std::size_t order) {
  EgfSeries s(order);
  s.taylor_[0] = c;
  return s;
}

EgfSeries EgfSeries::generate(std::size_t order,
                              const std::function<Rational(std::size_t)>& gen) {
  EgfSeries s(order);
  for (std::size_t n = 0; n <= order; ++n) s.taylor_[n] = gen(n);
  return s;
}

const Rational& EgfSeries::taylor(std::size_t n) const {
  if (n >= taylor_.size())
    throw std::invalid_argument("EgfSeries::taylor: index exceeds truncation order");
  return taylor_[n];
}

Rational EgfSeries::egf_coefficient(std::size_t n) const {
  return taylor(n) * Rational(factorial(n));
}

bool EgfSeries::is_zero() const {
  for (const auto& t : taylor_)
    if (!t.is_zero()) return false;
  return true;
}

EgfSeries EgfSeries::truncated(std::size_t new_order) const {
  if (new_order > order())
    throw std::invalid_argument("EgfSeries::truncated: target order exceeds current order");
  EgfSeries s(new_order);
  for (std::size_t n = 0; n <= new_order; ++n) s.taylor_[n] = taylor_[n];
  return s;
}

EgfSeries EgfSeries::extended(std::size_t new_order) const {
  if (new_order < order())
    throw std::invalid_argument("EgfSeries::extended: target order below current order");
  EgfSeries s(new_order);
  for (std::size_t n = 0; n <= order(); ++n) s.taylor_[n] = taylor_[n];
  return s;
}

EgfSeries EgfSeries::operator-() const {
  EgfSeries s(order());
  for (std::size_t n = 0; n <= order(); ++n) s.taylor_[n] = -taylor_[n];
  return s;
}

EgfSeries operator+(const EgfSeries& a, const EgfSeries& b) {
  require_equal_orders(a, b, "EgfSeries::add");
  EgfSeries s(a.order());
  for (std::size_t n = 0; n <= a.order(); ++n) s.taylor_[n] = a.taylor_[n] + b.taylor_[n];
  return s;
}

EgfSeries operator-(const EgfSeries& a, const EgfSeries& b) {
  require_equal_orders(a, b, "EgfSeries::sub");
  EgfSeries s(a.order());
  for (std::size_t n = 0; n <= a.order(); ++n) s.taylor_[n] = a.taylor_[n] - b.taylor_[n];
  return s;
}

EgfSeries operator*(const EgfSeries& a, const EgfSeries& b) {
  require_equal_orders(a, b, "EgfSeries::mul");
  const std::size_t N = a.order();
  EgfSeries s(N);
  for (std::size_t i = 0; i <= N; ++i) {
    if (a.taylor_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= N; ++j) {
      if (b.taylor_[j].is_zero()) continue;
      s.taylor_[i + j] += a.taylor_[i] * b.taylor_[j];
    }
  }
  return s;
}

EgfSeries EgfSeries::scalar_mul(const Rational& c) const {
  EgfSeries s(order());
  for (std::size_t n = 0; n <= order(); ++n) s.taylor_[n] = taylor_[n] * c;
  return s;
}

EgfSeries EgfSeries::pow(unsigned long e) const {
  EgfSeries acc = EgfSeries::one(order());
  EgfSeries base = *this;
  while (e > 0) {
    if (e & 1UL) acc = acc * base;
    base = base * base;
    e >>= 1UL;
  }
  return acc;
}

EgfSeries EgfSeries::compose(const EgfSeries& inner) const {
  require_equal_orders(*this, inner, "EgfSeries::compose");
  if (!inner.taylor_[0].is_zero())
    throw std::invalid_argument("EgfSeries::compose: inner series has a nonzero constant term");
  // Horner in the truncated ring.
  const std::size_t N = order();
  EgfSeries acc = EgfSeries::constant(taylor_[N], N);
  for (std::size_t i = N; i-- > 0;) {
    acc = acc * inner;
    acc.taylor_[0] += taylor_[i];
  }
  return acc;
}

EgfSeries EgfSeries::reciprocal() const {
  if (taylor_[0].is_zero())
    throw std::invalid_argument("EgfSeries::reciprocal: zero constant term");
  const std::size_t N = order();
  EgfSeries s(N);
  s.taylor_[0] = Rational(1) / taylor_[0];
  for (std::size_t n = 1; n <= N; ++n) {
    Rational acc(0);
    for (std::size_t k = 1; k <= n; ++k) acc += taylor_[k] * s.taylor_[n - k];
    s.taylor_[n] = -acc / taylor_[0];
  }
  return s;
}

EgfSeries operator/(const EgfSeries& a, const EgfSeries& b) { return a * b.reciprocal(); }

EgfSeries EgfSeries::reversion() const {
  const std::size_t N = order();
  if (!taylor_[0].is_zero() || N < 1 || taylor_[1].is_zero())
    throw std::invalid_argument("EgfSeries::reversion: needs t0 = 0 and t1 != 0");
  // Newton iteration g <- g - (f(g) - x) / f'(g); each step doubles the
  // number of correct coefficients starting from g = x / t1.
  EgfSeries x = EgfSeries::identity(N);
  EgfSeries g = x.scalar_mul(Rational(1) / taylor_[1]);
  const EgfSeries fprime = derivative().extended(N);
  std::size_t correct = 1;
  while (correct <= N) {
    EgfSeries err = compose(g) - x;
    if (err.is_zero()) break;
    g = g - err / fprime.compose(g);
    correct *= 2;
  }
  return g;
}

EgfSeries EgfSeries::exp() const {
  if (!taylor_[0].is_zero())
    throw std::invalid_argument("EgfSeries::exp: nonzero constant term");
  const std::size_t N = order();
  EgfSeries s(N);
  s.taylor_[0] = Rational(1);
  // b' = a' b  =>  n b_n = sum_{k=1}^{n} k a_k b_{n-k}
  for (std::size_t n = 1; n <= N; ++n) {
    Rational acc(0);
    for (std::size_t k = 1; k <= n; ++k)
      acc += taylor_[k] * Rational(static_cast<long>(k)) * s.taylor_[n - k];
    s.taylor_[n] = acc / Rational(static_cast<long>(n));
  }
  return s;
}

EgfSeries EgfSeries::log() const {
  if (taylor_[0] != Rational(1))
    throw std::invalid_argument("EgfSeries::log: constant term must be 1");
  const std::size_t N = order();
  EgfSeries c(N);
  // a = exp(c)  =>  n a_n = sum_{k=1}^{n} k c_k a_{n-k}, solved for c_n.
  for (std::size_t n = 1; n <= N; ++n) {
    Rational acc = taylor_[n] * Rational(static_cast<long>(n));
    for (std::size_t k = 1; k < n; ++k)
      acc -= c.taylor_[k] * Rational(static_cast<long>(k)) * taylor_[n - k];
    c.taylor_[n] = acc / Rational(static_cast<long>(n));
  }
  return c;
}

EgfSeries EgfSeries::derivative() const {
  if (order() == 0) return EgfSeries(0);
  EgfSeries s(order() - 1);
  for (std::size_t n = 1; n <= order(); ++n)
    s.taylor_[n - 1] = taylor_[n] * Rational(static_cast<long>(n));
  return s;
}

EgfSeries EgfSeries::alternate_signs() const {
  EgfSeries s(order());
  for (std::size_t n = 0; n <= order(); ++n)
    s.taylor_[n] = (n % 2 == 0) ? taylor_[n] : -taylor_[n];
  return s;
}

std::string EgfSeries::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t n = 0; n <= order(); ++n) {
    if (n) os << ", ";
    os << taylor_[n].to_string();
  }
  os << "]";
  return os.str();
}

}  // namespace srcomb
