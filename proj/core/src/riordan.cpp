#include "srcomb/riordan.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace srcomb {

TriMatrix::TriMatrix(std::size_t size) : rows_(size) {
  if (size == 0) throw std::invalid_argument("TriMatrix: size must be positive");
  for (std::size_t n = 0; n < size; ++n) rows_[n].resize(n + 1);
}

TriMatrix TriMatrix::identity(std::size_t size) {
  TriMatrix m(size);
  for (std::size_t n = 0; n < size; ++n) m.rows_[n][n] = Rational(1);
  return m;
}

Rational TriMatrix::at(std::size_t n, std::size_t k) const {
  if (n >= size() || k >= size())
    throw std::invalid_argument("TriMatrix::at: index outside matrix");
  if (k > n) return Rational(0);
  return rows_[n][k];
}

void TriMatrix::set(std::size_t n, std::size_t k, Rational v) {
  if (n >= size() || k > n)
    throw std::invalid_argument("TriMatrix::set: index outside lower triangle");
  rows_[n][k] = std::move(v);
}

TriMatrix operator*(const TriMatrix& a, const TriMatrix& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("TriMatrix::multiply: size mismatch (" +
                                std::to_string(a.size()) + " vs " + std::to_string(b.size()) +
                                ")");
  TriMatrix c(a.size());
  for (std::size_t n = 0; n < a.size(); ++n)
    for (std::size_t k = 0; k <= n; ++k) {
      Rational acc(0);
      for (std::size_t i = k; i <= n; ++i) acc += a.rows_[n][i] * b.rows_[i][k];
      c.rows_[n][k] = acc;
    }
  return c;
}

TriMatrix TriMatrix::inverse() const {
  for (std::size_t n = 0; n < size(); ++n)
    if (rows_[n][n].is_zero())
      throw std::invalid_argument("TriMatrix::inverse: zero diagonal entry at row " +
                                  std::to_string(n));
  TriMatrix inv(size());
  for (std::size_t j = 0; j < size(); ++j) {
    inv.rows_[j][j] = Rational(1) / rows_[j][j];
    for (std::size_t i = j + 1; i < size(); ++i) {
      Rational acc(0);
      for (std::size_t t = j; t < i; ++t) acc += rows_[i][t] * inv.rows_[t][j];
      inv.rows_[i][j] = -acc / rows_[i][i];
    }
  }
  return inv;
}

bool TriMatrix::is_integral() const {
  for (const auto& row : rows_)
    for (const auto& v : row)
      if (!v.is_integer()) return false;
  return true;
}

void TriMatrix::assert_integral(const char* what) const {
  for (std::size_t n = 0; n < size(); ++n)
    for (std::size_t k = 0; k <= n; ++k)
      if (!rows_[n][k].is_integer())
        throw std::logic_error(std::string(what) + ": non-integer entry " +
                               rows_[n][k].to_string() + " at (" + std::to_string(n) + "," +
                               std::to_string(k) + ")");
}

std::vector<Rational> TriMatrix::apply(const std::vector<Rational>& v) const {
  if (v.size() != size())
    throw std::invalid_argument("TriMatrix::apply: vector length mismatch");
  std::vector<Rational> out(size());
  for (std::size_t n = 0; n < size(); ++n) {
    Rational acc(0);
    for (std::size_t k = 0; k <= n; ++k) acc += rows_[n][k] * v[k];
    out[n] = acc;
  }
  return out;
}

std::vector<BigInt> TriMatrix::integer_row(std::size_t n) const {
  if (n >= size()) throw std::invalid_argument("TriMatrix::integer_row: row outside matrix");
  std::vector<BigInt> out;
  out.reserve(n + 1);
  for (const auto& v : rows_[n]) out.push_back(v.to_integer());
  return out;
}

std::string TriMatrix::to_json() const {
  nlohmann::json j;
  j["size"] = size();
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : rows_) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& v : row) r.push_back(v.to_string());
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  return j.dump();
}

namespace {

Rational rational_from_string(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(BigInt(s));
  return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
}

}  // namespace

TriMatrix TriMatrix::from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  const std::size_t size = j.at("size").get<std::size_t>();
  const auto& rows = j.at("rows");
  if (rows.size() != size) throw std::invalid_argument("TriMatrix::from_json: row count mismatch");
  TriMatrix m(size);
  for (std::size_t n = 0; n < size; ++n) {
    const auto& row = rows.at(n);
    if (row.size() != n + 1)
      throw std::invalid_argument("TriMatrix::from_json: row " + std::to_string(n) +
                                  " has wrong length");
    for (std::size_t k = 0; k <= n; ++k)
      m.rows_[n][k] = rational_from_string(row.at(k).get<std::string>());
  }
  return m;
}

std::string TriMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t n = 0; n < size(); ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      if (k) os << " ";
      os << rows_[n][k].to_string();
    }
    os << "\n";
  }
  return os.str();
}

RiordanPair::RiordanPair(EgfSeries g_in, EgfSeries f_in) : g(std::move(g_in)), f(std::move(f_in)) {
  if (g.order() != f.order())
    throw std::invalid_argument("RiordanPair: g and f must have equal orders");
  if (g.taylor(0).is_zero()) throw std::invalid_argument("RiordanPair: requires g(0) != 0");
  if (!f.taylor(0).is_zero()) throw std::invalid_argument("RiordanPair: requires f(0) = 0");
  if (f.order() < 1 || f.taylor(1).is_zero())
    throw std::invalid_argument("RiordanPair: requires f'(0) != 0");
}

RiordanPair RiordanPair::product(const RiordanPair& other) const {
  return RiordanPair(g * other.g.compose(f), other.f.compose(f));
}

TriMatrix build_riordan(const RiordanPair& pair, std::size_t size) {
  if (size == 0 || size > pair.g.order() + 1)
    throw std::invalid_argument("build_riordan: size must be within the series order");
  TriMatrix m(size);
  EgfSeries column = pair.g;
  for (std::size_t k = 0; k < size; ++k) {
    for (std::size_t n = k; n < size; ++n) m.set(n, k, column.egf_coefficient(n));
    if (k + 1 < size)
      column = (column * pair.f).scalar_mul(Rational(1, static_cast<long>(k) + 1));
  }
  return m;
}

bool is_riordan(const SRContext& ctx) { return ctx.set().contains(1); }

RiordanPair riordan_pair_second_kind(const SRContext& ctx) {
  return RiordanPair(ctx.set().component_egf(ctx.order()).pow(ctx.special_count()),
                     ctx.set().block_egf(ctx.order()));
}

RiordanPair riordan_pair_first_kind(const SRContext& ctx) {
  return RiordanPair(ctx.set().shifted_power_sum(ctx.order()).pow(ctx.special_count()),
                     ctx.set().cycle_gf(ctx.order()));
}

namespace {

TriMatrix matrix_from_table(const SRContext& ctx, std::size_t size, bool second) {
  if (size == 0 || size > ctx.order() + 1)
    throw std::invalid_argument("matrix: size must be within the context order");
  TriMatrix m(size);
  for (std::size_t n = 0; n < size; ++n)
    for (std::size_t k = 0; k <= n; ++k)
      m.set(n, k,
            Rational(second ? ctx.stirling2(static_cast<long>(n), static_cast<long>(k))
                            : ctx.stirling1(static_cast<long>(n), static_cast<long>(k))));
  return m;
}

IntPolynomial polynomial_by_inverse_recurrence(const TriMatrix& inv, long n) {
  // p_m(x) = x^m - sum_{k<m} inv(m,k) p_k(x)
  std::vector<IntPolynomial> p;
  p.reserve(n + 1);
  for (long m = 0; m <= n; ++m) {
    IntPolynomial q = IntPolynomial::monomial(1, static_cast<std::size_t>(m));
    for (long k = 0; k < m; ++k)
      q = q - p[k].scalar_mul(inv.at(static_cast<std::size_t>(m), static_cast<std::size_t>(k))
                                  .to_integer());
    p.push_back(std::move(q));
  }
  return p[n];
}

}  // namespace

TriMatrix matrix_second_kind(const SRContext& ctx, std::size_t size) {
  return matrix_from_table(ctx, size, true);
}

TriMatrix matrix_first_kind(const SRContext& ctx, std::size_t size) {
  return matrix_from_table(ctx, size, false);
}

IntPolynomial bell_polynomial_determinant(const SRContext& ctx, long n) {
  if (!is_riordan(ctx))
    throw std::invalid_argument("bell_polynomial_determinant: requires 1 in S");
  if (n < 0 || static_cast<std::size_t>(n) > ctx.order())
    throw std::invalid_argument("bell_polynomial_determinant: n outside context order");
  const TriMatrix inv = matrix_second_kind(ctx, static_cast<std::size_t>(n) + 1).inverse();
  return polynomial_by_inverse_recurrence(inv, n);
}

IntPolynomial factorial_polynomial_determinant(const SRContext& ctx, long n) {
  if (!is_riordan(ctx))
    throw std::invalid_argument("factorial_polynomial_determinant: requires 1 in S");
  if (n < 0 || static_cast<std::size_t>(n) > ctx.order())
    throw std::invalid_argument("factorial_polynomial_determinant: n outside context order");
  const TriMatrix inv = matrix_first_kind(ctx, static_cast<std::size_t>(n) + 1).inverse();
  return polynomial_by_inverse_recurrence(inv, n);
}

}  // namespace srcomb
