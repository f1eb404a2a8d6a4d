#pragma once

#include <string>
#include <vector>

#include "srcomb/series.hpp"
#include "srcomb/stirling.hpp"

namespace srcomb {

/// Lower-triangular matrix of exact rationals indexed (n, k), 0 <= k <= n.
/// Entries above the diagonal are implicitly zero.
class TriMatrix {
 public:
  explicit TriMatrix(std::size_t size);
  static TriMatrix identity(std::size_t size);

  std::size_t size() const { return rows_.size(); }
  /// Zero above the diagonal; throws outside the matrix.
  Rational at(std::size_t n, std::size_t k) const;
  void set(std::size_t n, std::size_t k, Rational v);

  friend TriMatrix operator*(const TriMatrix& a, const TriMatrix& b);
  friend bool operator==(const TriMatrix& a, const TriMatrix& b) { return a.rows_ == b.rows_; }

  /// Exact inverse by forward substitution; throws naming the row when a
  /// diagonal entry is zero.
  TriMatrix inverse() const;

  bool is_integral() const;
  /// Throws unless every entry has denominator 1.
  void assert_integral(const char* what) const;

  /// Matrix-vector product (the "fundamental theorem" action on columns).
  std::vector<Rational> apply(const std::vector<Rational>& v) const;

  std::vector<BigInt> integer_row(std::size_t n) const;

  /// {"size": n, "rows": [["entry", ...], ...]} with entries as exact
  /// decimal strings ("p" or "p/q"), never binary floats.
  std::string to_json() const;
  static TriMatrix from_json(const std::string& text);

  std::string to_string() const;

 private:
  std::vector<std::vector<Rational>> rows_;
};

/// A pair (g, f) with g(0) != 0, f(0) = 0, f'(0) != 0, defining the
/// exponential Riordan array whose column k has EGF g f^k / k!.
struct RiordanPair {
  EgfSeries g;
  EgfSeries f;

  RiordanPair(EgfSeries g_in, EgfSeries f_in);

  /// Group law: (g, f) * (h, l) = (g * h(f), l(f)).
  RiordanPair product(const RiordanPair& other) const;
};

/// Materializes the leading size-by-size block; size <= series order + 1.
TriMatrix build_riordan(const RiordanPair& pair, std::size_t size);

/// The matrix [stirling2(n,k)].  When 1 is not in S the matrix is still
/// built entrywise but is not an exponential Riordan array (use
/// is_riordan() to test) and will generally fail to invert.
TriMatrix matrix_second_kind(const SRContext& ctx, std::size_t size);
TriMatrix matrix_first_kind(const SRContext& ctx, std::size_t size);
/// True when the Riordan-pair invariants hold for ctx, i.e. 1 in S.
bool is_riordan(const SRContext& ctx);
/// The defining pairs; require 1 in S.
RiordanPair riordan_pair_second_kind(const SRContext& ctx);
RiordanPair riordan_pair_first_kind(const SRContext& ctx);

/// Bell / factorial polynomials evaluated through the inverse-matrix
/// recurrence p_n(x) = x^n - sum_{k<n} inv(n,k) p_k(x), which expands the
/// determinantal identity along its last column.  Requires 1 in S.
IntPolynomial bell_polynomial_determinant(const SRContext& ctx, long n);
IntPolynomial factorial_polynomial_determinant(const SRContext& ctx, long n);

}  // namespace srcomb
