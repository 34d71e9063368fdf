#pragma once

#include <string>
#include <utility>
#include <vector>

#include "arborium/poly.hpp"

namespace arborium {

/// Power series in s truncated after s^order. Coefficients are polynomials free of s.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order);
  TruncatedSeries(int order, std::vector<MultiPoly> coeffs);

  /// Splits a polynomial in s into its s-coefficients, dropping everything above `order`.
  static TruncatedSeries from_poly(const MultiPoly& p, int order);

  int order() const { return order_; }
  const std::vector<MultiPoly>& coeffs() const { return coeffs_; }
  const MultiPoly& operator[](int m) const { return coeffs_.at(static_cast<std::size_t>(m)); }
  MultiPoly& operator[](int m) { return coeffs_.at(static_cast<std::size_t>(m)); }

  /// Formal derivative d/ds; the result has order one less.
  TruncatedSeries derivative() const;

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) = default;

 private:
  int order_;
  std::vector<MultiPoly> coeffs_;
};

/// Expansion of num/den in s up to s^order. The s^0 coefficient of den must be a
/// non-zero rational constant.
TruncatedSeries series_expand_rational(const MultiPoly& num, const MultiPoly& den, int order);

/// Expansion of ((1 + a*s)/(1 - b*s))^u with symbolic exponent u, where a and b are
/// free of s. `base_num` must be 1 + a*s and `base_den` 1 - b*s.
TruncatedSeries series_pow_symbolic(const MultiPoly& base_num, const MultiPoly& base_den, int order);

/// Laurent series in v with rational coefficients, stored from min_degree up to order.
class LaurentSeries {
 public:
  LaurentSeries(int min_degree, int order, std::vector<Rat> coeffs);

  int min_degree() const { return min_degree_; }
  int order() const { return order_; }
  /// Coefficient of v^d; zero below min_degree.
  Rat coefficient(int d) const;
  std::string to_string() const;

 private:
  int min_degree_;
  int order_;
  std::vector<Rat> coeffs_;
};

/// Substitutes E = exp(-v), V = 1/v into a polynomial in E and V and expands up to v^order.
LaurentSeries laplace_laurent(const MultiPoly& l, int order);

/// Unique polynomial in `x` through the samples. With `max_degree`, only the first
/// max_degree + 1 samples determine it and the remaining ones must agree.
MultiPoly lagrange_interpolate(const std::vector<std::pair<Rat, Rat>>& samples, Var x = Var::u,
                               int max_degree = -1);

}  // namespace arborium
