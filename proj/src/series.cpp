#include "arborium/series.hpp"

#include <algorithm>
#include <sstream>

#include "arborium/error.hpp"

namespace arborium {

TruncatedSeries::TruncatedSeries(int order) : order_(order) {
  if (order < 0) throw AlgebraError("series order must be non-negative");
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

TruncatedSeries::TruncatedSeries(int order, std::vector<MultiPoly> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
  if (order < 0) throw AlgebraError("series order must be non-negative");
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
  for (const auto& c : coeffs_) {
    if (c.involves(Var::s)) throw AlgebraError("series coefficient contains s: " + c.to_string());
  }
}

TruncatedSeries TruncatedSeries::from_poly(const MultiPoly& p, int order) {
  TruncatedSeries r(order);
  for (int m = 0; m <= order; ++m) r[m] = p.coefficient(Var::s, m);
  return r;
}

TruncatedSeries TruncatedSeries::derivative() const {
  TruncatedSeries r(std::max(order_ - 1, 0));
  for (int m = 1; m <= order_; ++m) r[m - 1] = coeffs_[static_cast<std::size_t>(m)] * Rat(m);
  return r;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries r(std::min(a.order_, b.order_));
  for (int m = 0; m <= r.order_; ++m) r[m] = a[m] + b[m];
  return r;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries r(std::min(a.order_, b.order_));
  for (int m = 0; m <= r.order_; ++m) r[m] = a[m] - b[m];
  return r;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries r(std::min(a.order_, b.order_));
  for (int i = 0; i <= r.order_; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j <= r.order_; ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

TruncatedSeries series_expand_rational(const MultiPoly& num, const MultiPoly& den, int order) {
  const TruncatedSeries n = TruncatedSeries::from_poly(num, order);
  const int den_degree = den.degree(Var::s);
  std::vector<MultiPoly> d;
  for (int k = 0; k <= den_degree; ++k) d.push_back(den.coefficient(Var::s, k));
  if (d[0].is_zero() || !d[0].is_constant()) {
    throw AlgebraError("series_expand_rational: denominator must have a non-zero constant s^0 term, got " +
                       d[0].to_string());
  }
  const Rat inv = Rat(1) / d[0].constant_term();
  TruncatedSeries r(order);
  for (int m = 0; m <= order; ++m) {
    MultiPoly acc = n[m];
    for (int k = 1; k <= std::min(m, den_degree); ++k) acc -= d[static_cast<std::size_t>(k)] * r[m - k];
    r[m] = acc * inv;
  }
  return r;
}

TruncatedSeries series_pow_symbolic(const MultiPoly& base_num, const MultiPoly& base_den, int order) {
  const auto linear_in_s = [](const MultiPoly& p) {
    return p.degree(Var::s) <= 1 && p.coefficient(Var::s, 0) == MultiPoly(1);
  };
  if (!linear_in_s(base_num) || !linear_in_s(base_den)) {
    throw AlgebraError("series_pow_symbolic: base must be (1 + a*s)/(1 - b*s), got (" +
                       base_num.to_string() + ")/(" + base_den.to_string() + ")");
  }
  const MultiPoly a = base_num.coefficient(Var::s, 1);
  const MultiPoly b = -base_den.coefficient(Var::s, 1);
  const MultiPoly u = MultiPoly::variable(Var::u);

  // (1 + a s)^u = sum binom(u, k) a^k s^k ; (1 - b s)^(-u) = sum binom(u + k - 1, k) b^k s^k
  TruncatedSeries numerator(order);
  TruncatedSeries denominator(order);
  MultiPoly a_pow(1);
  MultiPoly b_pow(1);
  for (int k = 0; k <= order; ++k) {
    const auto uk = static_cast<unsigned>(k);
    numerator[k] = binom_poly(u, uk) * a_pow;
    denominator[k] = binom_poly(u + MultiPoly(k - 1), uk) * b_pow;
    a_pow *= a;
    b_pow *= b;
  }
  return numerator * denominator;
}

LaurentSeries::LaurentSeries(int min_degree, int order, std::vector<Rat> coeffs)
    : min_degree_(min_degree), order_(order), coeffs_(std::move(coeffs)) {
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead].is_zero()) ++lead;
  coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
  min_degree_ += static_cast<int>(lead);
  coeffs_.resize(static_cast<std::size_t>(std::max(order_ - min_degree_ + 1, 0)));
}

Rat LaurentSeries::coefficient(int d) const {
  if (d < min_degree_ || d > order_) return Rat(0);
  return coeffs_[static_cast<std::size_t>(d - min_degree_)];
}

std::string LaurentSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int d = min_degree_; d <= order_; ++d) {
    const Rat c = coefficient(d);
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << '(' << c << ")*v^" << d;
  }
  if (first) os << '0';
  os << " + O(v^" << order_ + 1 << ')';
  return os.str();
}

LaurentSeries laplace_laurent(const MultiPoly& l, int order) {
  for (const auto& [e, c] : l.terms()) {
    for (std::size_t i = 0; i < kNumVars; ++i) {
      const auto x = static_cast<Var>(i);
      if (e[i] != 0 && x != Var::E && x != Var::V) {
        throw AlgebraError("laplace_laurent expects a polynomial in E and V, got " + l.to_string());
      }
    }
  }
  const int max_v = l.degree(Var::V);
  const int lowest = -max_v;
  // E^b = exp(-b v) is expanded to order + max_v so every requested coefficient is exact.
  std::vector<Rat> coeffs(static_cast<std::size_t>(order - lowest + 1));
  for (const auto& [e, c] : l.terms()) {
    const int a = e[static_cast<std::size_t>(Var::V)];
    const Rat b(e[static_cast<std::size_t>(Var::E)]);
    for (int k = 0; k <= order + a; ++k) {
      const Rat term = c * (-b).pow(k) / Rat(factorial(static_cast<unsigned>(k)));
      coeffs[static_cast<std::size_t>(k - a - lowest)] += term;
    }
  }
  return LaurentSeries(lowest, order, std::move(coeffs));
}

MultiPoly lagrange_interpolate(const std::vector<std::pair<Rat, Rat>>& samples, Var x, int max_degree) {
  if (samples.empty()) throw AlgebraError("lagrange_interpolate: no samples");
  const std::size_t used =
      max_degree < 0 ? samples.size() : std::min(samples.size(), static_cast<std::size_t>(max_degree) + 1);
  for (std::size_t i = 0; i < samples.size(); ++i) {
    for (std::size_t j = i + 1; j < samples.size(); ++j) {
      if (samples[i].first == samples[j].first) {
        throw AlgebraError("lagrange_interpolate: repeated abscissa " + samples[i].first.to_string());
      }
    }
  }

  // Newton divided differences over the determining samples.
  std::vector<Rat> table;
  table.reserve(used);
  for (std::size_t i = 0; i < used; ++i) table.push_back(samples[i].second);
  for (std::size_t level = 1; level < used; ++level) {
    for (std::size_t i = used - 1; i >= level; --i) {
      table[i] = (table[i] - table[i - 1]) / (samples[i].first - samples[i - level].first);
    }
  }
  const MultiPoly var = MultiPoly::variable(x);
  MultiPoly result;
  for (std::size_t i = used; i-- > 0;) {
    result = result * (var - MultiPoly(samples[i].first)) + MultiPoly(table[i]);
  }

  for (std::size_t i = used; i < samples.size(); ++i) {
    const Rat value = result.evaluate({{x, samples[i].first}});
    if (value != samples[i].second) {
      throw AlgebraError("lagrange_interpolate: sample (" + samples[i].first.to_string() + ", " +
                         samples[i].second.to_string() + ") disagrees with degree-" +
                         std::to_string(used - 1) + " interpolant value " + value.to_string());
    }
  }
  return result;
}

}  // namespace arborium
