#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "arborium/rational.hpp"

namespace arborium {

/// Variables a polynomial may carry. The enumerator order is the canonical print order.
enum class Var : std::uint8_t { u, X, Y, V, E, s, v };

inline constexpr std::size_t kNumVars = 7;

std::string_view var_name(Var x);
std::optional<Var> parse_var(std::string_view name);

/// Exponent vector indexed by Var. Signed so that Laurent intermediates can be represented.
using Exponents = std::array<int, kNumVars>;

/// Graded lexicographic monomial order: total degree first, then lex in Var order.
struct GradedLex {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are kept in graded-lex order with no zero coefficient and no negative
/// exponent, so structural equality is mathematical equality.
class MultiPoly {
 public:
  using Terms = std::map<Exponents, Rat, GradedLex>;

  MultiPoly() = default;
  MultiPoly(const Rat& c);  // NOLINT(google-explicit-constructor)
  MultiPoly(long c) : MultiPoly(Rat(c)) {}  // NOLINT(google-explicit-constructor)
  MultiPoly(int c) : MultiPoly(Rat(c)) {}  // NOLINT(google-explicit-constructor)

  static MultiPoly variable(Var x);
  static MultiPoly monomial(const Rat& c, const Exponents& e);
  /// Builds from raw terms, dropping zeros. Throws AlgebraError on a negative exponent.
  static MultiPoly from_terms(Terms terms);

  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rat constant_term() const;
  Rat coefficient(const Exponents& e) const;

  int degree(Var x) const;
  int total_degree() const;
  bool involves(Var x) const { return degree(x) > 0; }

  /// Coefficient of x^k, as a polynomial free of x.
  MultiPoly coefficient(Var x, int k) const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const Rat& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rat& c) { return a *= c; }
  friend MultiPoly operator*(const Rat& c, MultiPoly a) { return a *= c; }
  friend MultiPoly operator-(const MultiPoly& a);

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

  MultiPoly pow(unsigned k) const;

  /// Quotient of an exact division. Throws AlgebraError when the remainder is non-zero.
  MultiPoly exact_div(const MultiPoly& divisor) const;

  MultiPoly substitute(Var x, const MultiPoly& value) const;

  MultiPoly eval_at(Var x, const Rat& value) const { return substitute(x, MultiPoly(value)); }
  /// Full evaluation. Every variable that occurs must be bound.
  Rat evaluate(const std::map<Var, Rat>& point) const;

  /// Canonical text: ascending graded-lex terms, "c*u^2*X", rationals as p/q, "0" for zero.
  std::string to_string() const;

 private:
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

/// Image of one variable in a Laurent substitution: numerator * prod(var^shift).
struct LaurentImage {
  MultiPoly numerator;
  Exponents shift{};
};

/// Simultaneous substitution of every mapped variable. Shifts may be negative; all
/// negative exponents must cancel in the result, otherwise AlgebraError is thrown.
MultiPoly substitute_laurent(const MultiPoly& p, const std::map<Var, LaurentImage>& images);

/// Generalized binomial p(p-1)...(p-k+1)/k! with a polynomial upper argument.
MultiPoly binom_poly(const MultiPoly& p, unsigned k);

/// Integer binomial: 0 for b < 0, 1 for b = 0 (any a, including a = -1),
/// falling factorial a(a-1)...(a-b+1)/b! otherwise.
BigInt int_binom(const BigInt& a, long b);
inline BigInt int_binom(long a, long b) { return int_binom(BigInt(a), b); }

}  // namespace arborium
