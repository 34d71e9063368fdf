#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "arborium/poly.hpp"

namespace arborium {

enum class Theorem { zeta, m_triangle, ehrhart, laplace };

std::string_view theorem_name(Theorem t);
std::optional<Theorem> parse_theorem(std::string_view name);

/// Comparison of the s^n coefficient of a generating series with the invariant of t_n.
struct OrderResult {
  int n = 0;
  bool pass = false;
  std::string lhs;
  std::string rhs;
  std::string diff;  // lhs - rhs, empty when passing
};

/// A side check attached to a report (closed form agreement, series identities, ...).
struct AuxiliaryCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Report {
  Theorem theorem = Theorem::zeta;
  int order = 0;
  std::vector<OrderResult> per_order;
  std::vector<AuxiliaryCheck> checks;
  bool overall = false;
};

/// Produces the s^n coefficient of the left-hand side for n >= 1. Replaceable so the
/// harness itself can be tested with perturbed inputs.
using LhsProvider = std::function<MultiPoly(int n)>;

/// 1 + sum Z_{t_n}(u,1) s^n against ((1 - su + s)/(1 - su))^u, plus the residual of
/// G'(s)(1 - us)(1 + s - us) - u G(s).
Report verify_zeta(int order, const LhsProvider& lhs = {});

/// 1 + sum M_{t_n}(X,Y) s^n against (XYs - Ys - 1)(XYs - 1) / ((2XYs - Ys - 1)(XYs - Ys + s - 1)).
Report verify_m_triangle(int order, const LhsProvider& lhs = {});

/// 1 + sum E_{t_n}(u) s^n against (1/2)(1 - s/(us + s - 1) - (s - 1)/(us + s - 1)^2).
Report verify_ehrhart(int order, const LhsProvider& lhs = {});

/// sum_{n>=1} L_{t_n}(E,V) s^n against V(s/(EVs - Vs + 1) + Es/(Es - 1)).
Report verify_laplace(int order, const LhsProvider& lhs = {});

Report verify(Theorem theorem, int order);

/// Generating-series right-hand sides as (numerator, denominator) polynomials in s.
struct RationalSeries {
  MultiPoly numerator;
  MultiPoly denominator;
};
RationalSeries m_triangle_series();
RationalSeries ehrhart_series();
RationalSeries laplace_series();

/// Human-readable rendering, one line per order plus the auxiliary checks.
std::string format_report(const Report& report);

}  // namespace arborium
