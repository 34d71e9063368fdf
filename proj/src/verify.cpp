#include "arborium/verify.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "arborium/arbor.hpp"
#include "arborium/error.hpp"
#include "arborium/invariants.hpp"
#include "arborium/oracle.hpp"
#include "arborium/series.hpp"

namespace arborium {

namespace {

constexpr std::array<std::string_view, 4> kTheoremNames = {"zeta", "m_triangle", "ehrhart", "laplace"};

MultiPoly var(Var x) { return MultiPoly::variable(x); }

void require_order(int order) {
  if (order < 1) throw ValidationError("verification order must be at least 1, got " + std::to_string(order));
}

// Fills per_order for n = 1..order and adds the s^0 check.
Report compare(Theorem theorem, int order, const LhsProvider& lhs, const TruncatedSeries& rhs,
               const MultiPoly& expected_constant) {
  Report r;
  r.theorem = theorem;
  r.order = order;
  for (int n = 1; n <= order; ++n) {
    const MultiPoly left = lhs(n);
    const MultiPoly& right = rhs[n];
    OrderResult entry{n, left == right, left.to_string(), right.to_string(), {}};
    if (!entry.pass) entry.diff = (left - right).to_string();
    r.per_order.push_back(std::move(entry));
  }
  r.checks.push_back({"constant term of the series is " + expected_constant.to_string(),
                      rhs[0] == expected_constant, "s^0 coefficient: " + rhs[0].to_string()});
  return r;
}

void finish(Report& r) {
  r.overall = std::all_of(r.per_order.begin(), r.per_order.end(), [](const OrderResult& e) { return e.pass; }) &&
              std::all_of(r.checks.begin(), r.checks.end(), [](const AuxiliaryCheck& c) { return c.pass; });
}

// Records "name" as passing when every n in 1..upto satisfies `agrees`; otherwise the first failing n.
template <typename Pred>
AuxiliaryCheck per_n_check(std::string name, int upto, Pred agrees) {
  for (int n = 1; n <= upto; ++n) {
    std::string detail;
    if (!agrees(n, detail)) return {std::move(name), false, "fails at n = " + std::to_string(n) + ": " + detail};
  }
  return {std::move(name), true, "n = 1.." + std::to_string(upto)};
}

}  // namespace

std::string_view theorem_name(Theorem t) { return kTheoremNames[static_cast<std::size_t>(t)]; }

std::optional<Theorem> parse_theorem(std::string_view name) {
  for (std::size_t i = 0; i < kTheoremNames.size(); ++i) {
    if (kTheoremNames[i] == name) return static_cast<Theorem>(i);
  }
  return std::nullopt;
}

RationalSeries m_triangle_series() {
  const MultiPoly s = var(Var::s);
  const MultiPoly xys = var(Var::X) * var(Var::Y) * s;
  const MultiPoly ys = var(Var::Y) * s;
  const MultiPoly one(1);
  return {(xys - ys - one) * (xys - one), (MultiPoly(2) * xys - ys - one) * (xys - ys + s - one)};
}

RationalSeries ehrhart_series() {
  // (1/2)(1 - s/D - (s-1)/D^2) with D = us + s - 1, over the common denominator 2 D^2.
  const MultiPoly s = var(Var::s);
  const MultiPoly d = var(Var::u) * s + s - MultiPoly(1);
  return {d * d - s * d - (s - MultiPoly(1)), MultiPoly(2) * d * d};
}

RationalSeries laplace_series() {
  // V(s/P + Es/Q) with P = EVs - Vs + 1 and Q = Es - 1, over the common denominator P Q.
  const MultiPoly s = var(Var::s);
  const MultiPoly e = var(Var::E);
  const MultiPoly v = var(Var::V);
  const MultiPoly p = e * v * s - v * s + MultiPoly(1);
  const MultiPoly q = e * s - MultiPoly(1);
  return {v * (s * q + e * s * p), p * q};
}

Report verify_zeta(int order, const LhsProvider& lhs_in) {
  require_order(order);
  const LhsProvider lhs =
      lhs_in ? lhs_in : [](int n) { return zeta_poly(make_tn(n)).eval_at(Var::X, Rat(1)); };
  const MultiPoly s = var(Var::s);
  const MultiPoly u = var(Var::u);
  const TruncatedSeries rhs =
      series_pow_symbolic(MultiPoly(1) + (MultiPoly(1) - u) * s, MultiPoly(1) - u * s, order);
  Report r = compare(Theorem::zeta, order, lhs, rhs, MultiPoly(1));

  // G'(s)(1 - us)(1 + s - us) = u G(s), G built from the left-hand side.
  TruncatedSeries g(order);
  g[0] = MultiPoly(1);
  for (int n = 1; n <= order; ++n) g[n] = lhs(n);
  const MultiPoly factor = (MultiPoly(1) - u * s) * (MultiPoly(1) + s - u * s);
  const TruncatedSeries residual =
      g.derivative() * TruncatedSeries::from_poly(factor, order - 1) - TruncatedSeries::from_poly(u, order - 1) * g;
  int first_nonzero = -1;
  for (int m = 0; m <= residual.order(); ++m) {
    if (!residual[m].is_zero()) {
      first_nonzero = m;
      break;
    }
  }
  r.checks.push_back({"log-derivative residual G'(1-us)(1+s-us) - uG vanishes", first_nonzero < 0,
                      first_nonzero < 0 ? "s^0..s^" + std::to_string(order - 1) + " all zero"
                                        : "s^" + std::to_string(first_nonzero) + " coefficient " +
                                              residual[first_nonzero].to_string()});
  r.checks.push_back(per_n_check("closed form sum binom(n-1,k)(u-1)^k binom(u+n-k-1,n-k)", order,
                                 [&](int n, std::string& detail) {
                                   const MultiPoly closed = zeta_tn_closed(n);
                                   detail = closed.to_string();
                                   return closed == lhs(n);
                                 }));
  finish(r);
  return r;
}

Report verify_m_triangle(int order, const LhsProvider& lhs_in) {
  require_order(order);
  const LhsProvider lhs = lhs_in ? lhs_in : [](int n) { return m_triangle(make_tn(n)); };
  const RationalSeries f = m_triangle_series();
  const TruncatedSeries rhs = series_expand_rational(f.numerator, f.denominator, order);
  Report r = compare(Theorem::m_triangle, order, lhs, rhs, MultiPoly(1));

  r.checks.push_back(per_n_check("closed form A^n + C A^(n-1) - C B^(n-1)", order, [&](int n, std::string& detail) {
    const MultiPoly closed = m_tn_closed(n);
    detail = closed.to_string();
    return closed == lhs(n);
  }));
  r.checks.push_back(per_n_check("series at X = 1 is 1/(1-s)", order, [&](int n, std::string& detail) {
    const MultiPoly at_one = rhs[n].eval_at(Var::X, Rat(1));
    detail = at_one.to_string();
    return at_one == MultiPoly(1);
  }));
  finish(r);
  return r;
}

Report verify_ehrhart(int order, const LhsProvider& lhs_in) {
  require_order(order);
  const LhsProvider lhs = lhs_in ? lhs_in : [](int n) { return ehrhart_tn_closed(n); };
  const RationalSeries f = ehrhart_series();
  const TruncatedSeries rhs = series_expand_rational(f.numerator, f.denominator, order);
  Report r = compare(Theorem::ehrhart, order, lhs, rhs, MultiPoly(1));

  r.checks.push_back(per_n_check("alternating-sum formula equals the closed form", order,
                                 [&](int n, std::string& detail) {
                                   const MultiPoly alt = ehrhart_tn_alternating(n);
                                   detail = alt.to_string();
                                   return alt == lhs(n);
                                 }));
  constexpr int kMaxEnumeratedN = 6;
  constexpr int kMaxDilation = 4;
  r.checks.push_back(per_n_check(
      "lattice-point counts of m*Q_{t_n} for m = 0.." + std::to_string(kMaxDilation),
      std::min(order, kMaxEnumeratedN), [&](int n, std::string& detail) {
        const Arbor t = make_tn(n);
        const MultiPoly e = lhs(n);
        for (int m = 0; m <= kMaxDilation; ++m) {
          const Rat predicted = e.evaluate({{Var::u, Rat(m)}});
          const auto counted = oracle::count_points_by_enumeration(t, m);
          if (predicted != Rat(BigInt(static_cast<unsigned long>(counted)))) {
            detail = "m = " + std::to_string(m) + ": formula " + predicted.to_string() + ", counted " +
                     std::to_string(counted);
            return false;
          }
        }
        return true;
      }));
  finish(r);
  return r;
}

Report verify_laplace(int order, const LhsProvider& lhs_in) {
  require_order(order);
  const LhsProvider lhs = lhs_in ? lhs_in : [](int n) { return laplace(make_tn(n)); };
  const RationalSeries f = laplace_series();
  const TruncatedSeries rhs = series_expand_rational(f.numerator, f.denominator, order);
  Report r = compare(Theorem::laplace, order, lhs, rhs, MultiPoly(0));

  r.checks.push_back(per_n_check("closed form V^n(1-E)^(n-1) - VE^n", order, [&](int n, std::string& detail) {
    const MultiPoly closed = laplace_tn_closed(n);
    detail = closed.to_string();
    return closed == lhs(n);
  }));
  r.checks.push_back(per_n_check("Laurent expansion is regular with v^0 coefficient (n+1)/2", order,
                                 [&](int n, std::string& detail) {
                                   const LaurentSeries l = laplace_laurent(lhs(n), 2);
                                   detail = l.to_string();
                                   const Rat leading = ehrhart_tn_closed(n).coefficient(Var::u, n).constant_term();
                                   return l.min_degree() >= 0 && l.coefficient(0) == Rat(n + 1, 2) &&
                                          leading == Rat(n + 1, 2);
                                 }));
  finish(r);
  return r;
}

Report verify(Theorem theorem, int order) {
  switch (theorem) {
    case Theorem::zeta:
      return verify_zeta(order);
    case Theorem::m_triangle:
      return verify_m_triangle(order);
    case Theorem::ehrhart:
      return verify_ehrhart(order);
    case Theorem::laplace:
      return verify_laplace(order);
  }
  throw ValidationError("unknown theorem");
}

std::string format_report(const Report& report) {
  std::ostringstream os;
  os << "theorem " << theorem_name(report.theorem) << ", order " << report.order << ": "
     << (report.overall ? "PASS" : "FAIL") << '\n';
  for (const auto& e : report.per_order) {
    os << "  n=" << e.n << ' ' << (e.pass ? "pass" : "FAIL") << "  " << e.lhs << '\n';
    if (!e.pass) {
      os << "      rhs:  " << e.rhs << '\n';
      os << "      diff: " << e.diff << '\n';
    }
  }
  for (const auto& c : report.checks) {
    os << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name << " (" << c.detail << ")\n";
  }
  return os.str();
}

}  // namespace arborium
