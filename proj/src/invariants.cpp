#include "arborium/invariants.hpp"

#include <algorithm>
#include <vector>

#include "arborium/error.hpp"
#include "arborium/oracle.hpp"
#include "arborium/series.hpp"

namespace arborium {

namespace {

MultiPoly var_u() { return MultiPoly::variable(Var::u); }
MultiPoly var_x() { return MultiPoly::variable(Var::X); }
MultiPoly var_y() { return MultiPoly::variable(Var::Y); }
MultiPoly var_e() { return MultiPoly::variable(Var::E); }
MultiPoly var_v() { return MultiPoly::variable(Var::V); }

MultiPoly ev_monomial(const Rat& c, int v_power, int e_power) {
  Exponents e{};
  e[static_cast<std::size_t>(Var::V)] = v_power;
  e[static_cast<std::size_t>(Var::E)] = e_power;
  return MultiPoly::monomial(c, e);
}

MultiPoly xy_monomial(const Rat& c, int x_power, int y_power) {
  Exponents e{};
  e[static_cast<std::size_t>(Var::X)] = x_power;
  e[static_cast<std::size_t>(Var::Y)] = y_power;
  return MultiPoly::monomial(c, e);
}

Rat xy_coefficient(const MultiPoly& p, int x_power, int y_power) {
  Exponents e{};
  e[static_cast<std::size_t>(Var::X)] = x_power;
  e[static_cast<std::size_t>(Var::Y)] = y_power;
  return p.coefficient(e);
}

// Evaluates `step(vertex, product of children's values)` in post-order.
template <typename Step>
MultiPoly bottom_up(const Arbor& t, Step step) {
  std::vector<MultiPoly> value(t.vertex_count());
  for (const VertexId v : t.post_order()) {
    MultiPoly w(1);
    for (const VertexId c : t.children(v)) w *= value[c];
    value[v] = step(v, w);
  }
  return value[t.root()];
}

}  // namespace

MultiPoly zeta_poly(const Arbor& t) {
  return bottom_up(t, [&](VertexId v, const MultiPoly& w) {
    const int n = t.subtree_size(v);
    const int r = static_cast<int>(t.labels(v).size());
    MultiPoly result;
    for (int j = 0; j <= n; ++j) {
      MultiPoly coeff;
      for (int l = std::max(0, j - n + r); l <= j; ++l) {
        const MultiPoly w_part = w.coefficient(Var::X, j - l);
        if (w_part.is_zero()) continue;
        const MultiPoly upper = MultiPoly(r) * (var_u() - MultiPoly(1)) + MultiPoly(l - 1);
        coeff += binom_poly(upper, static_cast<unsigned>(l)) * w_part;
      }
      result += coeff * var_x().pow(static_cast<unsigned>(j));
    }
    return result;
  });
}

MultiPoly zeta_tn_closed(int n) {
  if (n < 1) throw ValidationError("zeta_tn_closed requires n >= 1");
  MultiPoly out;
  const MultiPoly u_minus_1 = var_u() - MultiPoly(1);
  for (int k = 0; k <= n - 1; ++k) {
    out += MultiPoly(Rat(int_binom(n - 1, k))) * u_minus_1.pow(static_cast<unsigned>(k)) *
           binom_poly(var_u() + MultiPoly(n - k - 1), static_cast<unsigned>(n - k));
  }
  return out;
}

MultiPoly k_poly(const Arbor& t) {
  return bottom_up(t, [&](VertexId v, const MultiPoly& w) {
    const int n = t.subtree_size(v);
    const int r = static_cast<int>(t.labels(v).size());
    MultiPoly result;
    for (int k = 0; k <= n; ++k) {
      for (int j = 0; j <= k; ++j) {
        BigInt coeff = 0;
        for (int l = std::max(0, j - n + r); l <= std::min(j, r); ++l) {
          const BigInt root_choices = int_binom(r, l);
          for (int m = std::max(l, k - n + r); m <= k + l - j; ++m) {
            const Rat w_part = xy_coefficient(w, j - l, k - m);
            if (w_part.is_zero()) continue;
            // W has integer coefficients: it counts lattice points of the children.
            coeff += root_choices * int_binom(m - 1, m - l) * w_part.numerator();
          }
        }
        if (coeff != 0) result += xy_monomial(Rat(coeff), j, k);
      }
    }
    return result;
  });
}

MultiPoly k_tn_closed(int n) {
  if (n < 1) throw ValidationError("k_tn_closed requires n >= 1");
  const MultiPoly xy = var_x() * var_y();
  const MultiPoly one_plus_xy = MultiPoly(1) + xy;
  const auto e = static_cast<unsigned>(n - 1);
  const MultiPoly bracket =
      var_x() * var_y().pow(2) * (one_plus_xy.pow(e) - (var_y() * (MultiPoly(1) + var_x())).pow(e));
  return one_plus_xy.pow(static_cast<unsigned>(n)) + bracket.exact_div(MultiPoly(1) - var_y());
}

MultiPoly m_triangle(const Arbor& t) {
  const MultiPoly k = k_poly(t);
  std::map<Var, LaurentImage> images;
  Exponents inv_x{};
  inv_x[static_cast<std::size_t>(Var::X)] = -1;
  Exponents times_x{};
  times_x[static_cast<std::size_t>(Var::X)] = 1;
  images[Var::X] = {var_x() - MultiPoly(1), inv_x};  // 1 - 1/X = (X - 1) X^{-1}
  images[Var::Y] = {var_y(), times_x};               // XY
  return substitute_laurent(k, images);
}

MultiPoly m_tn_closed(int n) {
  if (n < 1) throw ValidationError("m_tn_closed requires n >= 1");
  const MultiPoly xy = var_x() * var_y();
  const MultiPoly a = MultiPoly(1) + xy - var_y();
  const MultiPoly b = MultiPoly(2) * xy - var_y();
  const MultiPoly c_num = xy.pow(2) - var_x() * var_y().pow(2);
  const auto e = static_cast<unsigned>(n - 1);
  return a.pow(static_cast<unsigned>(n)) + (c_num * (a.pow(e) - b.pow(e))).exact_div(MultiPoly(1) - xy);
}

MultiPoly ehrhart(const Arbor& t) {
  const int n = t.size();
  std::vector<std::pair<Rat, Rat>> samples;
  for (int u = 0; u <= n + 1; ++u) {
    samples.emplace_back(Rat(u), Rat(BigInt(static_cast<unsigned long>(oracle::count_points(t, u)))));
  }
  return lagrange_interpolate(samples, Var::u, n);
}

MultiPoly ehrhart_tn_closed(int n) {
  if (n < 1) throw ValidationError("ehrhart_tn_closed requires n >= 1");
  const MultiPoly linear = var_u() * Rat(n + 1, 2) + MultiPoly(1);
  return (var_u() + MultiPoly(1)).pow(static_cast<unsigned>(n - 1)) * linear;
}

MultiPoly ehrhart_tn_alternating(int n) {
  if (n < 1) throw ValidationError("ehrhart_tn_alternating requires n >= 1");
  MultiPoly out;
  const MultiPoly u_plus_1 = var_u() + MultiPoly(1);
  for (int j = 0; j <= n - 1; ++j) {
    const MultiPoly term = MultiPoly(Rat(int_binom(n - 1, j))) *
                           binom_poly(MultiPoly(n - j) * u_plus_1, static_cast<unsigned>(n));
    if (j % 2 == 0) {
      out += term;
    } else {
      out -= term;
    }
  }
  return out;
}

MultiPoly truncate_Tn(const MultiPoly& p, int n) {
  MultiPoly out;
  for (const auto& [e, c] : p.terms()) {
    for (std::size_t i = 0; i < kNumVars; ++i) {
      const auto x = static_cast<Var>(i);
      if (e[i] != 0 && x != Var::V && x != Var::E) {
        throw AlgebraError("truncate_Tn expects a polynomial in E and V, got " + p.to_string());
      }
    }
    const int v_power = e[static_cast<std::size_t>(Var::V)];
    const int l = e[static_cast<std::size_t>(Var::E)];
    if (v_power < 1) throw AlgebraError("truncate_Tn: monomial without V in " + p.to_string());
    if (l >= n) continue;
    const int k = v_power - 1;
    out += ev_monomial(c, v_power, l);
    for (int j = 0; j <= k; ++j) {
      const Rat weight = Rat(n - l).pow(k - j) / Rat(factorial(static_cast<unsigned>(k - j)));
      out -= ev_monomial(c * weight, j + 1, n);
    }
  }
  return out;
}

MultiPoly laplace(const Arbor& t) {
  return bottom_up(t, [&](VertexId v, const MultiPoly& children) {
    const int n = t.subtree_size(v);
    const int r = static_cast<int>(t.labels(v).size());
    return truncate_Tn(children * truncate_Tn(var_v().pow(static_cast<unsigned>(r)), n), n);
  });
}

MultiPoly laplace_tn_closed(int n) {
  if (n < 1) throw ValidationError("laplace_tn_closed requires n >= 1");
  return var_v().pow(static_cast<unsigned>(n)) * (MultiPoly(1) - var_e()).pow(static_cast<unsigned>(n - 1)) -
         var_v() * var_e().pow(static_cast<unsigned>(n));
}

Rat volume(const Arbor& t) {
  const LaurentSeries series = laplace_laurent(laplace(t), 0);
  if (series.min_degree() < 0) {
    throw AlgebraError("volume: Laplace transform has a pole at v = 0: " + series.to_string());
  }
  return series.coefficient(0);
}

InvariantBundle compute_invariants(const Arbor& t, const InvariantSelection& which) {
  InvariantBundle b{t, {}, {}, {}, {}, {}, {}};
  if (which.zeta) b.zeta = zeta_poly(t);
  if (which.k) b.k_poly = k_poly(t);
  if (which.m) b.m_triangle = m_triangle(t);
  if (which.ehrhart) b.ehrhart = ehrhart(t);
  if (which.laplace) b.laplace = laplace(t);
  if (which.volume) b.volume = volume(t);
  return b;
}

}  // namespace arborium
