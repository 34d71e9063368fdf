#pragma once

#include <optional>

#include "arborium/arbor.hpp"
#include "arborium/poly.hpp"

namespace arborium {

/// Extended Zeta polynomial Z_t(u, X), computed bottom-up over the tree.
///
/// At a vertex whose sub-arbor has size n and root cardinality r, with W(u, X) the
/// product of the children's polynomials (1 for a leaf), the coefficient of X^j is
///   sum_{l = max(0, j-n+r)}^{j} binom(r(u-1)+l-1, l) * [X^{j-l}] W.
MultiPoly zeta_poly(const Arbor& t);

/// Z_{t_n}(u, 1) = sum_{k=0}^{n-1} binom(n-1, k) (u-1)^k binom(u+n-k-1, n-k).
MultiPoly zeta_tn_closed(int n);

/// K_t(X, Y) = sum over lattice points of X^{nz} Y^{ht}, computed bottom-up over the tree.
MultiPoly k_poly(const Arbor& t);

/// (1+XY)^n + XY^2 ((1+XY)^{n-1} - (Y(1+X))^{n-1}) / (1-Y).
MultiPoly k_tn_closed(int n);

/// M_t(X, Y) = K_t(1 - 1/X, XY). Throws AlgebraError if negative powers of X survive.
MultiPoly m_triangle(const Arbor& t);

/// A^n + (X^2Y^2 - XY^2)(A^{n-1} - B^{n-1}) / (1 - XY) with A = 1+XY-Y, B = 2XY-Y.
MultiPoly m_tn_closed(int n);

/// Ehrhart polynomial E_t(u), interpolated from lattice-point counts at u = 0..n
/// and checked against the count at u = n+1.
MultiPoly ehrhart(const Arbor& t);

/// (u+1)^{n-1} (u(n+1)/2 + 1).
MultiPoly ehrhart_tn_closed(int n);

/// sum_{j=0}^{n-1} (-1)^j binom(n-1, j) binom((n-j)(u+1), n).
MultiPoly ehrhart_tn_alternating(int n);

/// Truncation T_n on polynomials in E and V, linear extension of
///   T_n(V^{k+1} E^l) = 0                                                   if l >= n
///   T_n(V^{k+1} E^l) = V^{k+1} E^l - sum_{j=0}^{k} (n-l)^{k-j}/(k-j)! V^{j+1} E^n   otherwise.
/// Throws AlgebraError on a monomial without V or with any other variable.
MultiPoly truncate_Tn(const MultiPoly& p, int n);

/// L_t(E, V): T_n(prod_children L_child * T_n(V^r)) at every vertex, n and r read per sub-arbor.
MultiPoly laplace(const Arbor& t);

/// V^n (1-E)^{n-1} - V E^n.
MultiPoly laplace_tn_closed(int n);

/// Volume of Q_t: the v^0 coefficient of L_t after E = exp(-v), V = 1/v.
Rat volume(const Arbor& t);

struct InvariantBundle {
  Arbor arbor;
  std::optional<MultiPoly> zeta;
  std::optional<MultiPoly> k_poly;
  std::optional<MultiPoly> m_triangle;
  std::optional<MultiPoly> ehrhart;
  std::optional<MultiPoly> laplace;
  std::optional<Rat> volume;
};

struct InvariantSelection {
  bool zeta = false;
  bool k = false;
  bool m = false;
  bool ehrhart = false;
  bool laplace = false;
  bool volume = false;

  static InvariantSelection all() { return {true, true, true, true, true, true}; }
};

InvariantBundle compute_invariants(const Arbor& t, const InvariantSelection& which);

}  // namespace arborium
