#include <doctest.h>

#include <random>

#include "arborium/arbor.hpp"
#include "arborium/corpus.hpp"
#include "arborium/error.hpp"
#include "arborium/invariants.hpp"
#include "arborium/series.hpp"
#include "test_util.hpp"

using namespace arborium;
using namespace arborium::test;

namespace {

const char* const kEightLabels = "{1,2}({3}({6,7},{8}),{4,5})";

MultiPoly xy(int j, int k) { return X.pow(static_cast<unsigned>(j)) * Y.pow(static_cast<unsigned>(k)); }

// Random polynomial in E and V with every monomial divisible by V.
MultiPoly random_ev(std::mt19937_64& rng) {
  MultiPoly p;
  const int terms = 1 + static_cast<int>(draw_below(rng, 6));
  for (int i = 0; i < terms; ++i) {
    const auto a = static_cast<unsigned>(1 + draw_below(rng, 4));
    const auto b = static_cast<unsigned>(draw_below(rng, 6));
    const long c = static_cast<long>(draw_below(rng, 11)) - 5;
    p += C(c, 1 + static_cast<long>(draw_below(rng, 3))) * V.pow(a) * E.pow(b);
  }
  return p;
}

}  // namespace

TEST_CASE("zeta_poly") {
  CHECK(zeta_poly(make_tn(1)) == C(1) + (u - C(1)) * X);
  CHECK(zeta_poly(make_tn(2)).eval_at(Var::X, Rat(1)) == u * (C(3) * u - C(1)) * Rat(1, 2));
  CHECK(zeta_poly(make_tn(2)).evaluate({{Var::u, Rat(2)}, {Var::X, Rat(1)}}) == Rat(5));
  CHECK(zeta_poly(make_tn(2)).evaluate({{Var::u, Rat(3)}, {Var::X, Rat(1)}}) == Rat(12));
  CHECK(zeta_poly(parse_arbor("{1,2}")) ==
        C(2) * X.pow(2) * u.pow(2) - C(3) * X.pow(2) * u + X.pow(2) + C(2) * X * u - C(2) * X + C(1));

  // A single vertex of size r: coefficient of X^j is binom(r(u-1)+j-1, j).
  for (int r = 1; r <= 4; ++r) {
    std::string text = "{1";
    for (int i = 2; i <= r; ++i) text += "," + std::to_string(i);
    const MultiPoly z = zeta_poly(parse_arbor(text + "}"));
    CHECK(z.degree(Var::X) == r);
    for (int j = 0; j <= r; ++j) {
      CHECK(z.coefficient(Var::X, j) == binom_poly(C(r) * (u - C(1)) + C(j - 1), static_cast<unsigned>(j)));
    }
  }
}

TEST_CASE("zeta_tn_closed") {
  CHECK(zeta_tn_closed(1) == u);
  CHECK(zeta_tn_closed(2) == u * (C(3) * u - C(1)) * Rat(1, 2));
  CHECK(zeta_tn_closed(3).eval_at(Var::u, Rat(2)) == C(12));
  for (int n = 1; n <= 8; ++n) CHECK(zeta_tn_closed(n) == zeta_poly(make_tn(n)).eval_at(Var::X, Rat(1)));
  CHECK_THROWS_AS(zeta_tn_closed(0), ValidationError);
}

TEST_CASE("k_poly") {
  CHECK(k_poly(make_tn(1)) == C(1) + X * Y);
  CHECK(k_poly(make_tn(2)) == C(1) + C(2) * X * Y + xy(2, 2) + X * Y.pow(2));
  CHECK(k_poly(parse_arbor("{1,2}")) == xy(2, 2) + C(2) * xy(1, 2) + C(2) * xy(1, 1) + C(1));
  CHECK(k_poly(parse_arbor("{1}({2,3})")) == xy(3, 3) + C(4) * xy(2, 3) + C(3) * xy(2, 2) + xy(1, 3) +
                                                 C(3) * xy(1, 2) + C(3) * xy(1, 1) + C(1));

  // Single vertex of size r: sum_{j <= k} binom(r, j) binom(k-1, k-j) X^j Y^k.
  const Arbor single = parse_arbor("{1,2,3}");
  MultiPoly expected;
  for (int k = 0; k <= 3; ++k) {
    for (int j = 0; j <= k; ++j) {
      expected += Rat(int_binom(3, j) * int_binom(k - 1, k - j)) * xy(j, k);
    }
  }
  CHECK(k_poly(single) == expected);

  const MultiPoly eight =
      xy(8, 8) + C(21) * xy(7, 8) + C(8) * xy(7, 7) + C(136) * xy(6, 8) + C(81) * xy(6, 7) + C(28) * xy(6, 6) +
      C(353) * xy(5, 8) + C(263) * xy(5, 7) + C(161) * xy(5, 6) + C(56) * xy(5, 5) + C(388) * xy(4, 8) +
      C(333) * xy(4, 7) + C(273) * xy(4, 6) + C(184) * xy(4, 5) + C(70) * xy(4, 4) + C(178) * xy(3, 8) +
      C(165) * xy(3, 7) + C(159) * xy(3, 6) + C(152) * xy(3, 5) + C(123) * xy(3, 4) + C(56) * xy(3, 3) +
      C(33) * xy(2, 8) + C(32) * xy(2, 7) + C(33) * xy(2, 6) + C(34) * xy(2, 5) + C(40) * xy(2, 4) +
      C(45) * xy(2, 3) + C(28) * xy(2, 2) + C(2) * xy(1, 8) + C(2) * xy(1, 7) + C(2) * xy(1, 6) +
      C(2) * xy(1, 5) + C(3) * xy(1, 4) + C(3) * xy(1, 3) + C(7) * xy(1, 2) + C(8) * xy(1, 1) + C(1);
  CHECK(k_poly(parse_arbor(kEightLabels)) == eight);
}

TEST_CASE("k_tn_closed") {
  CHECK(k_tn_closed(1) == C(1) + X * Y);
  CHECK(k_tn_closed(2) == C(1) + C(2) * X * Y + xy(2, 2) + X * Y.pow(2));
  for (int n = 1; n <= 10; ++n) CHECK(k_tn_closed(n) == k_poly(make_tn(n)));
}

TEST_CASE("m_triangle") {
  CHECK(m_triangle(make_tn(1)) == C(1) - Y + X * Y);
  CHECK(m_triangle(make_tn(2)) ==
        C(2) * xy(2, 2) - C(3) * xy(1, 2) + C(2) * xy(1, 1) + Y.pow(2) - C(2) * Y + C(1));
  CHECK(m_triangle(make_tn(3)) == C(4) * xy(3, 3) - C(8) * xy(2, 3) + C(4) * xy(2, 2) + C(5) * xy(1, 3) -
                                      C(7) * xy(1, 2) + C(3) * xy(1, 1) - Y.pow(3) + C(3) * Y.pow(2) -
                                      C(3) * Y + C(1));
  CHECK(m_triangle(parse_arbor("{1}({2,3})")) == C(6) * xy(3, 3) - C(12) * xy(2, 3) + C(6) * xy(2, 2) +
                                                     C(7) * xy(1, 3) - C(9) * xy(1, 2) + C(3) * xy(1, 1) -
                                                     Y.pow(3) + C(3) * Y.pow(2) - C(3) * Y + C(1));
  CHECK(m_triangle(parse_arbor(kEightLabels)).eval_at(Var::X, Rat(1)) == C(1));
}

TEST_CASE("m_tn_closed") {
  CHECK(m_tn_closed(1) == C(1) + X * Y - Y);
  for (int n = 1; n <= 10; ++n) {
    CHECK(m_tn_closed(n) == m_triangle(make_tn(n)));
    CHECK(m_tn_closed(n).eval_at(Var::X, Rat(1)) == C(1));
  }
}

TEST_CASE("ehrhart") {
  CHECK(ehrhart(make_tn(1)) == C(1) + u);
  CHECK(ehrhart(make_tn(2)) == C(1) + C(5, 2) * u + C(3, 2) * u.pow(2));
  CHECK(ehrhart(parse_arbor("{1}({2,3})")) == C(10, 3) * u.pow(3) + C(7) * u.pow(2) + C(14, 3) * u + C(1));
  for (int n = 1; n <= 6; ++n) {
    CHECK(ehrhart(make_tn(n)) == ehrhart_tn_closed(n));
    for (int m = 0; m <= 4; ++m) {
      const Rat expected = Rat(m + 1).pow(n - 1) * (Rat(m * n, 2) + Rat(m, 2) + Rat(1));
      CHECK(ehrhart_tn_closed(n).evaluate({{Var::u, Rat(m)}}) == expected);
    }
  }
  const MultiPoly eight = ehrhart(parse_arbor(kEightLabels));
  CHECK(eight.degree(Var::u) == 8);
  CHECK(eight.constant_term() == Rat(1));
  CHECK(eight.evaluate({{Var::u, Rat(1)}}) == Rat(3464));
}

TEST_CASE("ehrhart closed and alternating forms") {
  CHECK(ehrhart_tn_closed(1) == u + C(1));
  CHECK(ehrhart_tn_alternating(1) == u + C(1));
  CHECK(ehrhart_tn_alternating(2) == C(1) + C(5, 2) * u + C(3, 2) * u.pow(2));
  for (int n = 1; n <= 10; ++n) CHECK(ehrhart_tn_alternating(n) == ehrhart_tn_closed(n));
}

TEST_CASE("truncate_Tn examples") {
  for (int n = 1; n <= 5; ++n) CHECK(truncate_Tn(V, n) == V - V * E.pow(static_cast<unsigned>(n)));
  CHECK(truncate_Tn(V.pow(2) * E.pow(3), 2).is_zero());
  CHECK(truncate_Tn(V.pow(2), 2) == V.pow(2) - (C(2) * V + V.pow(2)) * E.pow(2));
  CHECK(truncate_Tn(MultiPoly(), 3).is_zero());
  CHECK_THROWS_AS(truncate_Tn(C(1) + V, 2), AlgebraError);
  CHECK_THROWS_AS(truncate_Tn(u * V, 2), AlgebraError);
}

TEST_CASE("truncate_Tn is linear and idempotent") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const MultiPoly p = random_ev(rng);
    const MultiPoly q = random_ev(rng);
    const int n = 1 + static_cast<int>(draw_below(rng, 5));
    const MultiPoly tp = truncate_Tn(p, n);
    CHECK(truncate_Tn(tp, n) == tp);
    CHECK(truncate_Tn(p + C(3, 2) * q, n) == tp + C(3, 2) * truncate_Tn(q, n));
    CHECK(tp.degree(Var::E) <= n);
  }
}

TEST_CASE("laplace") {
  CHECK(laplace(make_tn(1)) == V - V * E);
  CHECK(laplace(make_tn(2)) == V.pow(2) * (C(1) - E) - V * E.pow(2));
  for (int n = 1; n <= 10; ++n) CHECK(laplace(make_tn(n)) == laplace_tn_closed(n));
  const MultiPoly eight = laplace(parse_arbor(kEightLabels));
  CHECK(eight.degree(Var::E) <= 8);
  CHECK(laplace_laurent(eight, 1).min_degree() >= 0);
}

TEST_CASE("volume") {
  CHECK(volume(make_tn(1)) == Rat(1));
  CHECK(volume(make_tn(2)) == Rat(3, 2));
  for (int n = 1; n <= 8; ++n) CHECK(volume(make_tn(n)) == Rat(n + 1, 2));
  const Arbor eight = parse_arbor(kEightLabels);
  CHECK(volume(eight) == ehrhart(eight).coefficient(Var::u, 8).constant_term());
}

TEST_CASE("invariants ignore child order") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    const Arbor t = random_arbor(rng, 1 + static_cast<int>(draw_below(rng, 6)));
    const Arbor r = with_reversed_children(t);
    CAPTURE(serialize_arbor(t));
    CHECK(zeta_poly(t) == zeta_poly(r));
    CHECK(k_poly(t) == k_poly(r));
    CHECK(m_triangle(t) == m_triangle(r));
    CHECK(ehrhart(t) == ehrhart(r));
    CHECK(laplace(t) == laplace(r));
  }
}

TEST_CASE("compute_invariants honours the selection") {
  InvariantSelection only_k;
  only_k.k = true;
  const InvariantBundle b = compute_invariants(make_tn(2), only_k);
  CHECK(b.k_poly.has_value());
  CHECK_FALSE(b.zeta.has_value());
  CHECK_FALSE(b.volume.has_value());

  const InvariantBundle all = compute_invariants(make_tn(3), InvariantSelection::all());
  REQUIRE(all.volume.has_value());
  CHECK(*all.volume == Rat(2));
  CHECK(*all.ehrhart == ehrhart_tn_closed(3));
}
