#include "arborium/crosscheck.hpp"

#include <algorithm>

#include "arborium/invariants.hpp"
#include "arborium/oracle.hpp"
#include "arborium/series.hpp"

namespace arborium {

namespace {

void add(CrossCheckResult& r, std::string name, const MultiPoly& recursion, const MultiPoly& oracle) {
  r.items.push_back({std::move(name), recursion == oracle, recursion.to_string(), oracle.to_string()});
}

void add(CrossCheckResult& r, std::string name, const Rat& recursion, const Rat& oracle) {
  r.items.push_back({std::move(name), recursion == oracle, recursion.to_string(), oracle.to_string()});
}

}  // namespace

CrossCheckResult cross_check(const Arbor& t, const CrossCheckOptions& options) {
  CrossCheckResult r;
  r.arbor = serialize_arbor(t);
  const int n = t.size();
  const oracle::Poset poset = oracle::build_poset(t);
  const Rat poset_size(static_cast<long>(poset.size()));

  MultiPoly zeta = zeta_poly(t);
  if (options.inject_fault) zeta += MultiPoly(1);
  const MultiPoly k = k_poly(t);
  const MultiPoly m = m_triangle(t);
  const MultiPoly e = ehrhart(t);
  const MultiPoly l = laplace(t);

  add(r, "zeta", zeta, oracle::zeta_oracle(t, poset));
  add(r, "k", k, oracle::k_oracle(t));
  add(r, "m", m, oracle::m_triangle_oracle(poset));

  // Counts packed as sum_u count(u) X^u so a mismatch shows every dilation at once.
  const MultiPoly x = MultiPoly::variable(Var::X);
  const auto counts = [&](int upto, auto&& count) {
    MultiPoly out;
    for (int u = 0; u <= upto; ++u) out += Rat(count(u)) * x.pow(static_cast<unsigned>(u));
    return out;
  };
  const auto by_formula = [&](int u) { return e.evaluate({{Var::u, Rat(u)}}); };
  const auto as_rat = [](std::uint64_t c) { return Rat(BigInt(static_cast<unsigned long>(c))); };
  const int enumerated = n <= options.full_enumeration_size ? n + 2 : options.max_dilation;
  add(r, "ehrhart vs enumerated counts, u = 0.." + std::to_string(enumerated), counts(enumerated, by_formula),
      counts(enumerated, [&](int u) { return as_rat(oracle::count_points_by_enumeration(t, u)); }));
  add(r, "ehrhart vs convolution counts, u = 0.." + std::to_string(n + 2), counts(n + 2, by_formula),
      counts(n + 2, [&](int u) { return as_rat(oracle::count_points(t, u)); }));
  add(r, "ehrhart degree n, constant term 1",
      Rat(e.degree(Var::u)) * MultiPoly::variable(Var::u) + MultiPoly(e.constant_term()),
      Rat(n) * MultiPoly::variable(Var::u) + MultiPoly(1));
  add(r, "volume equals Ehrhart leading coefficient", volume(t), e.coefficient(Var::u, n).constant_term());

  add(r, "Z_t(2,1) = |P_t|", zeta.evaluate({{Var::u, Rat(2)}, {Var::X, Rat(1)}}), poset_size);
  add(r, "K_t(1,1) = |P_t|", k.evaluate({{Var::X, Rat(1)}, {Var::Y, Rat(1)}}), poset_size);
  add(r, "E_t(1) = |P_t|", e.evaluate({{Var::u, Rat(1)}}), poset_size);
  add(r, "M_t(1,Y) = 1", m.eval_at(Var::X, Rat(1)), MultiPoly(1));
  add(r, "K_t(0,Y) = 1", k.eval_at(Var::X, Rat(0)), MultiPoly(1));
  add(r, "Z_t(u,0) = 1", zeta.eval_at(Var::X, Rat(0)), MultiPoly(1));

  const LaurentSeries laurent = laplace_laurent(l, 0);
  add(r, "laplace: E-degree <= n and no pole at v = 0",
      Rat(static_cast<long>(l.degree(Var::E) <= n && laurent.min_degree() >= 0)), Rat(1));

  const Arbor reversed = with_reversed_children(t);
  add(r, "child order: zeta", zeta_poly(reversed) + (options.inject_fault ? MultiPoly(1) : MultiPoly(0)), zeta);
  add(r, "child order: k", k_poly(reversed), k);
  add(r, "child order: laplace", laplace(reversed), l);

  r.pass = std::all_of(r.items.begin(), r.items.end(), [](const CrossCheckItem& i) { return i.pass; });
  return r;
}

}  // namespace arborium
