#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "arborium/arbor.hpp"
#include "arborium/poly.hpp"

namespace arborium::oracle {

/// Integer point of a dilate of the arbor polytope. coords[i] is x_{i+1}.
struct LatticePoint {
  std::vector<int> coords;

  int height() const;
  /// Number of non-zero coordinates.
  int nonzero_count() const;
  bool operator<=(const LatticePoint& other) const;  // coordinatewise
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

/// Visits every integer point of u*Q_t in lexicographic order.
void for_each_point(const Arbor& t, int u, const std::function<void(std::span<const int>)>& visit);

/// Integer points of u*Q_t in lexicographic order.
std::vector<LatticePoint> enumerate_points(const Arbor& t, int u);

/// |u*Q_t ∩ Z^n| by visiting every point.
std::uint64_t count_points_by_enumeration(const Arbor& t, int u);

/// |u*Q_t ∩ Z^n| by convolving, bottom-up, the distributions of subtree coordinate sums.
/// Exact and fast enough for the large dilates interpolation needs; the enumeration
/// above stays the reference it is tested against.
std::uint64_t count_points(const Arbor& t, int u);

/// P_t with coordinatewise order. Elements are in lexicographic order, which is a
/// linear extension; `below[b]` lists every a <= b (b included) in ascending index order.
class Poset {
 public:
  explicit Poset(std::vector<LatticePoint> elements);

  std::size_t size() const { return elements_.size(); }
  const LatticePoint& element(std::size_t i) const { return elements_[i]; }
  const std::vector<LatticePoint>& elements() const { return elements_; }
  int height(std::size_t i) const { return heights_[i]; }
  const std::vector<std::size_t>& below(std::size_t b) const { return below_[b]; }
  bool leq(std::size_t a, std::size_t b) const;
  std::size_t comparable_pairs() const;

  std::vector<std::size_t> minimal_elements() const;
  std::vector<std::size_t> maximal_elements() const;

 private:
  std::vector<LatticePoint> elements_;
  std::vector<int> heights_;
  std::vector<std::vector<std::size_t>> below_;
};

Poset build_poset(const Arbor& t);

/// Möbius numbers mu(a, b) for every pair a <= b.
class MobiusTable {
 public:
  struct Entry {
    std::size_t b;
    std::int64_t mu;
  };

  explicit MobiusTable(std::vector<std::vector<Entry>> rows) : rows_(std::move(rows)) {}

  /// Pairs (b, mu(a, b)) for all b >= a, ascending in b; the first entry is (a, 1).
  const std::vector<Entry>& row(std::size_t a) const { return rows_[a]; }
  std::size_t size() const { return rows_.size(); }
  /// mu(a, b); throws std::out_of_range when a and b are not comparable.
  std::int64_t at(std::size_t a, std::size_t b) const;

 private:
  std::vector<std::vector<Entry>> rows_;
};

/// mu(a,a) = 1, mu(a,b) = -sum_{a <= e < b} mu(a,e).
MobiusTable mobius_oracle(const Poset& p);

/// sum_{a <= b} mu(a,b) X^{ht a} Y^{ht b}.
MultiPoly m_triangle_oracle(const Poset& p, const MobiusTable& mu);
MultiPoly m_triangle_oracle(const Poset& p);

/// Z_t(m, X) = sum over multichains e_1 <= ... <= e_{m-1} of X^{ht(e_{m-1})}, for one integer m >= 2.
MultiPoly multichain_sum(const Poset& p, int m);

/// Z_t(u, X) recovered by interpolating multichain sums at u = 2..n+3 with degree bound n.
MultiPoly zeta_oracle(const Arbor& t);
MultiPoly zeta_oracle(const Arbor& t, const Poset& p);

/// sum_{a in P_t} X^{nz(a)} Y^{ht(a)}.
MultiPoly k_oracle(const Arbor& t);

/// Points of m*Q_t weighted by X^height.
MultiPoly height_distribution_oracle(const Arbor& t, int m);

}  // namespace arborium::oracle
