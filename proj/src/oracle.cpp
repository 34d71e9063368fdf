#include "arborium/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "arborium/error.hpp"
#include "arborium/series.hpp"

namespace arborium::oracle {

namespace {

MultiPoly monomial_xy(const BigInt& c, int x_power, int y_power) {
  Exponents e{};
  e[static_cast<std::size_t>(Var::X)] = x_power;
  e[static_cast<std::size_t>(Var::Y)] = y_power;
  return MultiPoly::monomial(Rat(c), e);
}

// Depth-first over coordinates 1..n. The constraints containing x_i are exactly those
// of the vertex owning label i and its ancestors (the family is laminar), so each
// coordinate is bounded by the smallest remaining budget along that chain.
class PointWalker {
 public:
  PointWalker(const Arbor& t, int u, const std::function<void(std::span<const int>)>& visit)
      : t_(t), visit_(visit), coords_(static_cast<std::size_t>(t.size()), 0) {
    budget_.resize(t.vertex_count());
    for (VertexId id = 0; id < t.vertex_count(); ++id) budget_[id] = u * t.subtree_size(id);
    chains_.resize(static_cast<std::size_t>(t.size()));
    for (Label l = 1; l <= t.size(); ++l) {
      auto& chain = chains_[static_cast<std::size_t>(l - 1)];
      VertexId v = t.vertex_of(l);
      chain.push_back(v);
      while (v != t.root()) {
        v = t.parent(v);
        chain.push_back(v);
      }
    }
  }

  void run() { descend(0); }

 private:
  void descend(std::size_t i) {
    if (i == coords_.size()) {
      visit_(coords_);
      return;
    }
    const auto& chain = chains_[i];
    int cap = budget_[chain.front()];
    for (const VertexId v : chain) cap = std::min(cap, budget_[v]);
    for (int x = 0; x <= cap; ++x) {
      coords_[i] = x;
      descend(i + 1);
      for (const VertexId v : chain) --budget_[v];
    }
    for (const VertexId v : chain) budget_[v] += cap + 1;
    coords_[i] = 0;
  }

  const Arbor& t_;
  const std::function<void(std::span<const int>)>& visit_;
  std::vector<int> coords_;
  std::vector<int> budget_;
  std::vector<std::vector<VertexId>> chains_;
};

}  // namespace

int LatticePoint::height() const { return std::accumulate(coords.begin(), coords.end(), 0); }

int LatticePoint::nonzero_count() const {
  return static_cast<int>(std::count_if(coords.begin(), coords.end(), [](int x) { return x != 0; }));
}

bool LatticePoint::operator<=(const LatticePoint& other) const {
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] > other.coords[i]) return false;
  }
  return true;
}

void for_each_point(const Arbor& t, int u, const std::function<void(std::span<const int>)>& visit) {
  if (u < 0) throw ValidationError("dilation factor must be non-negative");
  PointWalker(t, u, visit).run();
}

std::vector<LatticePoint> enumerate_points(const Arbor& t, int u) {
  std::vector<LatticePoint> out;
  for_each_point(t, u, [&](std::span<const int> x) { out.push_back({{x.begin(), x.end()}}); });
  return out;
}

std::uint64_t count_points_by_enumeration(const Arbor& t, int u) {
  std::uint64_t n = 0;
  for_each_point(t, u, [&](std::span<const int>) { ++n; });
  return n;
}

std::uint64_t count_points(const Arbor& t, int u) {
  if (u < 0) throw ValidationError("dilation must be non-negative");
  // dist[v][h]: points of the sub-arbor at v (its own constraints only) with coordinate sum h.
  std::vector<std::vector<BigInt>> dist(t.vertex_count());
  for (const VertexId v : t.post_order()) {
    const int cap = u * t.subtree_size(v);
    const long r = static_cast<long>(t.labels(v).size());
    // r free coordinates summing to h: binom(h + r - 1, r - 1) ways.
    std::vector<BigInt> acc(static_cast<std::size_t>(cap) + 1);
    for (int h = 0; h <= cap; ++h) acc[static_cast<std::size_t>(h)] = int_binom(h + r - 1, r - 1);
    for (const VertexId c : t.children(v)) {
      std::vector<BigInt> next(acc.size());
      for (std::size_t i = 0; i < acc.size(); ++i) {
        if (acc[i] == 0) continue;
        for (std::size_t j = 0; j < dist[c].size() && i + j < next.size(); ++j) next[i + j] += acc[i] * dist[c][j];
      }
      acc = std::move(next);
      dist[c].clear();
    }
    dist[v] = std::move(acc);
  }
  BigInt total = 0;
  for (const BigInt& x : dist[t.root()]) total += x;
  if (!total.fits_ulong_p()) throw AlgebraError("lattice-point count exceeds 64 bits");
  return total.get_ui();
}

Poset::Poset(std::vector<LatticePoint> elements) : elements_(std::move(elements)) {
  heights_.reserve(elements_.size());
  for (const auto& e : elements_) heights_.push_back(e.height());
  below_.resize(elements_.size());
  for (std::size_t b = 0; b < elements_.size(); ++b) {
    for (std::size_t a = 0; a < elements_.size(); ++a) {
      if (elements_[a] <= elements_[b]) below_[b].push_back(a);
    }
  }
}

bool Poset::leq(std::size_t a, std::size_t b) const { return elements_[a] <= elements_[b]; }

std::size_t Poset::comparable_pairs() const {
  std::size_t total = 0;
  for (const auto& list : below_) total += list.size();
  return total;
}

std::vector<std::size_t> Poset::minimal_elements() const {
  std::vector<std::size_t> out;
  for (std::size_t b = 0; b < size(); ++b) {
    if (below_[b].size() == 1) out.push_back(b);
  }
  return out;
}

std::vector<std::size_t> Poset::maximal_elements() const {
  std::vector<bool> dominated(size(), false);
  for (std::size_t b = 0; b < size(); ++b) {
    for (const std::size_t a : below_[b]) {
      if (a != b) dominated[a] = true;
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i) {
    if (!dominated[i]) out.push_back(i);
  }
  return out;
}

Poset build_poset(const Arbor& t) { return Poset(enumerate_points(t, 1)); }

std::int64_t MobiusTable::at(std::size_t a, std::size_t b) const {
  const auto& r = rows_.at(a);
  const auto it = std::lower_bound(r.begin(), r.end(), b, [](const Entry& e, std::size_t key) { return e.b < key; });
  if (it == r.end() || it->b != b) throw std::out_of_range("mobius: elements are not comparable");
  return it->mu;
}

MobiusTable mobius_oracle(const Poset& p) {
  const std::size_t n = p.size();
  std::vector<std::vector<MobiusTable::Entry>> rows(n);
  std::vector<std::int64_t> mu(n, 0);
  std::vector<char> above(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    // Indices are a linear extension, so every e in [a, b) is settled before b.
    for (std::size_t b = a; b < n; ++b) {
      if (!p.leq(a, b)) continue;
      std::int64_t value = 0;
      if (b == a) {
        value = 1;
      } else {
        std::int64_t sum = 0;
        for (const std::size_t e : p.below(b)) {
          if (e == b || !above[e]) continue;
          if (__builtin_add_overflow(sum, mu[e], &sum)) throw AlgebraError("mobius: int64 overflow");
        }
        value = -sum;
      }
      mu[b] = value;
      above[b] = 1;
      rows[a].push_back({b, value});
    }
    for (const auto& entry : rows[a]) {
      above[entry.b] = 0;
      mu[entry.b] = 0;
    }
  }
  return MobiusTable(std::move(rows));
}

MultiPoly m_triangle_oracle(const Poset& p, const MobiusTable& mu) {
  std::map<std::pair<int, int>, BigInt> sums;
  for (std::size_t a = 0; a < p.size(); ++a) {
    for (const auto& [b, value] : mu.row(a)) {
      if (value != 0) sums[{p.height(a), p.height(b)}] += static_cast<long>(value);
    }
  }
  MultiPoly out;
  for (const auto& [hh, c] : sums) out += monomial_xy(c, hh.first, hh.second);
  return out;
}

MultiPoly m_triangle_oracle(const Poset& p) { return m_triangle_oracle(p, mobius_oracle(p)); }

MultiPoly multichain_sum(const Poset& p, int m) {
  if (m < 2) throw ValidationError("multichain_sum requires m >= 2");
  // f(b) = number of multichains e_1 <= ... <= e_k = b; one zeta-matrix application per step.
  std::vector<BigInt> f(p.size(), BigInt(1));
  for (int k = 1; k < m - 1; ++k) {
    std::vector<BigInt> next(p.size());
    for (std::size_t b = 0; b < p.size(); ++b) {
      for (const std::size_t a : p.below(b)) next[b] += f[a];
    }
    f = std::move(next);
  }
  std::map<int, BigInt> by_height;
  for (std::size_t b = 0; b < p.size(); ++b) by_height[p.height(b)] += f[b];
  MultiPoly out;
  for (const auto& [h, c] : by_height) out += monomial_xy(c, h, 0);
  return out;
}

MultiPoly zeta_oracle(const Arbor& t) { return zeta_oracle(t, build_poset(t)); }

MultiPoly zeta_oracle(const Arbor& t, const Poset& p) {
  const int n = t.size();
  std::vector<MultiPoly> samples;
  for (int m = 2; m <= n + 3; ++m) samples.push_back(multichain_sum(p, m));

  MultiPoly out;
  const MultiPoly x = MultiPoly::variable(Var::X);
  for (int j = 0; j <= n; ++j) {
    std::vector<std::pair<Rat, Rat>> points;
    for (int m = 2; m <= n + 3; ++m) {
      const MultiPoly& z = samples[static_cast<std::size_t>(m - 2)];
      points.emplace_back(Rat(m), z.coefficient(Var::X, j).constant_term());
    }
    out += lagrange_interpolate(points, Var::u, n) * x.pow(static_cast<unsigned>(j));
  }
  return out;
}

MultiPoly k_oracle(const Arbor& t) {
  std::map<std::pair<int, int>, BigInt> sums;
  for_each_point(t, 1, [&](std::span<const int> x) {
    int nz = 0;
    int ht = 0;
    for (const int c : x) {
      nz += c != 0 ? 1 : 0;
      ht += c;
    }
    sums[{nz, ht}] += 1;
  });
  MultiPoly out;
  for (const auto& [key, c] : sums) out += monomial_xy(c, key.first, key.second);
  return out;
}

MultiPoly height_distribution_oracle(const Arbor& t, int m) {
  if (m < 1) throw ValidationError("height distribution requires m >= 1");
  std::map<int, BigInt> sums;
  for_each_point(t, m, [&](std::span<const int> x) { sums[std::accumulate(x.begin(), x.end(), 0)] += 1; });
  MultiPoly out;
  for (const auto& [h, c] : sums) out += monomial_xy(c, h, 0);
  return out;
}

}  // namespace arborium::oracle
