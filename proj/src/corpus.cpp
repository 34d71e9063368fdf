#include "arborium/corpus.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "arborium/error.hpp"

namespace arborium {

std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw ValidationError("draw_below: empty range");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % bound;
}

Arbor random_arbor(std::mt19937_64& rng, int n) {
  if (n < 1) throw ValidationError("random_arbor requires n >= 1");
  const auto un = static_cast<std::uint64_t>(n);
  const auto vertex_count = static_cast<std::size_t>(1 + draw_below(rng, un));

  std::vector<Label> labels(static_cast<std::size_t>(n));
  std::iota(labels.begin(), labels.end(), 1);
  for (std::size_t i = labels.size(); i > 1; --i) std::swap(labels[i - 1], labels[draw_below(rng, i)]);

  // vertex_count - 1 distinct cut points in 1..n-1.
  std::vector<std::size_t> cuts(static_cast<std::size_t>(n - 1));
  std::iota(cuts.begin(), cuts.end(), 1);
  for (std::size_t i = 0; i + 1 < vertex_count; ++i) {
    std::swap(cuts[i], cuts[i + draw_below(rng, cuts.size() - i)]);
  }
  cuts.resize(vertex_count - 1);
  std::sort(cuts.begin(), cuts.end());
  cuts.push_back(static_cast<std::size_t>(n));

  std::vector<Arbor::Vertex> vertices(vertex_count);
  std::size_t start = 0;
  for (std::size_t v = 0; v < vertex_count; ++v) {
    vertices[v].labels.assign(labels.begin() + static_cast<std::ptrdiff_t>(start),
                              labels.begin() + static_cast<std::ptrdiff_t>(cuts[v]));
    start = cuts[v];
  }
  for (std::size_t v = 1; v < vertex_count; ++v) vertices[draw_below(rng, v)].children.push_back(v);
  return Arbor(std::move(vertices), 0);
}

std::vector<Arbor> random_corpus(std::uint64_t seed, int count, int max_size) {
  if (max_size < 1) throw ValidationError("random_corpus requires max_size >= 1");
  std::mt19937_64 rng(seed);
  std::vector<Arbor> out;
  out.reserve(static_cast<std::size_t>(std::max(count, 0)));
  for (int i = 0; i < count; ++i) out.push_back(random_arbor(rng, 1 + i % max_size));
  return out;
}

}  // namespace arborium
