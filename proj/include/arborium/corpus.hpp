#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "arborium/arbor.hpp"

namespace arborium {

/// Bumped whenever the generator below changes, so a seed names the same corpus forever.
inline constexpr int kCorpusVersion = 1;

/// Uniform draw in [0, bound) by rejection sampling on the raw 64-bit stream; unlike
/// std::uniform_int_distribution the result is identical across standard libraries.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound);

/// Random arbor of size n: a uniform number of vertices in 1..n, a random
/// composition of a shuffled [n] into label blocks, and a uniform random recursive tree.
Arbor random_arbor(std::mt19937_64& rng, int n);

/// `count` arbors with sizes cycling through 1..max_size.
std::vector<Arbor> random_corpus(std::uint64_t seed, int count, int max_size);

}  // namespace arborium
