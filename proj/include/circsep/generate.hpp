#pragma once

#include <cstdint>

#include "circsep/embedding.hpp"
#include "circsep/graph.hpp"

namespace circsep {

// Maximal outerplanar drawing on a shuffled vertex order; every vertex
// lies on the outer cycle and every bounded face is a triangle.
TwoOuterEmbedding gen_outerplanar(int n, std::uint64_t seed);

// Two-layer drawing whose inner shape depends on the seed: a single
// biconnected component, a cactus of blocks glued at cut vertices, or
// several components split off by outer chords.
TwoOuterEmbedding gen_two_outerplanar(int n, std::uint64_t seed);

// Series-parallel graph grown from a single edge by subdivisions and
// duplications, returned as its underlying simple graph.
Graph gen_series_parallel(int n, std::uint64_t seed);

} // namespace circsep
