#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "circsep/embedding.hpp"
#include "circsep/graph.hpp"
#include "circsep/ordering.hpp"

inline circsep::Graph k4_graph() {
    return circsep::Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

// K4 drawn with 3 inside the triangle 0,1,2.
inline circsep::TwoOuterEmbedding k4_embedding() {
    return circsep::make_embedding(k4_graph(), {0, 1, 2}, {{3}},
                                   {{1, 3, 2}, {2, 3, 0}, {0, 3, 1}, {2, 0, 1}});
}

inline circsep::Graph random_graph(int n, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    std::vector<circsep::Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return circsep::Graph(n, std::move(edges));
}

inline std::vector<circsep::Vertex> random_permutation(int n, std::uint64_t seed) {
    std::vector<circsep::Vertex> seq(n);
    std::iota(seq.begin(), seq.end(), 0);
    std::mt19937_64 rng(seed);
    std::shuffle(seq.begin(), seq.end(), rng);
    return seq;
}
