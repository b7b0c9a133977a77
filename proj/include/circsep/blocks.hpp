#pragma once

#include <vector>

#include "circsep/graph.hpp"

namespace circsep {

// Biconnected components of one connected component, ordered by the first
// boundary-walk edge that touches each block. blocks[k] lists the block's
// vertices; parent_cut[k] is the single vertex block k shares with the
// union of earlier blocks (-1 for the first). An isolated vertex yields
// one vertex-only block.
struct BlockDecomposition {
    std::vector<std::vector<Vertex>> blocks;
    std::vector<std::vector<Edge>> block_edges;
    std::vector<Vertex> cut_vertices;
    std::vector<int> parent_cut;
};

// g may contain unrelated vertices; only the component reachable from the
// walk is decomposed. The walk is the component's closed boundary walk.
BlockDecomposition blocks(const Graph& g, const std::vector<Vertex>& boundary_walk);

} // namespace circsep
