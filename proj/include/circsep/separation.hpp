#pragma once

#include <vector>

#include "circsep/graph.hpp"
#include "circsep/ordering.hpp"

namespace circsep {

using SeparationFamily = std::vector<CircularOrder>;

struct Violation {
    Edge e;
    Edge f;
    bool operator==(const Violation&) const = default;
};

struct Verdict {
    bool ok = false;
    std::vector<Violation> violations; // pairs alternating in every ordering
};

// All vertex-disjoint edge pairs, each once, lexicographic by edge order.
std::vector<std::pair<Edge, Edge>> disjoint_edge_pairs(const Graph& g);

// A family separates g when every vertex-disjoint edge pair fails to
// alternate in at least one ordering. Every ordering must contain exactly
// the vertices of g.
Verdict verify_family(const Graph& g, const SeparationFamily& family);

} // namespace circsep
