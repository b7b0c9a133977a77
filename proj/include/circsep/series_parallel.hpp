#pragma once

#include <vector>

#include "circsep/graph.hpp"
#include "circsep/separation.hpp"

namespace circsep {

enum class ReductionKind { Series, Parallel };

// One elimination: Series removes degree-2 vertex x between a and b and
// bridges them; Parallel merges a doubled a-b edge. a < b always.
struct ReductionStep {
    ReductionKind kind;
    Vertex x;
    Vertex a;
    Vertex b;
    bool operator==(const ReductionStep&) const = default;
};

struct ReductionTrace {
    std::vector<ReductionStep> steps;
    Vertex terminal_a = -1;
    Vertex terminal_b = -1;
};

// Eliminates until a single edge remains. Throws not_series_parallel when
// the process stalls first; the input must be connected.
ReductionTrace sp_reduce(const Graph& g);

// At most two circular orderings separating every disjoint edge pair,
// grown by replaying the reduction backwards from the terminal edge.
SeparationFamily sp_construct(const Graph& g);

} // namespace circsep
