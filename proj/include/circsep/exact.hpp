#pragma once

#include <cstdint>
#include <vector>

#include "circsep/separation.hpp"

namespace circsep {

// Indexes the vertex-disjoint edge pairs of a graph.
class PairIndex {
public:
    explicit PairIndex(const Graph& g) : pairs_(disjoint_edge_pairs(g)) {}
    int count() const { return static_cast<int>(pairs_.size()); }
    const std::vector<std::pair<Edge, Edge>>& pairs() const { return pairs_; }

private:
    std::vector<std::pair<Edge, Edge>> pairs_;
};

// Bit i set when pair i is separated (does not alternate).
using CoverageMask = std::vector<std::uint64_t>;

CoverageMask coverage_of(const CircularOrder& o, const PairIndex& idx);

// All circular orderings of 0..n-1 up to rotation, one representative per
// class with vertex 0 first; reflections are enumerated separately except
// that for n >= 3 the representative with seq[1] < seq[n-1] stands for the
// reflection pair (alternation is reflection-invariant).
std::vector<CircularOrder> enumerate_canonical_orderings(int n);

struct ExactOptions {
    int kmax = 3;
    int bound = 9; // largest vertex count accepted
};

struct ExactResult {
    bool determined = false; // false when every family of size <= kmax fails
    int k = -1;
    bool vacuous = false; // no vertex-disjoint edge pairs to separate
    SeparationFamily family;
};

// Smallest family size that separates g, by exhaustive search over
// canonical orderings.
ExactResult exact_pi_circ(const Graph& g, const ExactOptions& opt = {});

// Outerplanarity test for small graphs: a graph is outerplanar exactly
// when one circular ordering separates it.
bool is_outerplanar_small(const Graph& g, int bound = 9);

} // namespace circsep
