#pragma once

#include <vector>

#include "circsep/graph.hpp"

namespace circsep {

// Linear sequence of distinct vertex labels. Positions are 0-based.
class LinearOrder {
public:
    LinearOrder() = default;
    explicit LinearOrder(std::vector<Vertex> seq);

    const std::vector<Vertex>& seq() const { return seq_; }
    int size() const { return static_cast<int>(seq_.size()); }
    bool contains(Vertex v) const;
    int position(Vertex v) const;
    Vertex at(int i) const { return seq_.at(i); }

    LinearOrder reversed() const;
    // Subsequence keeping only the given vertices, in current order.
    LinearOrder restricted(const std::vector<Vertex>& keep) const;

    bool operator==(const LinearOrder&) const = default;

private:
    std::vector<Vertex> seq_;
    std::vector<int> pos_; // by label, -1 absent
};

LinearOrder concat(const LinearOrder& a, const LinearOrder& b);

// Cyclic sequence of distinct vertex labels. Two orders are equal when one
// is a rotation of the other; reflections are distinct.
class CircularOrder {
public:
    CircularOrder() = default;
    explicit CircularOrder(std::vector<Vertex> seq);

    const std::vector<Vertex>& seq() const { return seq_; }
    int size() const { return static_cast<int>(seq_.size()); }
    bool contains(Vertex v) const;
    int position(Vertex v) const;

    CircularOrder reversed() const;
    CircularOrder restricted(const std::vector<Vertex>& keep) const;
    // Rotated so the smallest label comes first.
    CircularOrder canonical() const;

    bool operator==(const CircularOrder& o) const;

private:
    std::vector<Vertex> seq_;
    std::vector<int> pos_;
};

// True when edges e and f interleave around the circle: exactly one
// endpoint of f lies strictly inside the arc from e.u to e.v. Requires all
// four endpoints present and pairwise distinct.
bool alternates(const CircularOrder& o, const Edge& e, const Edge& f);

} // namespace circsep
