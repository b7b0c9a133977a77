#pragma once

#include <compare>
#include <vector>

#include "circsep/errors.hpp"

namespace circsep {

using Vertex = int;

// Undirected edge, stored with u < v.
struct Edge {
    Vertex u;
    Vertex v;

    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {
        if (a == b) throw input_error("edge endpoints must differ");
        if (a < 0 || b < 0) throw input_error("edge endpoints must be nonnegative");
    }

    bool touches(Vertex x) const { return u == x || v == x; }

    Vertex other(Vertex x) const {
        if (x == u) return v;
        if (x == v) return u;
        throw input_error("vertex not on edge");
    }

    bool disjoint_from(const Edge& o) const {
        return u != o.u && u != o.v && v != o.u && v != o.v;
    }

    auto operator<=>(const Edge&) const = default;
};

// Simple undirected graph on vertices 0..n-1.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    // Sorted ascending.
    const std::vector<Vertex>& neighbors(Vertex v) const;
    int degree(Vertex v) const;
    bool has_edge(Vertex a, Vertex b) const;
    bool connected() const;
    int component_count() const;

    // Component id per vertex, numbered by smallest contained vertex order.
    std::vector<int> components() const;

private:
    void check_vertex(Vertex v) const;

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adj_;
};

// Induced subgraph with dense relabeling; to_parent maps new ids back.
struct InducedSubgraph {
    Graph g;
    std::vector<Vertex> to_parent;
    std::vector<int> from_parent; // -1 where absent
};

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<Vertex>& verts);

} // namespace circsep
