#pragma once

#include <vector>

#include "circsep/graph.hpp"
#include "circsep/ordering.hpp"

namespace circsep {

// Combinatorial embedding of a two-layer planar graph. The outer cycle
// lists the boundary of the unbounded face counter-clockwise (it may be a
// closed walk with repeated vertices until the outer layer is made
// biconnected). Each inner component stores the clockwise closed walk of
// its own outer boundary. rotation[v] lists v's neighbors counter-clockwise.
struct TwoOuterEmbedding {
    Graph g;
    std::vector<Vertex> outer_cycle;
    std::vector<std::vector<Vertex>> inner_walks;
    std::vector<std::vector<Vertex>> rotation;
    std::vector<int> layer; // 1 inner, 2 outer

    bool outer_simple() const;
};

// Builds the embedding value and derives layers from outer_cycle
// membership. Only shape checks here; validate_embedding does the rest.
TwoOuterEmbedding make_embedding(Graph g, std::vector<Vertex> outer_cycle,
                                 std::vector<std::vector<Vertex>> inner_walks,
                                 std::vector<std::vector<Vertex>> rotation);

// Full consistency check: walks use real edges, rotations match adjacency,
// the rotation system's unbounded face equals the reversed outer walk,
// Euler's formula holds per component, inner walks are boundary orbits of
// their components.
void validate_embedding(const TwoOuterEmbedding& emb);

enum class EdgeClass { Inner, Outer, Cross };

struct EdgePartition {
    std::vector<Edge> e1; // inner-inner
    std::vector<Edge> e2; // outer-outer
    std::vector<Edge> e12;
};

EdgeClass edge_class(const TwoOuterEmbedding& emb, const Edge& e);
EdgePartition classify_edges(const TwoOuterEmbedding& emb);

// The outer boundary as a circular ordering; only meaningful when every
// vertex lies on the outer face.
CircularOrder outer_face_order(const TwoOuterEmbedding& emb);

// Face orbits of a rotation system: follow (u -> v) to (v, w) where w
// precedes u in rotation[v]. Bounded faces come out counter-clockwise, the
// unbounded face clockwise. Each face is the cyclic list of visited tails.
std::vector<std::vector<Vertex>> trace_faces(const Graph& g,
                                             const std::vector<std::vector<Vertex>>& rotation);

// (outer vertex, inner neighbor) pairs in clockwise annulus order starting
// at start: outer vertices in reverse cycle order, each fan read
// counter-clockwise from the edge to its cycle successor. Requires a
// simple outer cycle.
std::vector<std::pair<Vertex, Vertex>> annulus_scan(const TwoOuterEmbedding& emb, Vertex start);

// Adds outer-layer edges until the outer boundary walk is a simple cycle.
TwoOuterEmbedding make_outer_biconnected(const TwoOuterEmbedding& embedding);

// Adds edges until every bounded face is a triangle. Outer boundary and
// layers are unchanged; inner walks are recomputed.
TwoOuterEmbedding triangulate_maximal(const TwoOuterEmbedding& embedding);

} // namespace circsep
