#pragma once

#include <optional>

#include "circsep/embedding.hpp"
#include "circsep/graph.hpp"
#include "circsep/ordering.hpp"
#include "circsep/separation.hpp"

namespace circsep {

enum class ArcEnd { Left, Right };

// Reorders a nested linear order so that every edge of g spans an
// uninterrupted arc. Right keeps the rightmost element in place and packs
// neighborhoods leftward; Left is the mirror image. Requires that no two
// disjoint edges interleave when order is read circularly.
LinearOrder arc_removal(const LinearOrder& order, ArcEnd p, const Graph& g);

// Two-ordering families for maximal embeddings, by inner-layer shape.
SeparationFamily construct_biconnected(const TwoOuterEmbedding& emb);
SeparationFamily construct_connected(const TwoOuterEmbedding& emb,
                                     std::optional<Vertex> start = std::nullopt);
SeparationFamily construct_general(const TwoOuterEmbedding& emb);

// Full pipeline for an arbitrary valid embedding: restore a simple outer
// cycle, triangulate, then construct. Output size is 1 when the inner
// layer is empty and 2 otherwise.
SeparationFamily construct_two_outerplanar(const TwoOuterEmbedding& emb);

} // namespace circsep
