#pragma once

#include <iosfwd>
#include <string>
#include <unordered_map>
#include <vector>

#include "circsep/embedding.hpp"
#include "circsep/graph.hpp"
#include "circsep/separation.hpp"

namespace circsep {

// Maps file tokens to dense vertex ids. Numeric mode admits only the
// literals 0..n-1; label mode interns tokens in first-appearance order.
struct LabelMap {
    std::vector<std::string> names;
    std::unordered_map<std::string, Vertex> ids;

    Vertex intern(const std::string& token);
    Vertex lookup(const std::string& token) const;
    const std::string& name(Vertex v) const;
};

LabelMap numeric_labels(int n);

struct GraphFile {
    Graph g;
    LabelMap labels;
};

struct EmbeddingFile {
    TwoOuterEmbedding emb;
    LabelMap labels;
};

// "n m" header, then one "u v" line per edge. '#' starts a comment and
// blank lines are skipped.
GraphFile parse_graph(std::istream& in, bool string_labels);
std::string emit_graph(const Graph& g, const LabelMap& labels);

// Keyword sections: an optional "orientation: cw|ccw" (default ccw; cw
// input is mirrored on load), one "layer2:" cyclic walk, one "walk:" line
// per inner component, and one "rot v:" line per vertex listing its
// neighbors counter-clockwise. Edges come from the rotations.
EmbeddingFile parse_embedding(std::istream& in, bool string_labels);
std::string emit_embedding(const TwoOuterEmbedding& emb, const LabelMap& labels);

// One circular ordering per line.
SeparationFamily parse_family(std::istream& in, const LabelMap& labels);
std::string emit_family(const SeparationFamily& family, const LabelMap& labels);

} // namespace circsep
