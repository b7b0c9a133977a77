#include "circsep/separation.hpp"

namespace circsep {

std::vector<std::pair<Edge, Edge>> disjoint_edge_pairs(const Graph& g) {
    std::vector<std::pair<Edge, Edge>> out;
    const auto& es = g.edges();
    for (std::size_t i = 0; i < es.size(); ++i)
        for (std::size_t j = i + 1; j < es.size(); ++j)
            if (es[i].disjoint_from(es[j])) out.emplace_back(es[i], es[j]);
    return out;
}

Verdict verify_family(const Graph& g, const SeparationFamily& family) {
    if (family.empty()) throw input_error("family must contain at least one ordering");
    for (const CircularOrder& o : family) {
        if (o.size() != g.vertex_count())
            throw input_error("ordering does not cover the vertex set");
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            if (!o.contains(v)) throw input_error("ordering does not cover the vertex set");
    }
    Verdict verdict;
    for (const auto& [e, f] : disjoint_edge_pairs(g)) {
        bool separated = false;
        for (const CircularOrder& o : family) {
            if (!alternates(o, e, f)) {
                separated = true;
                break;
            }
        }
        if (!separated) verdict.violations.push_back({e, f});
    }
    verdict.ok = verdict.violations.empty();
    return verdict;
}

} // namespace circsep
