#include "circsep/graph.hpp"

#include <algorithm>
#include <set>

namespace circsep {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n < 0) throw input_error("vertex count must be nonnegative");
    std::sort(edges_.begin(), edges_.end());
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        if (e.v >= n_) throw input_error("edge endpoint out of range");
        if (i > 0 && edges_[i - 1] == e) throw input_error("duplicate edge");
    }
    adj_.assign(n_, {});
    for (const Edge& e : edges_) {
        adj_[e.u].push_back(e.v);
        adj_[e.v].push_back(e.u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

void Graph::check_vertex(Vertex v) const {
    if (v < 0 || v >= n_) throw input_error("vertex out of range");
}

const std::vector<Vertex>& Graph::neighbors(Vertex v) const {
    check_vertex(v);
    return adj_[v];
}

int Graph::degree(Vertex v) const {
    check_vertex(v);
    return static_cast<int>(adj_[v].size());
}

bool Graph::has_edge(Vertex a, Vertex b) const {
    check_vertex(a);
    check_vertex(b);
    if (a == b) return false;
    const auto& nb = adj_[a];
    return std::binary_search(nb.begin(), nb.end(), b);
}

std::vector<int> Graph::components() const {
    std::vector<int> comp(n_, -1);
    int next = 0;
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < n_; ++s) {
        if (comp[s] != -1) continue;
        comp[s] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : adj_[v]) {
                if (comp[w] == -1) {
                    comp[w] = next;
                    stack.push_back(w);
                }
            }
        }
        ++next;
    }
    return comp;
}

int Graph::component_count() const {
    auto comp = components();
    return comp.empty() ? 0 : 1 + *std::max_element(comp.begin(), comp.end());
}

bool Graph::connected() const {
    return n_ <= 1 || component_count() == 1;
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<Vertex>& verts) {
    std::set<Vertex> uniq(verts.begin(), verts.end());
    if (uniq.size() != verts.size()) throw input_error("repeated vertex in subgraph set");
    InducedSubgraph out;
    out.from_parent.assign(g.vertex_count(), -1);
    for (Vertex v : verts) {
        if (v < 0 || v >= g.vertex_count()) throw input_error("subgraph vertex out of range");
        out.from_parent[v] = static_cast<int>(out.to_parent.size());
        out.to_parent.push_back(v);
    }
    std::vector<Edge> es;
    for (const Edge& e : g.edges()) {
        int a = out.from_parent[e.u];
        int b = out.from_parent[e.v];
        if (a != -1 && b != -1) es.emplace_back(a, b);
    }
    out.g = Graph(static_cast<int>(out.to_parent.size()), std::move(es));
    return out;
}

} // namespace circsep
