#include "circsep/blocks.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "circsep/errors.hpp"

namespace circsep {

namespace {

// Biconnected components of the component containing root, as edge lists.
std::vector<std::vector<Edge>> biconnected_components(const Graph& g, Vertex root) {
    const int n = g.vertex_count();
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<std::pair<Vertex, Vertex>> estack;
    std::vector<std::vector<Edge>> comps;
    struct Frame { Vertex v; Vertex parent; size_t idx; };
    std::vector<Frame> stack;
    int timer = 0;

    disc[root] = low[root] = timer++;
    stack.push_back({root, -1, 0});
    while (!stack.empty()) {
        Frame& f = stack.back();
        const auto& nb = g.neighbors(f.v);
        if (f.idx < nb.size()) {
            Vertex w = nb[f.idx++];
            if (w == f.parent) continue;
            if (disc[w] == -1) {
                estack.push_back({f.v, w});
                disc[w] = low[w] = timer++;
                Vertex parent = f.v;
                stack.push_back({w, parent, 0});
            } else if (disc[w] < disc[f.v]) {
                estack.push_back({f.v, w});
                low[f.v] = std::min(low[f.v], disc[w]);
            }
        } else {
            Vertex child = f.v;
            stack.pop_back();
            if (stack.empty()) break;
            Frame& p = stack.back();
            low[p.v] = std::min(low[p.v], low[child]);
            if (low[child] >= disc[p.v]) {
                std::vector<Edge> comp;
                for (;;) {
                    auto [a, b] = estack.back();
                    estack.pop_back();
                    comp.push_back(Edge(a, b));
                    if (a == p.v && b == child) break;
                }
                comps.push_back(std::move(comp));
            }
        }
    }
    return comps;
}

} // namespace

BlockDecomposition blocks(const Graph& g, const std::vector<Vertex>& boundary_walk) {
    if (boundary_walk.empty()) throw input_error("boundary walk must not be empty");
    BlockDecomposition out;
    Vertex root = boundary_walk[0];

    auto comps = biconnected_components(g, root);
    if (comps.empty()) {
        if (g.degree(root) != 0)
            throw structural_error("boundary walk component has edges but no blocks");
        out.blocks.push_back({root});
        out.block_edges.push_back({});
        out.parent_cut.push_back(-1);
        return out;
    }

    std::map<Edge, int> block_of;
    std::vector<std::vector<Vertex>> verts(comps.size());
    for (int b = 0; b < static_cast<int>(comps.size()); ++b) {
        std::set<Vertex> vs;
        for (const Edge& e : comps[b]) {
            block_of[e] = b;
            vs.insert(e.u);
            vs.insert(e.v);
        }
        verts[b].assign(vs.begin(), vs.end());
    }

    // Walk order: a block enters when its first edge shows up on the walk.
    std::vector<int> order;
    std::vector<char> seen(comps.size(), 0);
    const int L = boundary_walk.size();
    for (int i = 0; i < L && L > 1; ++i) {
        Vertex a = boundary_walk[i], b = boundary_walk[(i + 1) % L];
        if (a == b) throw structural_error("boundary walk repeats a vertex in place");
        auto it = block_of.find(Edge(a, b));
        if (it == block_of.end()) throw structural_error("boundary walk step is not an edge");
        if (!seen[it->second]) {
            seen[it->second] = 1;
            order.push_back(it->second);
        }
    }
    if (order.size() != comps.size())
        throw structural_error("a block never appears on the boundary walk");

    std::vector<int> membership(g.vertex_count(), 0);
    for (const auto& vs : verts)
        for (Vertex v : vs) membership[v]++;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (membership[v] > 1) out.cut_vertices.push_back(v);

    std::vector<char> in_earlier(g.vertex_count(), 0);
    for (int b : order) {
        out.blocks.push_back(verts[b]);
        std::vector<Edge> es = comps[b];
        std::sort(es.begin(), es.end());
        out.block_edges.push_back(std::move(es));
        if (out.blocks.size() == 1) {
            out.parent_cut.push_back(-1);
        } else {
            Vertex shared = -1;
            int count = 0;
            for (Vertex v : verts[b])
                if (in_earlier[v]) { shared = v; ++count; }
            if (count != 1)
                throw structural_error("block shares more than one vertex with its predecessors");
            out.parent_cut.push_back(shared);
        }
        for (Vertex v : verts[b]) in_earlier[v] = 1;
    }
    return out;
}

} // namespace circsep
