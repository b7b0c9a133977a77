#include "circsep/series_parallel.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "circsep/errors.hpp"

namespace circsep {

namespace {

std::pair<Vertex, Vertex> key(Vertex a, Vertex b) {
    return a < b ? std::pair{a, b} : std::pair{b, a};
}

} // namespace

ReductionTrace sp_reduce(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) throw input_error("graph is empty");
    if (n == 1) throw not_series_parallel("a single vertex has no terminal edge");
    if (!g.connected()) throw input_error("graph must be connected");

    std::map<std::pair<Vertex, Vertex>, int> mult;
    std::vector<std::set<Vertex>> adj(n);
    for (const Edge& e : g.edges()) {
        mult[{e.u, e.v}] = 1;
        adj[e.u].insert(e.v);
        adj[e.v].insert(e.u);
    }
    std::vector<char> alive(n, 1);
    int alive_count = n;

    ReductionTrace trace;
    for (;;) {
        std::pair<Vertex, Vertex> par{-1, -1};
        for (const auto& [e, c] : mult)
            if (c >= 2) { par = e; break; }
        if (par.first >= 0) {
            mult[par] -= 1;
            trace.steps.push_back({ReductionKind::Parallel, -1, par.first, par.second});
            continue;
        }
        // No doubled edges left, so degree equals the neighbor count.
        Vertex x = -1;
        for (Vertex v = 0; v < n && x < 0; ++v)
            if (alive[v] && adj[v].size() == 2 && alive_count > 2) x = v;
        if (x < 0) break;
        auto it = adj[x].begin();
        Vertex a = *it++;
        Vertex b = *it;
        adj[a].erase(x);
        adj[b].erase(x);
        mult.erase(key(x, a));
        mult.erase(key(x, b));
        adj[x].clear();
        alive[x] = 0;
        --alive_count;
        mult[key(a, b)] += 1;
        adj[a].insert(b);
        adj[b].insert(a);
        trace.steps.push_back({ReductionKind::Series, x, std::min(a, b), std::max(a, b)});
    }

    if (alive_count != 2)
        throw not_series_parallel("reduction stalled before reaching a single edge");
    Vertex ta = -1, tb = -1;
    for (Vertex v = 0; v < n; ++v)
        if (alive[v]) (ta < 0 ? ta : tb) = v;
    if (!adj[ta].count(tb))
        throw not_series_parallel("terminal vertices are not adjacent");
    trace.terminal_a = ta;
    trace.terminal_b = tb;
    return trace;
}

SeparationFamily sp_construct(const Graph& g) {
    ReductionTrace trace = sp_reduce(g);
    std::vector<Vertex> s1{trace.terminal_a, trace.terminal_b};
    std::vector<Vertex> s2 = s1;
    for (auto it = trace.steps.rbegin(); it != trace.steps.rend(); ++it) {
        if (it->kind != ReductionKind::Series) continue;
        // The subdividing vertex sits next to a in one ordering and next
        // to b in the other, so its two edges never both stretch far.
        auto p1 = std::find(s1.begin(), s1.end(), it->a);
        if (p1 == s1.end()) throw structural_error("replay lost a reduction endpoint");
        s1.insert(p1 + 1, it->x);
        auto p2 = std::find(s2.begin(), s2.end(), it->b);
        if (p2 == s2.end()) throw structural_error("replay lost a reduction endpoint");
        s2.insert(p2 + 1, it->x);
    }
    SeparationFamily family{CircularOrder(s1), CircularOrder(s2)};
    SeparationFamily single{family[0]};
    if (verify_family(g, single).ok) return single;
    return family;
}

} // namespace circsep
