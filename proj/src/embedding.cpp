#include "circsep/embedding.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "circsep/errors.hpp"

namespace circsep {

namespace {

int find_in(const std::vector<Vertex>& vec, Vertex v) {
    for (int i = 0; i < static_cast<int>(vec.size()); ++i)
        if (vec[i] == v) return i;
    return -1;
}

// w such that the face orbit continues (u -> v) to (v -> w): the neighbor
// just before u in rotation[v], counter-clockwise.
Vertex orbit_next(const std::vector<std::vector<Vertex>>& rotation, Vertex u, Vertex v) {
    const auto& rot = rotation[v];
    int i = find_in(rot, u);
    if (i < 0) throw structural_error("rotation at vertex " + std::to_string(v) +
                                      " is missing neighbor " + std::to_string(u));
    return rot[(i + rot.size() - 1) % rot.size()];
}

} // namespace

bool TwoOuterEmbedding::outer_simple() const {
    std::set<Vertex> seen(outer_cycle.begin(), outer_cycle.end());
    return seen.size() == outer_cycle.size();
}

TwoOuterEmbedding make_embedding(Graph g, std::vector<Vertex> outer_cycle,
                                 std::vector<std::vector<Vertex>> inner_walks,
                                 std::vector<std::vector<Vertex>> rotation) {
    const int n = g.vertex_count();
    if (outer_cycle.empty()) throw input_error("outer boundary must not be empty");
    if (static_cast<int>(rotation.size()) != n)
        throw input_error("rotation table must cover every vertex");
    std::vector<int> layer(n, 1);
    for (Vertex v : outer_cycle) {
        if (v < 0 || v >= n) throw input_error("outer boundary vertex out of range");
        layer[v] = 2;
    }
    for (const auto& walk : inner_walks)
        for (Vertex v : walk) {
            if (v < 0 || v >= n) throw input_error("inner walk vertex out of range");
            if (layer[v] == 2) throw input_error("inner walk contains an outer vertex");
        }
    TwoOuterEmbedding emb;
    emb.g = std::move(g);
    emb.outer_cycle = std::move(outer_cycle);
    emb.inner_walks = std::move(inner_walks);
    emb.rotation = std::move(rotation);
    emb.layer = std::move(layer);
    return emb;
}

std::vector<std::vector<Vertex>> trace_faces(const Graph& g,
                                             const std::vector<std::vector<Vertex>>& rotation) {
    std::set<std::pair<Vertex, Vertex>> done;
    std::vector<std::vector<Vertex>> faces;
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
        for (Vertex v : rotation[u]) {
            if (done.count({u, v})) continue;
            std::vector<Vertex> face;
            Vertex a = u, b = v;
            do {
                face.push_back(a);
                done.insert({a, b});
                Vertex c = orbit_next(rotation, a, b);
                a = b;
                b = c;
            } while (!(a == u && b == v));
            faces.push_back(std::move(face));
        }
    }
    return faces;
}

namespace {

// Directed walk edges of a cyclic sequence.
std::vector<std::pair<Vertex, Vertex>> walk_steps(const std::vector<Vertex>& walk) {
    std::vector<std::pair<Vertex, Vertex>> steps;
    const int L = walk.size();
    for (int i = 0; i < L; ++i) steps.push_back({walk[i], walk[(i + 1) % L]});
    return steps;
}

} // namespace

void validate_embedding(const TwoOuterEmbedding& emb) {
    const Graph& g = emb.g;
    const int n = g.vertex_count();
    std::set<Vertex> outer_set(emb.outer_cycle.begin(), emb.outer_cycle.end());
    if (static_cast<int>(outer_set.size()) < 3)
        throw input_error("outer layer needs at least 3 vertices");
    if (static_cast<int>(emb.layer.size()) != n ||
        static_cast<int>(emb.rotation.size()) != n)
        throw structural_error("embedding tables do not cover every vertex");

    for (Vertex v = 0; v < n; ++v) {
        int expect = outer_set.count(v) ? 2 : 1;
        if (emb.layer[v] != expect) throw structural_error("layer assignment disagrees with outer boundary");
    }

    // Rotations are permutations of the adjacency lists.
    for (Vertex v = 0; v < n; ++v) {
        auto nbrs = g.neighbors(v);
        auto rot = emb.rotation[v];
        std::sort(rot.begin(), rot.end());
        if (rot != nbrs) throw structural_error("rotation at vertex " + std::to_string(v) +
                                                " is not a permutation of its neighbors");
    }

    // Walk edges exist. Single-vertex walks carry no edges.
    if (emb.outer_cycle.size() >= 2)
        for (auto [a, b] : walk_steps(emb.outer_cycle))
            if (a == b || !g.has_edge(a, b))
                throw structural_error("outer boundary step is not an edge");
    for (const auto& walk : emb.inner_walks) {
        if (walk.empty()) throw structural_error("empty inner walk");
        if (walk.size() == 1) continue;
        for (auto [a, b] : walk_steps(walk))
            if (a == b || !g.has_edge(a, b))
                throw structural_error("inner walk step is not an edge");
    }

    // Inner walks partition the inner layer, one walk per component of the
    // inner-induced subgraph. Full-graph components would merge everything
    // through the outer boundary.
    {
        std::vector<int> comp(n, -1);
        int next_comp = 0;
        for (Vertex s = 0; s < n; ++s) {
            if (emb.layer[s] != 1 || comp[s] != -1) continue;
            comp[s] = next_comp;
            std::vector<Vertex> queue{s};
            while (!queue.empty()) {
                Vertex v = queue.back();
                queue.pop_back();
                for (Vertex w : g.neighbors(v))
                    if (emb.layer[w] == 1 && comp[w] == -1) {
                        comp[w] = next_comp;
                        queue.push_back(w);
                    }
            }
            ++next_comp;
        }
        std::set<int> walk_comps;
        std::vector<char> covered(n, 0);
        for (const auto& walk : emb.inner_walks) {
            for (Vertex v : walk) {
                if (emb.layer[v] != 1) throw structural_error("inner walk touches the outer layer");
                covered[v] = 1;
            }
            if (!walk_comps.insert(comp[walk[0]]).second)
                throw structural_error("two inner walks share a component");
            for (Vertex v : walk)
                if (comp[v] != comp[walk[0]])
                    throw structural_error("inner walk spans two components");
        }
        for (Vertex v = 0; v < n; ++v)
            if (emb.layer[v] == 1 && !covered[v])
                throw structural_error("inner vertex missing from every walk");
    }

    // The unbounded face is the reversed outer walk.
    if (emb.outer_cycle.size() >= 2) {
        const auto& cyc = emb.outer_cycle;
        const int L = cyc.size();
        std::vector<Vertex> expect;
        for (int i = 0; i < L; ++i) expect.push_back(cyc[(L - i) % L]);
        std::vector<Vertex> orbit;
        Vertex a = expect[0], b = expect[1 % L];
        int guard = 0;
        do {
            orbit.push_back(a);
            Vertex c = orbit_next(emb.rotation, a, b);
            a = b;
            b = c;
            if (++guard > 4 * g.edge_count() + 4)
                throw structural_error("outer face orbit does not close");
        } while (!(a == expect[0] && b == expect[1 % L]));
        if (orbit != expect)
            throw structural_error("outer face of the rotation system disagrees with the stored boundary");
    }

    // Euler's formula per component; isolated vertices have no orbits.
    {
        std::vector<int> comp = g.components();
        int comp_count = g.component_count();
        std::vector<int> vcnt(comp_count, 0), ecnt(comp_count, 0), fcnt(comp_count, 0);
        for (Vertex v = 0; v < n; ++v) vcnt[comp[v]]++;
        for (const Edge& e : g.edges()) ecnt[comp[e.u]]++;
        for (const auto& face : trace_faces(g, emb.rotation)) fcnt[comp[face[0]]]++;
        for (int c = 0; c < comp_count; ++c) {
            if (vcnt[c] == 1) continue;
            if (vcnt[c] - ecnt[c] + fcnt[c] != 2)
                throw structural_error("rotation system is not planar");
        }
    }

    // Each inner walk is the boundary orbit of its component: successive
    // steps obey the face rule in the component-induced rotation.
    for (const auto& walk : emb.inner_walks) {
        if (walk.size() == 1) continue;
        std::set<Vertex> comp_set(walk.begin(), walk.end());
        const int L = walk.size();
        for (int i = 0; i < L; ++i) {
            Vertex a = walk[i], b = walk[(i + 1) % L], c = walk[(i + 2) % L];
            const auto& rot = emb.rotation[b];
            std::vector<Vertex> induced;
            for (Vertex w : rot)
                if (emb.layer[w] == 1) induced.push_back(w);
            int j = find_in(induced, a);
            if (j < 0) throw structural_error("inner walk step is not an edge of its component");
            if (induced[(j + induced.size() - 1) % induced.size()] != c)
                throw structural_error("inner walk is not the boundary of its component");
        }
    }
}

EdgeClass edge_class(const TwoOuterEmbedding& emb, const Edge& e) {
    int s = emb.layer[e.u] + emb.layer[e.v];
    if (s == 2) return EdgeClass::Inner;
    if (s == 4) return EdgeClass::Outer;
    return EdgeClass::Cross;
}

EdgePartition classify_edges(const TwoOuterEmbedding& emb) {
    EdgePartition part;
    for (const Edge& e : emb.g.edges()) {
        switch (edge_class(emb, e)) {
            case EdgeClass::Inner: part.e1.push_back(e); break;
            case EdgeClass::Outer: part.e2.push_back(e); break;
            case EdgeClass::Cross: part.e12.push_back(e); break;
        }
    }
    return part;
}

CircularOrder outer_face_order(const TwoOuterEmbedding& emb) {
    for (Vertex v = 0; v < emb.g.vertex_count(); ++v)
        if (emb.layer[v] != 2)
            throw contract_error("outer_face_order requires every vertex on the outer face");
    if (!emb.outer_simple())
        throw input_error("outer boundary is not a simple cycle");
    return CircularOrder(emb.outer_cycle);
}

std::vector<std::pair<Vertex, Vertex>> annulus_scan(const TwoOuterEmbedding& emb, Vertex start) {
    if (!emb.outer_simple())
        throw contract_error("annulus scan requires a simple outer cycle");
    const auto& cyc = emb.outer_cycle;
    const int n2 = cyc.size();
    int pos = find_in(cyc, start);
    if (pos < 0) throw input_error("scan start is not on the outer boundary");
    std::vector<std::pair<Vertex, Vertex>> out;
    for (int t = 0; t < n2; ++t) {
        int i = ((pos - t) % n2 + n2) % n2;
        Vertex c = cyc[i];
        Vertex nxt = cyc[(i + 1) % n2];
        Vertex prv = cyc[(i - 1 + n2) % n2];
        const auto& rot = emb.rotation[c];
        int k = find_in(rot, nxt);
        if (k < 0) throw structural_error("outer vertex rotation is missing its cycle successor");
        bool closed = false;
        for (int step = 1; step < static_cast<int>(rot.size()); ++step) {
            Vertex v = rot[(k + step) % rot.size()];
            if (v == prv) { closed = true; break; }
            if (emb.layer[v] == 1) out.push_back({c, v});
        }
        if (!closed) throw structural_error("outer vertex rotation is missing its cycle predecessor");
    }
    return out;
}

TwoOuterEmbedding make_outer_biconnected(const TwoOuterEmbedding& embedding) {
    TwoOuterEmbedding emb = embedding;
    std::set<Vertex> outer_set(emb.outer_cycle.begin(), emb.outer_cycle.end());
    if (outer_set.size() < 3) throw input_error("outer layer needs at least 3 vertices");

    while (!emb.outer_simple()) {
        auto& cyc = emb.outer_cycle;
        const int L = cyc.size();
        // Repeated occurrences, in walk order.
        std::vector<int> candidates;
        {
            std::set<Vertex> seen;
            for (int i = 0; i < L; ++i)
                if (!seen.insert(cyc[i]).second) candidates.push_back(i);
        }
        bool added = false;
        for (int j2 : candidates) {
            Vertex c = cyc[j2];
            Vertex u = cyc[(j2 - 1 + L) % L];
            Vertex x = cyc[(j2 + 1) % L];
            if (u == x || emb.g.has_edge(u, x)) continue;

            // Bridge over this occurrence of c; the new edge runs just
            // outside the old boundary corner.
            std::vector<Edge> edges = emb.g.edges();
            edges.push_back(Edge(u, x));
            emb.g = Graph(emb.g.vertex_count(), edges);
            {
                auto& rot = emb.rotation[u];
                rot.insert(rot.begin() + find_in(rot, c), x);
            }
            {
                auto& rot = emb.rotation[x];
                int i = find_in(rot, c);
                rot.insert(rot.begin() + i + 1, u);
            }
            cyc.erase(cyc.begin() + j2);
            added = true;
            break;
        }
        if (!added)
            throw structural_error("outer boundary cannot be closed into a simple cycle");
    }
    return emb;
}

namespace {

struct FaceIndex {
    std::vector<std::vector<Vertex>> faces;
    std::map<std::pair<Vertex, Vertex>, int> face_of;
};

FaceIndex build_face_index(const Graph& g, const std::vector<std::vector<Vertex>>& rotation) {
    FaceIndex idx;
    idx.faces = trace_faces(g, rotation);
    for (int f = 0; f < static_cast<int>(idx.faces.size()); ++f) {
        const auto& face = idx.faces[f];
        const int L = face.size();
        for (int i = 0; i < L; ++i) idx.face_of[{face[i], face[(i + 1) % L]}] = f;
    }
    return idx;
}

// True when the face contains the directed steps of the reversed outer walk.
bool is_outer_face(const FaceIndex& idx, int f, const std::vector<Vertex>& outer_cycle) {
    auto it = idx.face_of.find({outer_cycle[1 % outer_cycle.size()], outer_cycle[0]});
    return it != idx.face_of.end() && it->second == f;
}

} // namespace

TwoOuterEmbedding triangulate_maximal(const TwoOuterEmbedding& embedding) {
    TwoOuterEmbedding emb = embedding;

    // Count inner-layer neighbors on demand; used by the ear guard.
    auto has_outer_neighbor = [&](Vertex v) {
        for (Vertex w : emb.g.neighbors(v))
            if (emb.layer[w] == 2) return true;
        return false;
    };

    for (;;) {
        FaceIndex idx = build_face_index(emb.g, emb.rotation);
        int target = -1;
        for (int f = 0; f < static_cast<int>(idx.faces.size()); ++f) {
            if (idx.faces[f].size() <= 3) continue;
            if (is_outer_face(idx, f, emb.outer_cycle)) continue;
            target = f;
            break;
        }
        if (target < 0) break;

        const auto& face = idx.faces[target];
        const int t = face.size();

        // Candidate chords: new edges between distinct, non-consecutive
        // face corners. Outer endpoints first, then by label, so runs of
        // picks fan out of the smallest outer vertex.
        struct Cand { int s, u; int pri; Vertex a, b; };
        std::vector<Cand> cands;
        for (int s = 0; s < t; ++s)
            for (int u = s + 2; u < t; ++u) {
                if (s == 0 && u == t - 1) continue;
                Vertex a = face[s], b = face[u];
                if (a == b || emb.g.has_edge(a, b)) continue;
                int pri = (emb.layer[a] == 2 || emb.layer[b] == 2) ? 0 : 1;
                cands.push_back({s, u, pri, std::min(a, b), std::max(a, b)});
            }
        std::sort(cands.begin(), cands.end(), [](const Cand& x, const Cand& y) {
            return std::tie(x.pri, x.a, x.b, x.s, x.u) < std::tie(y.pri, y.a, y.b, y.s, y.u);
        });

        bool placed = false;
        for (const Cand& c : cands) {
            // A chord that seals a corner must not bury an inner vertex
            // that has no outer contact yet.
            bool bad = false;
            for (auto [lo, hi] : {std::pair<int, int>{c.s, c.u}, {c.u, c.s}}) {
                if ((hi - lo + t) % t != 2) continue;
                Vertex y = face[(lo + 1) % t];
                if (emb.layer[y] == 1 && !has_outer_neighbor(y) &&
                    emb.layer[face[c.s]] == 1 && emb.layer[face[c.u]] == 1)
                    bad = true;
            }
            if (bad) continue;

            Vertex a = face[c.s], b = face[c.u];
            std::vector<Edge> edges = emb.g.edges();
            edges.push_back(Edge(a, b));
            emb.g = Graph(emb.g.vertex_count(), edges);
            {
                // Into the face corner at a: just before its face
                // predecessor, counter-clockwise.
                auto& rot = emb.rotation[a];
                Vertex before = face[(c.s - 1 + t) % t];
                rot.insert(rot.begin() + find_in(rot, before), b);
            }
            {
                auto& rot = emb.rotation[b];
                Vertex before = face[(c.u - 1 + t) % t];
                rot.insert(rot.begin() + find_in(rot, before), a);
            }
            placed = true;
            break;
        }
        if (!placed) throw structural_error("face cannot be triangulated");
    }

    // All bounded faces are triangles now; rebuild the inner walks as the
    // boundary orbits of each inner component.
    {
        FaceIndex idx = build_face_index(emb.g, emb.rotation);
        for (int f = 0; f < static_cast<int>(idx.faces.size()); ++f)
            if (idx.faces[f].size() != 3 && !is_outer_face(idx, f, emb.outer_cycle))
                throw structural_error("triangulation left a non-triangular face");

        // Components of the inner-induced subgraph; the outer boundary
        // must not glue separate inner pieces together.
        std::vector<int> comp(emb.g.vertex_count(), -1);
        {
            int next_comp = 0;
            for (Vertex s = 0; s < emb.g.vertex_count(); ++s) {
                if (emb.layer[s] != 1 || comp[s] != -1) continue;
                comp[s] = next_comp;
                std::vector<Vertex> queue{s};
                while (!queue.empty()) {
                    Vertex v = queue.back();
                    queue.pop_back();
                    for (Vertex w : emb.g.neighbors(v))
                        if (emb.layer[w] == 1 && comp[w] == -1) {
                            comp[w] = next_comp;
                            queue.push_back(w);
                        }
                }
                ++next_comp;
            }
        }
        std::map<int, std::vector<Vertex>> comp_verts;
        for (Vertex v = 0; v < emb.g.vertex_count(); ++v)
            if (emb.layer[v] == 1) comp_verts[comp[v]].push_back(v);

        // Induced rotations restricted to the inner layer.
        std::vector<std::vector<Vertex>> induced(emb.g.vertex_count());
        for (Vertex v = 0; v < emb.g.vertex_count(); ++v)
            if (emb.layer[v] == 1)
                for (Vertex w : emb.rotation[v])
                    if (emb.layer[w] == 1) induced[v].push_back(w);

        std::vector<std::vector<Vertex>> walks;
        for (auto& [c, verts] : comp_verts) {
            if (verts.size() == 1) { walks.push_back({verts[0]}); continue; }
            // The boundary orbit is the one that is not a bounded face of
            // the full embedding.
            std::vector<Edge> inner_edges;
            for (const Edge& e : emb.g.edges())
                if (emb.layer[e.u] == 1 && emb.layer[e.v] == 1 &&
                    comp[e.u] == static_cast<int>(c))
                    inner_edges.push_back(e);
            Graph sub(emb.g.vertex_count(), inner_edges);
            bool found = false;
            for (const auto& orbit : trace_faces(sub, induced)) {
                if (comp[orbit[0]] != static_cast<int>(c)) continue;
                auto it = idx.face_of.find({orbit[0], orbit[1 % orbit.size()]});
                bool bounded = false;
                if (it != idx.face_of.end() && idx.faces[it->second].size() == orbit.size()) {
                    bounded = true;
                    const int L = orbit.size();
                    for (int i = 0; i < L && bounded; ++i) {
                        auto jt = idx.face_of.find({orbit[i], orbit[(i + 1) % L]});
                        if (jt == idx.face_of.end() || jt->second != it->second) bounded = false;
                    }
                }
                if (!bounded) {
                    if (found) throw structural_error("inner component has two boundary orbits");
                    walks.push_back(orbit);
                    found = true;
                }
            }
            if (!found) throw structural_error("inner component has no boundary orbit");
        }
        emb.inner_walks = std::move(walks);
    }
    return emb;
}

} // namespace circsep
