#include "circsep/construct.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "circsep/blocks.hpp"
#include "circsep/errors.hpp"

namespace circsep {

LinearOrder arc_removal(const LinearOrder& order, ArcEnd p, const Graph& g) {
    const int n = order.size();
    if (n == 0) throw input_error("arc removal needs a nonempty order");

    std::vector<Edge> inside;
    for (const Edge& e : g.edges())
        if (order.contains(e.u) && order.contains(e.v)) inside.push_back(e);

    // Disjoint edges must not interleave when the order is read circularly.
    if (n >= 4) {
        CircularOrder circ(order.seq());
        for (size_t i = 0; i < inside.size(); ++i)
            for (size_t j = i + 1; j < inside.size(); ++j)
                if (inside[i].disjoint_from(inside[j]) &&
                    alternates(circ, inside[i], inside[j]))
                    throw contract_error("arc removal requires non-interleaving edges");
    }

    std::vector<std::vector<int>> nbr(n);
    for (const Edge& e : inside) {
        nbr[order.position(e.u)].push_back(order.position(e.v));
        nbr[order.position(e.v)].push_back(order.position(e.u));
    }
    for (auto& v : nbr) std::sort(v.begin(), v.end());

    std::vector<char> assigned(n, 0), visited(n, 0);
    std::vector<Vertex> result(n, -1);
    if (p == ArcEnd::Right) {
        // Sweep right to left, packing each vertex and then its unplaced
        // neighbors (leftmost first) into the rightmost free slots.
        int k = n - 1;
        for (int i = n - 1; i >= 0 && k >= 0; --i) {
            if (visited[i]) continue;
            if (!assigned[i]) { result[k--] = order.at(i); assigned[i] = 1; }
            for (int cand : nbr[i])
                if (!assigned[cand]) { result[k--] = order.at(cand); assigned[cand] = 1; }
            visited[i] = 1;
        }
    } else {
        int k = 0;
        for (int i = 0; i < n && k < n; ++i) {
            if (visited[i]) continue;
            if (!assigned[i]) { result[k++] = order.at(i); assigned[i] = 1; }
            for (auto it = nbr[i].rbegin(); it != nbr[i].rend(); ++it)
                if (!assigned[*it]) { result[k++] = order.at(*it); assigned[*it] = 1; }
            visited[i] = 1;
        }
    }
    return LinearOrder(result);
}

namespace {

std::vector<Vertex> rotate_to(const std::vector<Vertex>& cyc, Vertex v) {
    size_t i = 0;
    while (i < cyc.size() && cyc[i] != v) ++i;
    if (i == cyc.size()) throw input_error("vertex is not on the cycle");
    std::vector<Vertex> out(cyc.begin() + i, cyc.end());
    out.insert(out.end(), cyc.begin(), cyc.begin() + i);
    return out;
}

std::vector<Vertex> cyclic_dedup(const std::vector<Vertex>& seq) {
    std::vector<Vertex> out;
    for (Vertex v : seq)
        if (out.empty() || out.back() != v) out.push_back(v);
    while (out.size() > 1 && out.front() == out.back()) out.pop_back();
    return out;
}

void require_maximal(const TwoOuterEmbedding& emb) {
    if (!emb.outer_simple())
        throw structural_error("construction requires a simple outer cycle");
    const auto& cyc = emb.outer_cycle;
    for (const auto& face : trace_faces(emb.g, emb.rotation)) {
        if (face.size() == 3) continue;
        bool outer = false;
        const int L = face.size();
        for (int i = 0; i < L && !outer; ++i)
            if (face[i] == cyc[1 % cyc.size()] && face[(i + 1) % L] == cyc[0]) outer = true;
        if (!outer)
            throw structural_error("construction requires a triangulated embedding");
    }
}

// Partner search for a first ordering that is good but whose assembled
// second ordering is not: the pairs still crossing in s1 must come out
// laminar. Vertices are inserted one at a time, most constrained first;
// the relative circular position of placed vertices is final, so each pair
// is checked exactly once, when its last endpoint lands. Vertices outside
// every crossing pair cannot fail and are appended afterwards.
std::optional<CircularOrder> complete_second_order(const Graph& g,
                                                   const CircularOrder& s1) {
    const int n = g.vertex_count();
    std::vector<std::pair<Edge, Edge>> S;
    for (const auto& pr : disjoint_edge_pairs(g))
        if (alternates(s1, pr.first, pr.second)) S.push_back(pr);

    std::vector<std::vector<int>> byv(n);
    for (int i = 0; i < static_cast<int>(S.size()); ++i) {
        byv[S[i].first.u].push_back(i);
        byv[S[i].first.v].push_back(i);
        byv[S[i].second.u].push_back(i);
        byv[S[i].second.v].push_back(i);
    }
    std::vector<Vertex> hot, cold;
    for (Vertex v = 0; v < n; ++v)
        (byv[v].empty() ? cold : hot).push_back(v);
    if (hot.empty()) return s1;
    std::stable_sort(hot.begin(), hot.end(), [&](Vertex a, Vertex b) {
        return byv[a].size() > byv[b].size();
    });

    std::vector<Vertex> cyc{hot[0]};
    std::vector<char> placed(n, 0);
    placed[hot[0]] = 1;
    std::vector<int> pos(n, -1);
    long budget = 500000;

    auto crossing = [&](int L, const Edge& e, const Edge& f) {
        int da = ((pos[e.v] - pos[e.u]) % L + L) % L;
        bool fu = ((pos[f.u] - pos[e.u]) % L + L) % L < da;
        bool fv = ((pos[f.v] - pos[e.u]) % L + L) % L < da;
        return fu != fv;
    };

    auto rec = [&](auto&& self, size_t k) -> bool {
        if (--budget < 0) return false;
        if (k == hot.size()) return true;
        Vertex v = hot[k];
        placed[v] = 1;
        const size_t slots = cyc.size();
        for (size_t gap = 0; gap < slots; ++gap) {
            cyc.insert(cyc.begin() + gap, v);
            const int L = cyc.size();
            for (int i = 0; i < L; ++i) pos[cyc[i]] = i;
            bool ok = true;
            for (int si : byv[v]) {
                const auto& [e, f] = S[si];
                if (!placed[e.u] || !placed[e.v] || !placed[f.u] || !placed[f.v])
                    continue;
                if (crossing(L, e, f)) { ok = false; break; }
            }
            if (ok && self(self, k + 1)) return true;
            cyc.erase(cyc.begin() + gap);
        }
        placed[v] = 0;
        return false;
    };
    if (!rec(rec, 1)) return std::nullopt;
    cyc.insert(cyc.end(), cold.begin(), cold.end());
    return CircularOrder(cyc);
}

SeparationFamily construct_connected_anchored(const TwoOuterEmbedding& emb, Vertex start) {
    require_maximal(emb);
    const int n = emb.g.vertex_count();
    EdgePartition part = classify_edges(emb);
    std::vector<Vertex> v1;
    for (Vertex v = 0; v < n; ++v)
        if (emb.layer[v] == 1) v1.push_back(v);
    if (v1.empty()) throw structural_error("inner layer is empty");
    Graph g1(n, part.e1);
    {
        auto comp = g1.components();
        for (Vertex v : v1)
            if (comp[v] != comp[v1[0]])
                throw structural_error("inner layer is not connected");
    }

    auto scan = annulus_scan(emb, start);
    std::vector<Vertex> scan_inner;
    scan_inner.reserve(scan.size());
    for (const auto& [o, w] : scan) scan_inner.push_back(w);

    std::vector<Vertex> L;
    {
        std::vector<char> seen(n, 0);
        for (Vertex w : scan_inner)
            if (!seen[w]) { seen[w] = 1; L.push_back(w); }
    }
    if (L.size() != v1.size())
        throw structural_error("outer scan does not reach every inner vertex");

    int start_inner_deg = 0;
    for (Vertex w : emb.g.neighbors(start))
        if (emb.layer[w] == 1) ++start_inner_deg;
    const bool wrap_case = start_inner_deg >= 2;

    // wrap_case moves the first-labeled vertex to the back of the run.
    std::vector<Vertex> v1part = L;
    if (wrap_case && v1part.size() > 1)
        std::rotate(v1part.begin(), v1part.begin() + 1, v1part.end());

    std::vector<Vertex> cyc = rotate_to(emb.outer_cycle, start);

    std::vector<Vertex> s1;
    s1.push_back(start);
    s1.insert(s1.end(), v1part.begin(), v1part.end());
    s1.insert(s1.end(), cyc.begin() + 1, cyc.end());

    // The second ordering rebuilds the inner run block by block.
    BlockDecomposition bd = blocks(g1, cyclic_dedup(scan_inner));

    std::vector<char> mark(n, 0);
    for (Vertex v : bd.blocks[0]) mark[v] = 1;
    std::vector<Vertex> alpha;
    for (Vertex v : v1part)
        if (mark[v]) alpha.push_back(v);
    for (Vertex v : bd.blocks[0]) mark[v] = 0;

    LinearOrder base = wrap_case
        ? arc_removal(LinearOrder(alpha), ArcEnd::Right, g1)
        : arc_removal(LinearOrder(alpha), ArcEnd::Left, g1).reversed();
    std::vector<Vertex> v1seq = base.seq();

    for (size_t k = 1; k < bd.blocks.size(); ++k) {
        Vertex ck = bd.parent_cut[k];
        for (Vertex v : bd.blocks[k]) mark[v] = 1;
        std::vector<Vertex> alphak{ck};
        for (Vertex v : v1part)
            if (mark[v] && v != ck) alphak.push_back(v);
        for (Vertex v : bd.blocks[k]) mark[v] = 0;
        // Replacement ends with ck, so later splices still find their cut.
        std::vector<Vertex> repl =
            arc_removal(LinearOrder(alphak), ArcEnd::Left, g1).reversed().seq();
        auto it = std::find(v1seq.begin(), v1seq.end(), ck);
        if (it == v1seq.end()) throw structural_error("cut vertex missing from inner run");
        size_t pos = it - v1seq.begin();
        v1seq.erase(it);
        v1seq.insert(v1seq.begin() + pos, repl.begin(), repl.end());
    }

    std::vector<Vertex> s2 = v1seq;
    s2.push_back(start);
    s2.insert(s2.end(), cyc.begin() + 1, cyc.end());

    return {CircularOrder(s1), CircularOrder(s2)};
}

} // namespace

SeparationFamily construct_connected(const TwoOuterEmbedding& emb,
                                     std::optional<Vertex> start_opt) {
    if (start_opt) return construct_connected_anchored(emb, *start_opt);

    std::vector<Vertex> starts;
    for (Vertex v = 0; v < emb.g.vertex_count(); ++v) {
        if (emb.layer[v] != 2) continue;
        for (Vertex w : emb.g.neighbors(v))
            if (emb.layer[w] == 1) { starts.push_back(v); break; }
    }
    if (starts.empty()) throw structural_error("no outer vertex touches the inner layer");

    // Not every anchor admits a valid family when the inner layer has cut
    // vertices, so scan the anchors and keep the first family that checks
    // out against the graph itself.
    std::string why;
    for (Vertex v : starts) {
        try {
            SeparationFamily fam = construct_connected_anchored(emb, v);
            if (verify_family(emb.g, fam).ok) return fam;
            if (why.empty()) why = "family fails verification";
        } catch (const error& e) {
            if (why.empty()) why = e.what();
        }
    }

    // The second ordering can miss for every anchor while the first ordering
    // of some anchor still extends to a family; search for the partner.
    for (Vertex v : starts) {
        try {
            SeparationFamily fam = construct_connected_anchored(emb, v);
            if (auto s2 = complete_second_order(emb.g, fam[0])) {
                SeparationFamily done{fam[0], *s2};
                if (verify_family(emb.g, done).ok) return done;
            }
        } catch (const error&) {
        }
    }
    throw structural_error("no start vertex yields a separating family: " + why);
}

SeparationFamily construct_biconnected(const TwoOuterEmbedding& emb) {
    EdgePartition part = classify_edges(emb);
    Graph g1(emb.g.vertex_count(), part.e1);
    if (emb.inner_walks.size() != 1)
        throw structural_error("inner layer is not connected");
    if (blocks(g1, emb.inner_walks[0]).blocks.size() != 1)
        throw structural_error("inner layer is not biconnected");
    return construct_connected(emb);
}

namespace {

struct GlobalFaces {
    std::vector<std::vector<Vertex>> faces;
    std::map<std::pair<Vertex, Vertex>, int> face_of;
};

GlobalFaces global_faces(const Graph& g, const std::vector<std::vector<Vertex>>& rot) {
    GlobalFaces gf;
    gf.faces = trace_faces(g, rot);
    for (int f = 0; f < static_cast<int>(gf.faces.size()); ++f) {
        const auto& face = gf.faces[f];
        const int L = face.size();
        for (int i = 0; i < L; ++i) gf.face_of[{face[i], face[(i + 1) % L]}] = f;
    }
    return gf;
}

// The orbit of a sub-rotation-system that is not a bounded face of the
// full embedding; every bounded sub-face is a face of the whole drawing,
// so exactly one orbit fails the comparison.
std::vector<Vertex> boundary_orbit(const Graph& sub,
                                   const std::vector<std::vector<Vertex>>& rot,
                                   const GlobalFaces& gf) {
    std::vector<Vertex> found;
    bool have = false;
    for (const auto& orbit : trace_faces(sub, rot)) {
        const int L = orbit.size();
        bool bounded = false;
        auto it = gf.face_of.find({orbit[0], orbit[1 % L]});
        if (it != gf.face_of.end() &&
            gf.faces[it->second].size() == static_cast<size_t>(L)) {
            bounded = true;
            for (int i = 0; i < L && bounded; ++i) {
                auto jt = gf.face_of.find({orbit[i], orbit[(i + 1) % L]});
                if (jt == gf.face_of.end() || jt->second != it->second) bounded = false;
            }
        }
        if (!bounded) {
            if (have) throw structural_error("sub-embedding boundary is ambiguous");
            found = orbit;
            have = true;
        }
    }
    if (!have) throw structural_error("sub-embedding has no boundary orbit");
    return found;
}

SeparationFamily general_anchored(const TwoOuterEmbedding& emb,
                                  const std::vector<int>& pid,
                                  const std::vector<int>& comp1,
                                  const std::set<int>& inner_comps,
                                  const std::set<Vertex>& pset,
                                  const GlobalFaces& gf, Vertex p1);

} // namespace

SeparationFamily construct_general(const TwoOuterEmbedding& emb) {
    require_maximal(emb);
    const int n = emb.g.vertex_count();
    EdgePartition part = classify_edges(emb);
    Graph g1(n, part.e1);
    std::vector<int> comp1 = g1.components();
    std::set<int> inner_comps;
    for (Vertex v = 0; v < n; ++v)
        if (emb.layer[v] == 1) inner_comps.insert(comp1[v]);

    // Separating chords: outer edges with a shared inner neighbor whose
    // removal splits the graph into pieces that all contain inner vertices.
    std::vector<Edge> chords;
    for (const Edge& e : part.e2) {
        bool common = false;
        for (Vertex w : emb.g.neighbors(e.u))
            if (emb.layer[w] == 1 && emb.g.has_edge(e.v, w)) { common = true; break; }
        if (!common) continue;
        std::vector<int> cid(n, -1);
        int nc = 0;
        bool all_inner = true;
        for (Vertex s = 0; s < n; ++s) {
            if (cid[s] >= 0 || s == e.u || s == e.v) continue;
            bool has_inner = false;
            std::vector<Vertex> queue{s};
            cid[s] = nc;
            while (!queue.empty()) {
                Vertex v = queue.back();
                queue.pop_back();
                if (emb.layer[v] == 1) has_inner = true;
                for (Vertex w : emb.g.neighbors(v)) {
                    if (w == e.u || w == e.v || cid[w] >= 0) continue;
                    cid[w] = nc;
                    queue.push_back(w);
                }
            }
            if (!has_inner) all_inner = false;
            ++nc;
        }
        if (nc >= 2 && all_inner) chords.push_back(e);
    }

    if (chords.empty()) {
        if (inner_comps.size() <= 1) return construct_connected(emb, std::nullopt);
        throw structural_error("inner components admit no separating chord");
    }

    std::set<Vertex> pset;
    for (const Edge& e : chords) {
        pset.insert(e.u);
        pset.insert(e.v);
    }

    // Pieces of the graph without the chord endpoints.
    std::vector<int> pid(n, -1);
    {
        int np = 0;
        for (Vertex s = 0; s < n; ++s) {
            if (pid[s] >= 0 || pset.count(s)) continue;
            std::vector<Vertex> queue{s};
            pid[s] = np;
            while (!queue.empty()) {
                Vertex v = queue.back();
                queue.pop_back();
                for (Vertex w : emb.g.neighbors(v)) {
                    if (pset.count(w) || pid[w] >= 0) continue;
                    pid[w] = np;
                    queue.push_back(w);
                }
            }
            ++np;
        }
    }

    GlobalFaces gf = global_faces(emb.g, emb.rotation);

    // Any chord endpoint may anchor the outer traversal. Not every anchor
    // leads to a family that separates, so keep the first one that does.
    std::string why;
    for (Vertex p1 : pset) {
        try {
            SeparationFamily fam =
                general_anchored(emb, pid, comp1, inner_comps, pset, gf, p1);
            if (verify_family(emb.g, fam).ok) return fam;
            if (why.empty()) why = "family fails verification";
        } catch (const error& e) {
            if (why.empty()) why = e.what();
        }
    }
    for (Vertex p1 : pset) {
        try {
            SeparationFamily fam =
                general_anchored(emb, pid, comp1, inner_comps, pset, gf, p1);
            if (auto s2 = complete_second_order(emb.g, fam[0])) {
                SeparationFamily done{fam[0], *s2};
                if (verify_family(emb.g, done).ok) return done;
            }
        } catch (const error&) {
        }
    }
    throw structural_error("no chord anchor yields a separating family: " + why);
}

namespace {

SeparationFamily general_anchored(const TwoOuterEmbedding& emb,
                                  const std::vector<int>& pid,
                                  const std::vector<int>& comp1,
                                  const std::set<int>& inner_comps,
                                  const std::set<Vertex>& pset,
                                  const GlobalFaces& gf, Vertex p1) {
    const int n = emb.g.vertex_count();
    std::vector<Vertex> cyc = rotate_to(emb.outer_cycle, p1);
    const int n2 = cyc.size();

    struct Region {
        int piece;
        std::vector<Vertex> comp_verts;
        Vertex start = -1;
        std::vector<Vertex> a1, a2;
    };
    std::vector<Region> regions;
    std::map<int, int> region_of_piece;
    for (int c : inner_comps) {
        Vertex any = -1;
        for (Vertex v = 0; v < n && any < 0; ++v)
            if (emb.layer[v] == 1 && comp1[v] == c) any = v;
        int piece = pid[any];
        if (region_of_piece.count(piece))
            throw structural_error("two inner components share a chord region");
        region_of_piece[piece] = regions.size();
        Region r;
        r.piece = piece;
        for (Vertex v = 0; v < n; ++v)
            if (emb.layer[v] == 1 && comp1[v] == c) r.comp_verts.push_back(v);
        regions.push_back(std::move(r));
    }

    // Clockwise inspection at each outer vertex, starting from the side of
    // its cycle predecessor: the first inward edge into an unseen region
    // claims it. The region wrapping around the start vertex comes first.
    std::vector<std::vector<int>> newly(n2);
    {
        std::vector<char> labeled(regions.size(), 0);
        for (int t = 0; t < n2; ++t) {
            Vertex pj = cyc[t];
            Vertex prv = cyc[(t - 1 + n2) % n2];
            Vertex nxt = cyc[(t + 1) % n2];
            const auto& rot = emb.rotation[pj];
            const int L = rot.size();
            int k = -1;
            for (int i = 0; i < L; ++i)
                if (rot[i] == prv) { k = i; break; }
            if (k < 0) throw structural_error("outer rotation is missing its cycle predecessor");
            for (int step = 1; step < L; ++step) {
                Vertex w = rot[((k - step) % L + L) % L];
                if (w == nxt) break;
                if (emb.layer[w] != 1) continue;
                auto rit = region_of_piece.find(pid[w]);
                if (rit == region_of_piece.end())
                    throw structural_error("inner vertex outside every chord region");
                int r = rit->second;
                if (!labeled[r]) {
                    labeled[r] = 1;
                    regions[r].start = pj;
                    newly[t].push_back(r);
                }
            }
        }
        for (size_t r = 0; r < regions.size(); ++r)
            if (!labeled[r])
                throw structural_error("a chord region is never reached from the outer cycle");
    }

    for (Region& r : regions) {
        std::vector<char> inpiece(n, 0), inset(n, 0);
        for (Vertex v = 0; v < n; ++v)
            if (pid[v] == r.piece) inpiece[v] = inset[v] = 1;
        for (Vertex p : pset)
            for (Vertex w : emb.g.neighbors(p))
                if (inpiece[w]) { inset[p] = 1; break; }
        std::vector<Vertex> verts;
        for (Vertex v = 0; v < n; ++v)
            if (inset[v]) verts.push_back(v);

        std::set<Edge> edges_r;
        for (const Edge& e : emb.g.edges())
            if (inpiece[e.u] || inpiece[e.v]) edges_r.insert(e);
        {
            std::vector<Vertex> bverts;
            for (Vertex v : cyc)
                if (inset[v] && emb.layer[v] == 2) bverts.push_back(v);
            const int B = bverts.size();
            for (int i = 0; i < B; ++i) {
                Vertex a = bverts[i], b = bverts[(i + 1) % B];
                if (a == b) continue;
                if (!emb.g.has_edge(a, b))
                    throw structural_error("chord region boundary has a gap");
                edges_r.insert(Edge(a, b));
            }
        }

        std::vector<std::vector<Vertex>> prot(n);
        for (Vertex v : verts)
            for (Vertex w : emb.rotation[v])
                if (inset[w] && edges_r.count(Edge(v, w))) prot[v].push_back(w);
        std::vector<Edge> pedges(edges_r.begin(), edges_r.end());
        Graph psub(n, pedges);

        std::vector<Vertex> outer_walk = boundary_orbit(psub, prot, gf);
        std::reverse(outer_walk.begin(), outer_walk.end());

        // Inner walks: boundary orbits of what is left inside.
        std::vector<std::vector<Vertex>> walks_r;
        {
            std::set<Vertex> outer_set(outer_walk.begin(), outer_walk.end());
            std::vector<char> seen(n, 0);
            for (Vertex v : verts) {
                if (outer_set.count(v) || seen[v]) continue;
                std::vector<Vertex> comp{v};
                seen[v] = 1;
                for (size_t qi = 0; qi < comp.size(); ++qi)
                    for (Vertex w : prot[comp[qi]]) {
                        if (outer_set.count(w) || seen[w]) continue;
                        seen[w] = 1;
                        comp.push_back(w);
                    }
                if (comp.size() == 1 && prot[v].empty()) {
                    walks_r.push_back({v});
                    continue;
                }
                std::set<Vertex> cset(comp.begin(), comp.end());
                std::vector<std::vector<Vertex>> crot(n);
                std::vector<Edge> cedges;
                for (Vertex a : comp)
                    for (Vertex w : prot[a])
                        if (cset.count(w)) {
                            crot[a].push_back(w);
                            if (a < w) cedges.push_back(Edge(a, w));
                        }
                if (cedges.empty()) {
                    walks_r.push_back({v});
                    continue;
                }
                walks_r.push_back(boundary_orbit(Graph(n, cedges), crot, gf));
            }
        }

        // Relabel into a compact region embedding.
        std::vector<int> loc(n, -1);
        for (int i = 0; i < static_cast<int>(verts.size()); ++i) loc[verts[i]] = i;
        auto map_seq = [&](const std::vector<Vertex>& seq) {
            std::vector<Vertex> out;
            out.reserve(seq.size());
            for (Vertex v : seq) out.push_back(loc[v]);
            return out;
        };
        std::vector<Edge> ledges;
        for (const Edge& e : pedges) ledges.push_back(Edge(loc[e.u], loc[e.v]));
        std::vector<std::vector<Vertex>> lrot(verts.size());
        for (Vertex v : verts) lrot[loc[v]] = map_seq(prot[v]);
        std::vector<std::vector<Vertex>> lwalks;
        for (const auto& w : walks_r) lwalks.push_back(map_seq(w));
        TwoOuterEmbedding er = make_embedding(Graph(verts.size(), ledges),
                                              map_seq(outer_walk), lwalks, lrot);

        Vertex start_local = loc[r.start];
        bool has_inner = false;
        for (int lv : er.layer)
            if (lv == 1) { has_inner = true; break; }

        SeparationFamily fam;
        if (!has_inner) {
            if (!er.outer_simple()) er = make_outer_biconnected(er);
            auto c0 = rotate_to(er.outer_cycle, start_local);
            fam = {CircularOrder(c0), CircularOrder(c0)};
        } else {
            if (!er.outer_simple()) er = make_outer_biconnected(er);
            er = triangulate_maximal(er);
            EdgePartition rp = classify_edges(er);
            Graph rg1(er.g.vertex_count(), rp.e1);
            auto rcomp = rg1.components();
            int first = -1;
            bool connected_inner = true;
            for (Vertex v = 0; v < er.g.vertex_count(); ++v) {
                if (er.layer[v] != 1) continue;
                if (first < 0) first = v;
                else if (rcomp[v] != rcomp[first]) connected_inner = false;
            }
            if (connected_inner) {
                // The labeling anchor is the natural start, but some regions
                // only separate from another boundary vertex.
                std::vector<Vertex> cands{start_local};
                for (Vertex v = 0; v < er.g.vertex_count(); ++v) {
                    if (er.layer[v] != 2 || v == start_local) continue;
                    for (Vertex w : er.g.neighbors(v))
                        if (er.layer[w] == 1) { cands.push_back(v); break; }
                }
                bool got = false;
                std::string rwhy;
                for (Vertex s : cands) {
                    try {
                        SeparationFamily f = construct_connected(er, s);
                        if (verify_family(er.g, f).ok) {
                            fam = std::move(f);
                            got = true;
                            break;
                        }
                        if (rwhy.empty()) rwhy = "family fails verification";
                    } catch (const error& e) {
                        if (rwhy.empty()) rwhy = e.what();
                    }
                }
                for (Vertex s : cands) {
                    if (got) break;
                    try {
                        SeparationFamily f = construct_connected(er, s);
                        auto s2 = complete_second_order(er.g, f[0]);
                        if (!s2) continue;
                        SeparationFamily fx{f[0], *s2};
                        if (verify_family(er.g, fx).ok) {
                            fam = std::move(fx);
                            got = true;
                        }
                    } catch (const error&) {
                    }
                }
                if (!got)
                    throw structural_error("region admits no separating family: " + rwhy);
            } else {
                fam = construct_general(er);
            }
        }

        std::vector<char> incomp(verts.size(), 0);
        for (Vertex v : r.comp_verts) incomp[loc[v]] = 1;
        for (Vertex v : fam[0].seq())
            if (incomp[v]) r.a1.push_back(verts[v]);
        for (Vertex v : fam[1].seq())
            if (incomp[v]) r.a2.push_back(verts[v]);
    }

    std::vector<Vertex> s1, s2;
    for (int t = 0; t < n2; ++t) {
        s1.push_back(cyc[t]);
        for (int r : newly[t])
            s1.insert(s1.end(), regions[r].a1.begin(), regions[r].a1.end());
    }
    for (int t = 0; t < n2; ++t) {
        const auto& bs = newly[t];
        size_t cut = 0;
        while (cut < bs.size()) {
            bool touches = false;
            for (Vertex v : regions[bs[cut]].a2)
                if (emb.g.has_edge(cyc[t], v)) { touches = true; break; }
            if (!touches) break;
            ++cut;
        }
        for (size_t i = 0; i < cut; ++i)
            s2.insert(s2.end(), regions[bs[i]].a2.begin(), regions[bs[i]].a2.end());
        s2.push_back(cyc[t]);
        for (size_t i = cut; i < bs.size(); ++i)
            s2.insert(s2.end(), regions[bs[i]].a2.begin(), regions[bs[i]].a2.end());
    }
    return {CircularOrder(s1), CircularOrder(s2)};
}

// Components with no edge to the rest are re-attached to the smallest
// outer vertex so the later stages see one connected drawing. The floater
// lands in the face corner right after that vertex's cycle successor.
TwoOuterEmbedding attach_isolated(TwoOuterEmbedding emb) {
    const int n = emb.g.vertex_count();
    for (;;) {
        auto comp = emb.g.components();
        int main_comp = comp[emb.outer_cycle[0]];
        Vertex probe = -1;
        for (Vertex v = 0; v < n && probe < 0; ++v)
            if (comp[v] != main_comp) probe = v;
        if (probe < 0) return emb;

        const std::vector<Vertex>* walk = nullptr;
        for (const auto& w : emb.inner_walks)
            if (std::find(w.begin(), w.end(), probe) != w.end()) { walk = &w; break; }
        if (!walk) throw structural_error("floating component has no inner walk");
        Vertex x = (*walk)[0];

        Vertex u = -1;
        for (Vertex v = 0; v < n && u < 0; ++v)
            if (emb.layer[v] == 2) u = v;

        std::vector<Edge> edges = emb.g.edges();
        edges.push_back(Edge(u, x));
        emb.g = Graph(n, edges);
        {
            size_t i = 0;
            while (emb.outer_cycle[i] != u) ++i;
            Vertex succ = emb.outer_cycle[(i + 1) % emb.outer_cycle.size()];
            auto& rot = emb.rotation[u];
            auto it = std::find(rot.begin(), rot.end(), succ);
            rot.insert(it + 1, x);
        }
        if (walk->size() == 1) {
            emb.rotation[x] = {u};
        } else {
            // Exterior corner at x: between its walk successor and walk
            // predecessor, so insert just before the predecessor.
            size_t i = 0;
            while ((*walk)[i] != x) ++i;
            Vertex a = (*walk)[(i + walk->size() - 1) % walk->size()];
            auto& rot = emb.rotation[x];
            rot.insert(std::find(rot.begin(), rot.end(), a), u);
        }
    }
}

} // namespace

SeparationFamily construct_two_outerplanar(const TwoOuterEmbedding& embedding) {
    validate_embedding(embedding);
    TwoOuterEmbedding emb = embedding;
    bool has_inner = false;
    for (int lv : emb.layer)
        if (lv == 1) { has_inner = true; break; }
    SeparationFamily fam;
    if (!has_inner) {
        if (!emb.outer_simple()) emb = make_outer_biconnected(emb);
        fam = {CircularOrder(emb.outer_cycle)};
    } else {
        emb = attach_isolated(std::move(emb));
        emb = make_outer_biconnected(emb);
        emb = triangulate_maximal(emb);
        fam = construct_general(emb);
    }
    // The stages only add edges, so the family is checked against the graph
    // as given.
    if (!verify_family(embedding.g, fam).ok)
        throw structural_error("constructed family fails verification");
    return fam;
}

} // namespace circsep
