#include "circsep/generate.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "circsep/errors.hpp"

namespace circsep {

namespace {

using Tri = std::array<Vertex, 3>;

int below(std::mt19937_64& rng, int m) {
    return static_cast<int>(rng() % static_cast<std::uint64_t>(m));
}

struct EarSplit {
    std::vector<Edge> diagonals;
    std::vector<Tri> triangles; // counter-clockwise like the input cycle
};

EarSplit ear_triangulation(const std::vector<Vertex>& cycle, std::mt19937_64& rng) {
    EarSplit out;
    std::vector<Vertex> poly = cycle;
    while (poly.size() > 3) {
        const int s = static_cast<int>(poly.size());
        int t = below(rng, s);
        Vertex a = poly[(t + s - 1) % s];
        Vertex b = poly[t];
        Vertex c = poly[(t + 1) % s];
        out.diagonals.push_back(Edge(a, c));
        out.triangles.push_back({a, b, c});
        poly.erase(poly.begin() + t);
    }
    if (poly.size() == 3) out.triangles.push_back({poly[0], poly[1], poly[2]});
    return out;
}

// Triangulates the ring between an enclosing cycle and an enclosed
// boundary, both consumed counter-clockwise. A repeated chord flips the
// step direction when possible; only the closing step may duplicate the
// seed edge.
void zip(const std::vector<Vertex>& ring, const std::vector<Vertex>& q,
         std::mt19937_64& rng, std::set<Edge>& edges, std::vector<Tri>& faces) {
    const int R = static_cast<int>(ring.size());
    const int Q = q.size() == 1 ? 0 : static_cast<int>(q.size());
    auto rv = [&](int i) { return ring[i % R]; };
    auto qv = [&](int j) { return q[j % static_cast<int>(q.size())]; };
    edges.insert(Edge(rv(0), qv(0)));
    int i = 0, j = 0;
    while (i < R || j < Q) {
        bool can_outer = i < R, can_inner = j < Q;
        bool outer_step = can_outer && can_inner ? below(rng, 2) == 0 : can_outer;
        {
            Edge probe = outer_step ? Edge(rv(i + 1), qv(j)) : Edge(rv(i), qv(j + 1));
            bool closing = outer_step ? (i + 1 == R && j == Q) : (j + 1 == Q && i == R);
            if (edges.count(probe) && !closing && (outer_step ? can_inner : can_outer))
                outer_step = !outer_step;
        }
        if (outer_step) {
            Edge e(rv(i + 1), qv(j));
            if (edges.count(e) && !(i + 1 == R && j == Q))
                throw structural_error("ring fill repeated a chord");
            edges.insert(e);
            faces.push_back({rv(i), rv(i + 1), qv(j)});
            ++i;
        } else {
            Edge e(rv(i), qv(j + 1));
            if (edges.count(e) && !(j + 1 == Q && i == R))
                throw structural_error("ring fill repeated a chord");
            edges.insert(e);
            faces.push_back({rv(i), qv(j + 1), qv(j)});
            ++j;
        }
    }
}

// Inverts a face list into rotations: a counter-clockwise corner (a, v, b)
// pins a as the successor of b around v.
std::vector<std::vector<Vertex>> rotations_from_faces(
    int n, const std::vector<std::vector<Vertex>>& faces) {
    std::vector<std::map<Vertex, Vertex>> succ(n);
    for (const auto& f : faces) {
        const int L = static_cast<int>(f.size());
        for (int t = 0; t < L; ++t) {
            Vertex a = f[(t + L - 1) % L], v = f[t], b = f[(t + 1) % L];
            if (!succ[v].emplace(b, a).second)
                throw structural_error("face corners conflict");
        }
    }
    std::vector<std::vector<Vertex>> rot(n);
    for (Vertex v = 0; v < n; ++v) {
        if (succ[v].empty()) continue;
        Vertex first = succ[v].begin()->first;
        Vertex cur = first;
        for (size_t step = 0; step <= succ[v].size(); ++step) {
            rot[v].push_back(cur);
            auto it = succ[v].find(cur);
            if (it == succ[v].end())
                throw structural_error("face corners incomplete");
            cur = it->second;
            if (cur == first) break;
        }
        if (rot[v].size() != succ[v].size())
            throw structural_error("rotation splits into several cycles");
    }
    return rot;
}

TwoOuterEmbedding relabel_embedding(const TwoOuterEmbedding& emb, std::mt19937_64& rng) {
    const int n = emb.g.vertex_count();
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    auto map_seq = [&](const std::vector<Vertex>& s) {
        std::vector<Vertex> out;
        out.reserve(s.size());
        for (Vertex v : s) out.push_back(perm[v]);
        return out;
    };
    std::vector<Edge> edges;
    for (const Edge& e : emb.g.edges()) edges.push_back(Edge(perm[e.u], perm[e.v]));
    std::vector<std::vector<Vertex>> rot(n), walks;
    for (Vertex v = 0; v < n; ++v) rot[perm[v]] = map_seq(emb.rotation[v]);
    for (const auto& w : emb.inner_walks) walks.push_back(map_seq(w));
    return make_embedding(Graph(n, edges), map_seq(emb.outer_cycle), walks, rot);
}

std::vector<Vertex> iota_labels(int count, int from) {
    std::vector<Vertex> out(count);
    std::iota(out.begin(), out.end(), from);
    return out;
}

TwoOuterEmbedding build_annulus(int n, std::mt19937_64& rng) {
    const int n1 = 1 + below(rng, n - 3);
    const int n2 = n - n1;
    std::vector<Vertex> ring = iota_labels(n2, 0);
    std::vector<Vertex> inner = iota_labels(n1, n2);
    std::shuffle(inner.begin(), inner.end(), rng);

    std::set<Edge> edges;
    for (int i = 0; i < n2; ++i) edges.insert(Edge(ring[i], ring[(i + 1) % n2]));
    std::vector<std::vector<Vertex>> faces, walks;
    if (n1 >= 3) {
        for (int j = 0; j < n1; ++j) edges.insert(Edge(inner[j], inner[(j + 1) % n1]));
        EarSplit ear = ear_triangulation(inner, rng);
        for (const Edge& d : ear.diagonals) edges.insert(d);
        for (const Tri& t : ear.triangles) faces.push_back({t[0], t[1], t[2]});
        walks.push_back({inner.rbegin(), inner.rend()});
    } else if (n1 == 2) {
        edges.insert(Edge(inner[0], inner[1]));
        walks.push_back(inner);
    } else {
        walks.push_back(inner);
    }
    std::vector<Tri> zf;
    zip(ring, inner, rng, edges, zf);
    for (const Tri& t : zf) faces.push_back({t[0], t[1], t[2]});
    faces.push_back({ring.rbegin(), ring.rend()});
    auto rot = rotations_from_faces(n, faces);
    return make_embedding(Graph(n, std::vector<Edge>(edges.begin(), edges.end())),
                          ring, walks, rot);
}

TwoOuterEmbedding build_cactus(int n, std::mt19937_64& rng) {
    const int n1 = 4 + below(rng, n - 3 - 4 + 1);
    const int n2 = n - n1;
    std::vector<Vertex> ring = iota_labels(n2, 0);
    std::vector<Vertex> pool = iota_labels(n1, n2);
    std::shuffle(pool.begin(), pool.end(), rng);

    struct Blk {
        Vertex cut = -1;
        std::vector<Vertex> cyc; // starts at cut except for the first block
        bool bridge = false;
    };
    std::vector<Blk> blks;
    int used = 0;
    {
        Blk b;
        int s0 = 3 + below(rng, std::min(4, n1 - 1 - 3 + 1));
        for (int t = 0; t < s0; ++t) b.cyc.push_back(pool[used++]);
        blks.push_back(std::move(b));
    }
    while (used < n1) {
        const int room = n1 - used;
        Blk b;
        b.cut = pool[below(rng, used)];
        if (room == 1 || below(rng, 4) == 0) {
            b.bridge = true;
            b.cyc = {b.cut, pool[used++]};
        } else {
            b.cyc.push_back(b.cut);
            int extra = 2 + below(rng, std::min(4, room - 2 + 1));
            for (int t = 0; t < extra; ++t) b.cyc.push_back(pool[used++]);
        }
        blks.push_back(std::move(b));
    }

    std::set<Edge> edges;
    for (int i = 0; i < n2; ++i) edges.insert(Edge(ring[i], ring[(i + 1) % n2]));
    std::vector<std::vector<Vertex>> faces;
    std::vector<Vertex> walk;
    for (const Blk& b : blks) {
        std::vector<Vertex> bwalk;
        if (b.bridge) {
            edges.insert(Edge(b.cyc[0], b.cyc[1]));
            bwalk = b.cyc;
        } else {
            const int L = static_cast<int>(b.cyc.size());
            for (int t = 0; t < L; ++t) edges.insert(Edge(b.cyc[t], b.cyc[(t + 1) % L]));
            EarSplit ear = ear_triangulation(b.cyc, rng);
            for (const Edge& d : ear.diagonals) edges.insert(d);
            for (const Tri& t : ear.triangles) faces.push_back({t[0], t[1], t[2]});
            // clockwise boundary, rotated to begin at the cut when glued
            bwalk.assign(b.cyc.rbegin(), b.cyc.rend());
            if (b.cut >= 0) {
                auto it = std::find(bwalk.begin(), bwalk.end(), b.cut);
                std::rotate(bwalk.begin(), it, bwalk.end());
            }
        }
        if (walk.empty()) {
            walk = bwalk;
            continue;
        }
        auto it = std::find(walk.begin(), walk.end(), b.cut);
        if (it == walk.end()) throw structural_error("cut vertex missing from walk");
        const size_t pos = it - walk.begin();
        std::vector<Vertex> spliced(walk.begin(), walk.begin() + pos + 1);
        spliced.insert(spliced.end(), bwalk.begin() + 1, bwalk.end());
        spliced.push_back(b.cut);
        spliced.insert(spliced.end(), walk.begin() + pos + 1, walk.end());
        walk = std::move(spliced);
    }

    std::vector<Vertex> q(walk.rbegin(), walk.rend());
    std::vector<Tri> zf;
    zip(ring, q, rng, edges, zf);
    for (const Tri& t : zf) faces.push_back({t[0], t[1], t[2]});
    faces.push_back({ring.rbegin(), ring.rend()});
    auto rot = rotations_from_faces(n, faces);
    return make_embedding(Graph(n, std::vector<Edge>(edges.begin(), edges.end())),
                          ring, {walk}, rot);
}

TwoOuterEmbedding build_pockets(int n, std::mt19937_64& rng) {
    const int n2 = 7 + below(rng, n - 2 - 7 + 1);
    const int n1 = n - n2;
    int r = 2;
    if (n1 >= 3 && n2 >= 10 && below(rng, 2) == 0) r = 3;
    std::vector<int> sizes(r, 1);
    for (int rest = n1 - r; rest > 0; --rest) sizes[below(rng, r)] += 1;

    // Arcs sit in ring positions 1..n2-1; vertex 0 stays on the central
    // face. Each arc spans width+1 vertices with one spare slot after it.
    std::vector<int> width(r, 2), gap(r + 1, 0);
    for (int s = (n2 - 1) - 3 * r; s > 0; --s) {
        if (below(rng, 2) == 0) width[below(rng, r)] += 1;
        else gap[below(rng, r + 1)] += 1;
    }
    std::vector<std::pair<int, int>> arcs;
    {
        int pos = 1;
        for (int t = 0; t < r; ++t) {
            pos += gap[t];
            arcs.push_back({pos, pos + width[t]});
            pos += width[t] + 1;
        }
    }

    std::vector<Vertex> ring = iota_labels(n2, 0);
    std::set<Edge> edges;
    for (int i = 0; i < n2; ++i) edges.insert(Edge(ring[i], ring[(i + 1) % n2]));
    std::vector<std::vector<Vertex>> faces, walks;
    int next_label = n2;
    for (int t = 0; t < r; ++t) {
        auto [a, b] = arcs[t];
        std::vector<Vertex> pocket;
        for (int i = a; i <= b; ++i) pocket.push_back(i);
        edges.insert(Edge(a, b));
        const int s = sizes[t];
        std::vector<Vertex> comp = iota_labels(s, next_label);
        next_label += s;
        std::shuffle(comp.begin(), comp.end(), rng);
        if (s >= 3) {
            for (int j = 0; j < s; ++j) edges.insert(Edge(comp[j], comp[(j + 1) % s]));
            EarSplit ear = ear_triangulation(comp, rng);
            for (const Edge& d : ear.diagonals) edges.insert(d);
            for (const Tri& tr : ear.triangles) faces.push_back({tr[0], tr[1], tr[2]});
            walks.push_back({comp.rbegin(), comp.rend()});
        } else if (s == 2) {
            edges.insert(Edge(comp[0], comp[1]));
            walks.push_back(comp);
        } else {
            walks.push_back(comp);
        }
        std::vector<Tri> zf;
        zip(pocket, comp, rng, edges, zf);
        for (const Tri& tr : zf) faces.push_back({tr[0], tr[1], tr[2]});
    }
    std::vector<Vertex> central;
    for (int i = 0; i < n2; ++i) {
        central.push_back(i);
        for (const auto& [a, b] : arcs)
            if (i == a) { i = b - 1; break; }
    }
    faces.push_back(central);
    faces.push_back({ring.rbegin(), ring.rend()});
    auto rot = rotations_from_faces(n, faces);
    return make_embedding(Graph(n, std::vector<Edge>(edges.begin(), edges.end())),
                          ring, walks, rot);
}

} // namespace

TwoOuterEmbedding gen_outerplanar(int n, std::uint64_t seed) {
    if (n < 3) throw input_error("outerplanar generation needs at least 3 vertices");
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
    std::vector<Vertex> cyc = iota_labels(n, 0);
    std::shuffle(cyc.begin(), cyc.end(), rng);
    EarSplit ear = ear_triangulation(cyc, rng);
    std::set<Edge> edges;
    for (int i = 0; i < n; ++i) edges.insert(Edge(cyc[i], cyc[(i + 1) % n]));
    for (const Edge& d : ear.diagonals) edges.insert(d);
    std::vector<std::vector<Vertex>> faces;
    for (const Tri& t : ear.triangles) faces.push_back({t[0], t[1], t[2]});
    faces.push_back({cyc.rbegin(), cyc.rend()});
    auto rot = rotations_from_faces(n, faces);
    TwoOuterEmbedding emb = make_embedding(
        Graph(n, std::vector<Edge>(edges.begin(), edges.end())), cyc, {}, rot);
    validate_embedding(emb);
    return emb;
}

TwoOuterEmbedding gen_two_outerplanar(int n, std::uint64_t seed) {
    if (n < 4) throw input_error("two-layer generation needs at least 4 vertices");
    int mode = static_cast<int>(seed % 3);
    if (mode == 1 && n < 8) mode = 0;
    if (mode == 2 && n < 10) mode = 0;
    std::string last;
    for (int attempt = 0; attempt < 40; ++attempt) {
        std::mt19937_64 rng(seed * 1000003ull + static_cast<std::uint64_t>(attempt) * 7919ull + 17ull);
        try {
            TwoOuterEmbedding emb = mode == 0   ? build_annulus(n, rng)
                                    : mode == 1 ? build_cactus(n, rng)
                                                : build_pockets(n, rng);
            validate_embedding(emb);
            std::mt19937_64 shuffler(seed * 31ull + static_cast<std::uint64_t>(attempt) + 5ull);
            TwoOuterEmbedding out = relabel_embedding(emb, shuffler);
            validate_embedding(out);
            return out;
        } catch (const error& e) {
            last = e.what();
        }
    }
    throw structural_error("two-layer generation did not converge: " + last);
}

Graph gen_series_parallel(int n, std::uint64_t seed) {
    if (n < 2) throw input_error("series-parallel generation needs at least 2 vertices");
    std::mt19937_64 rng(seed * 2654435761ull + 99ull);
    std::vector<std::pair<Vertex, Vertex>> medges{{0, 1}};
    int v = 2;
    while (v < n) {
        int pick = below(rng, static_cast<int>(medges.size()));
        bool series = below(rng, 10) < 6 || static_cast<int>(medges.size()) > 4 * n;
        if (series) {
            auto [a, b] = medges[pick];
            medges.erase(medges.begin() + pick);
            medges.push_back({a, v});
            medges.push_back({v, b});
            ++v;
        } else {
            medges.push_back(medges[pick]);
        }
    }
    std::set<Edge> simple;
    for (auto [a, b] : medges)
        if (a != b) simple.insert(Edge(a, b));
    return Graph(n, std::vector<Edge>(simple.begin(), simple.end()));
}

} // namespace circsep
