#include "circsep/io.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <set>
#include <sstream>

#include "circsep/errors.hpp"

namespace circsep {

namespace {

// Lines with comments stripped and tokens split; blank lines dropped.
std::vector<std::vector<std::string>> token_lines(std::istream& in) {
    std::vector<std::vector<std::string>> out;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string t;
        while (ls >> t) toks.push_back(t);
        if (!toks.empty()) out.push_back(std::move(toks));
    }
    return out;
}

int parse_int(const std::string& tok, const char* what) {
    size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(tok, &used);
    } catch (const std::exception&) {
        throw input_error(std::string("expected an integer ") + what + ", got '" + tok + "'");
    }
    if (used != tok.size())
        throw input_error(std::string("expected an integer ") + what + ", got '" + tok + "'");
    return value;
}

} // namespace

Vertex LabelMap::intern(const std::string& token) {
    auto it = ids.find(token);
    if (it != ids.end()) return it->second;
    Vertex v = static_cast<Vertex>(names.size());
    names.push_back(token);
    ids.emplace(token, v);
    return v;
}

Vertex LabelMap::lookup(const std::string& token) const {
    auto it = ids.find(token);
    if (it == ids.end()) throw input_error("unknown vertex label '" + token + "'");
    return it->second;
}

const std::string& LabelMap::name(Vertex v) const {
    if (v < 0 || v >= static_cast<Vertex>(names.size()))
        throw input_error("vertex id out of range");
    return names[static_cast<size_t>(v)];
}

LabelMap numeric_labels(int n) {
    LabelMap m;
    for (int v = 0; v < n; ++v) m.intern(std::to_string(v));
    return m;
}

GraphFile parse_graph(std::istream& in, bool string_labels) {
    auto lines = token_lines(in);
    if (lines.empty()) throw input_error("graph file is empty");
    if (lines[0].size() != 2)
        throw input_error("graph file must start with an 'n m' header");
    int n = parse_int(lines[0][0], "vertex count");
    int m = parse_int(lines[0][1], "edge count");
    if (n < 0 || m < 0) throw input_error("graph header counts must be nonnegative");
    if (static_cast<int>(lines.size()) - 1 != m)
        throw input_error("edge line count does not match the header");

    GraphFile out;
    out.labels = string_labels ? LabelMap{} : numeric_labels(n);
    std::vector<Edge> edges;
    for (int i = 1; i <= m; ++i) {
        if (lines[i].size() != 2)
            throw input_error("each edge line must hold exactly two labels");
        Vertex u, v;
        if (string_labels) {
            u = out.labels.intern(lines[i][0]);
            v = out.labels.intern(lines[i][1]);
            if (u >= n || v >= n)
                throw input_error("more labels than the header vertex count");
        } else {
            u = parse_int(lines[i][0], "vertex label");
            v = parse_int(lines[i][1], "vertex label");
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw input_error("vertex label out of range");
        }
        edges.push_back(Edge(u, v));
    }
    if (string_labels && static_cast<int>(out.labels.names.size()) != n)
        throw input_error("labels do not cover the header vertex count");
    out.g = Graph(n, std::move(edges));
    return out;
}

std::string emit_graph(const Graph& g, const LabelMap& labels) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges())
        out << labels.name(e.u) << ' ' << labels.name(e.v) << '\n';
    return out.str();
}

EmbeddingFile parse_embedding(std::istream& in, bool string_labels) {
    auto lines = token_lines(in);
    bool mirror = false;
    std::vector<std::string> outer_toks;
    std::vector<std::vector<std::string>> walk_toks;
    std::vector<std::pair<std::string, std::vector<std::string>>> rot_toks;
    for (const auto& toks : lines) {
        const std::string& key = toks[0];
        if (key == "orientation:") {
            if (toks.size() != 2 || (toks[1] != "cw" && toks[1] != "ccw"))
                throw input_error("orientation must be cw or ccw");
            mirror = toks[1] == "cw";
        } else if (key == "layer2:") {
            if (!outer_toks.empty())
                throw input_error("embedding file repeats the layer2 section");
            outer_toks.assign(toks.begin() + 1, toks.end());
        } else if (key == "walk:") {
            walk_toks.emplace_back(toks.begin() + 1, toks.end());
        } else if (key == "rot") {
            if (toks.size() < 2 || toks[1].back() != ':')
                throw input_error("rotation lines look like 'rot v: ...'");
            rot_toks.push_back({toks[1].substr(0, toks[1].size() - 1),
                                std::vector<std::string>(toks.begin() + 2, toks.end())});
        } else {
            throw input_error("unknown embedding section '" + key + "'");
        }
    }
    if (outer_toks.empty()) throw input_error("embedding file lacks a layer2 section");

    EmbeddingFile out;
    auto resolve = [&](const std::string& tok) -> Vertex {
        if (string_labels) return out.labels.intern(tok);
        int v = parse_int(tok, "vertex label");
        if (v < 0) throw input_error("vertex label out of range");
        return v;
    };
    std::vector<Vertex> outer;
    for (const auto& t : outer_toks) outer.push_back(resolve(t));
    std::vector<std::vector<Vertex>> walks;
    for (const auto& w : walk_toks) {
        if (w.empty()) throw input_error("empty walk line");
        std::vector<Vertex> walk;
        for (const auto& t : w) walk.push_back(resolve(t));
        walks.push_back(std::move(walk));
    }
    std::map<Vertex, std::vector<Vertex>> rot_map;
    for (const auto& [vt, nbrs] : rot_toks) {
        Vertex v = resolve(vt);
        if (rot_map.count(v)) throw input_error("duplicate rotation line");
        std::vector<Vertex> rot;
        for (const auto& t : nbrs) rot.push_back(resolve(t));
        rot_map[v] = std::move(rot);
    }

    int n = 0;
    if (string_labels) {
        n = static_cast<int>(out.labels.names.size());
    } else {
        for (Vertex v : outer) n = std::max(n, v + 1);
        for (const auto& w : walks)
            for (Vertex v : w) n = std::max(n, v + 1);
        for (const auto& [v, nbrs] : rot_map) {
            n = std::max(n, v + 1);
            for (Vertex w : nbrs) n = std::max(n, w + 1);
        }
        out.labels = numeric_labels(n);
    }

    std::vector<std::vector<Vertex>> rotation(n);
    for (auto& [v, nbrs] : rot_map) rotation[v] = std::move(nbrs);
    if (mirror) {
        std::reverse(outer.begin(), outer.end());
        for (auto& w : walks) std::reverse(w.begin(), w.end());
        for (auto& r : rotation) std::reverse(r.begin(), r.end());
    }

    // Edges are implied by the rotations, which must agree pairwise.
    std::vector<Edge> edges;
    for (Vertex v = 0; v < n; ++v) {
        std::set<Vertex> seen;
        for (Vertex w : rotation[v]) {
            if (!seen.insert(w).second)
                throw input_error("rotation repeats a neighbor");
            if (w < 0 || w >= n) throw input_error("vertex label out of range");
            if (v < w) edges.push_back(Edge(v, w));
        }
    }
    for (const Edge& e : edges) {
        const auto& r = rotation[e.v];
        if (std::find(r.begin(), r.end(), e.u) == r.end())
            throw input_error("rotations are not symmetric");
    }
    for (Vertex v = 0; v < n; ++v) {
        std::set<Vertex> back;
        for (Vertex w : rotation[v]) back.insert(w);
        for (Vertex w : back)
            if (std::find(rotation[w].begin(), rotation[w].end(), v) == rotation[w].end())
                throw input_error("rotations are not symmetric");
    }

    out.emb = make_embedding(Graph(n, std::move(edges)), std::move(outer),
                             std::move(walks), std::move(rotation));
    return out;
}

std::string emit_embedding(const TwoOuterEmbedding& emb, const LabelMap& labels) {
    std::ostringstream out;
    out << "orientation: ccw\n";
    out << "layer2:";
    for (Vertex v : emb.outer_cycle) out << ' ' << labels.name(v);
    out << '\n';
    for (const auto& w : emb.inner_walks) {
        out << "walk:";
        for (Vertex v : w) out << ' ' << labels.name(v);
        out << '\n';
    }
    for (Vertex v = 0; v < emb.g.vertex_count(); ++v) {
        out << "rot " << labels.name(v) << ':';
        for (Vertex w : emb.rotation[v]) out << ' ' << labels.name(w);
        out << '\n';
    }
    return out.str();
}

SeparationFamily parse_family(std::istream& in, const LabelMap& labels) {
    SeparationFamily fam;
    for (const auto& toks : token_lines(in)) {
        std::vector<Vertex> seq;
        for (const auto& t : toks) seq.push_back(labels.lookup(t));
        fam.push_back(CircularOrder(std::move(seq)));
    }
    return fam;
}

std::string emit_family(const SeparationFamily& family, const LabelMap& labels) {
    std::ostringstream out;
    for (const auto& o : family) {
        bool first = true;
        for (Vertex v : o.seq()) {
            if (!first) out << ' ';
            out << labels.name(v);
            first = false;
        }
        out << '\n';
    }
    return out.str();
}

} // namespace circsep
