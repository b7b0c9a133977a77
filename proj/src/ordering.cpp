#include "circsep/ordering.hpp"

#include <algorithm>

namespace circsep {

namespace {

std::vector<int> index_positions(const std::vector<Vertex>& seq) {
    Vertex top = -1;
    for (Vertex v : seq) {
        if (v < 0) throw input_error("ordering labels must be nonnegative");
        top = std::max(top, v);
    }
    std::vector<int> pos(top + 1, -1);
    for (int i = 0; i < static_cast<int>(seq.size()); ++i) {
        if (pos[seq[i]] != -1) throw input_error("repeated label in ordering");
        pos[seq[i]] = i;
    }
    return pos;
}

bool lookup_contains(const std::vector<int>& pos, Vertex v) {
    return v >= 0 && v < static_cast<int>(pos.size()) && pos[v] != -1;
}

int lookup_position(const std::vector<int>& pos, Vertex v) {
    if (!lookup_contains(pos, v)) throw input_error("label not in ordering");
    return pos[v];
}

std::vector<Vertex> filter_seq(const std::vector<Vertex>& seq, const std::vector<Vertex>& keep) {
    std::vector<char> mark;
    for (Vertex v : keep) {
        if (v < 0) throw input_error("ordering labels must be nonnegative");
        if (static_cast<int>(mark.size()) <= v) mark.resize(v + 1, 0);
        mark[v] = 1;
    }
    std::vector<Vertex> out;
    for (Vertex v : seq)
        if (v < static_cast<int>(mark.size()) && mark[v]) out.push_back(v);
    const auto wanted = std::count(mark.begin(), mark.end(), char(1));
    if (static_cast<long>(out.size()) != static_cast<long>(wanted))
        throw input_error("restriction set has labels outside the ordering");
    return out;
}

} // namespace

LinearOrder::LinearOrder(std::vector<Vertex> seq) : seq_(std::move(seq)) {
    pos_ = index_positions(seq_);
}

bool LinearOrder::contains(Vertex v) const { return lookup_contains(pos_, v); }
int LinearOrder::position(Vertex v) const { return lookup_position(pos_, v); }

LinearOrder LinearOrder::reversed() const {
    return LinearOrder(std::vector<Vertex>(seq_.rbegin(), seq_.rend()));
}

LinearOrder LinearOrder::restricted(const std::vector<Vertex>& keep) const {
    return LinearOrder(filter_seq(seq_, keep));
}

LinearOrder concat(const LinearOrder& a, const LinearOrder& b) {
    std::vector<Vertex> seq = a.seq();
    seq.insert(seq.end(), b.seq().begin(), b.seq().end());
    return LinearOrder(std::move(seq));
}

CircularOrder::CircularOrder(std::vector<Vertex> seq) : seq_(std::move(seq)) {
    pos_ = index_positions(seq_);
}

bool CircularOrder::contains(Vertex v) const { return lookup_contains(pos_, v); }
int CircularOrder::position(Vertex v) const { return lookup_position(pos_, v); }

CircularOrder CircularOrder::reversed() const {
    return CircularOrder(std::vector<Vertex>(seq_.rbegin(), seq_.rend()));
}

CircularOrder CircularOrder::restricted(const std::vector<Vertex>& keep) const {
    return CircularOrder(filter_seq(seq_, keep));
}

CircularOrder CircularOrder::canonical() const {
    if (seq_.empty()) return *this;
    auto it = std::min_element(seq_.begin(), seq_.end());
    std::vector<Vertex> rot(it, seq_.end());
    rot.insert(rot.end(), seq_.begin(), it);
    return CircularOrder(std::move(rot));
}

bool CircularOrder::operator==(const CircularOrder& o) const {
    if (seq_.size() != o.seq_.size()) return false;
    return canonical().seq() == o.canonical().seq();
}

bool alternates(const CircularOrder& o, const Edge& e, const Edge& f) {
    if (!e.disjoint_from(f)) throw contract_error("alternates requires vertex-disjoint edges");
    const int n = o.size();
    const int pa = o.position(e.u);
    const int pb = o.position(e.v);
    const int pc = o.position(f.u);
    const int pd = o.position(f.v);
    auto in_arc = [n](int x, int s, int t) {
        int dx = (x - s + n) % n;
        int dt = (t - s + n) % n;
        return 0 < dx && dx < dt;
    };
    return in_arc(pc, pa, pb) != in_arc(pd, pa, pb);
}

} // namespace circsep
