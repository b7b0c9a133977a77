#include "circsep/exact.hpp"

#include <algorithm>
#include <numeric>

namespace circsep {

namespace {

int mask_words(int bits) { return (bits + 63) / 64; }

bool mask_full(const CoverageMask& m, int bits) {
    for (int i = 0; i < bits; ++i)
        if (!((m[i / 64] >> (i % 64)) & 1)) return false;
    return true;
}

CoverageMask mask_or(const CoverageMask& a, const CoverageMask& b) {
    CoverageMask out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] | b[i];
    return out;
}

bool mask_subsumes(const CoverageMask& big, const CoverageMask& small) {
    for (std::size_t i = 0; i < big.size(); ++i)
        if ((small[i] & ~big[i]) != 0) return false;
    return true;
}

struct Candidate {
    CoverageMask mask;
    int order_index;
};

// Depth-limited exact cover: branch on an uncovered pair over the masks
// that cover it.
bool cover_search(const std::vector<Candidate>& cands, const CoverageMask& covered,
                  int bits, int depth_left, std::vector<int>& chosen) {
    if (mask_full(covered, bits)) return true;
    if (depth_left == 0) return false;
    int pivot = -1;
    for (int i = 0; i < bits; ++i) {
        if (!((covered[i / 64] >> (i % 64)) & 1)) {
            pivot = i;
            break;
        }
    }
    for (std::size_t c = 0; c < cands.size(); ++c) {
        if (!((cands[c].mask[pivot / 64] >> (pivot % 64)) & 1)) continue;
        chosen.push_back(static_cast<int>(c));
        if (cover_search(cands, mask_or(covered, cands[c].mask), bits, depth_left - 1, chosen))
            return true;
        chosen.pop_back();
    }
    return false;
}

} // namespace

CoverageMask coverage_of(const CircularOrder& o, const PairIndex& idx) {
    CoverageMask m(mask_words(idx.count()), 0);
    for (int i = 0; i < idx.count(); ++i) {
        const auto& [e, f] = idx.pairs()[i];
        if (!alternates(o, e, f)) m[i / 64] |= std::uint64_t{1} << (i % 64);
    }
    return m;
}

std::vector<CircularOrder> enumerate_canonical_orderings(int n) {
    if (n < 0) throw input_error("vertex count must be nonnegative");
    std::vector<CircularOrder> out;
    if (n <= 2) {
        std::vector<Vertex> seq(n);
        std::iota(seq.begin(), seq.end(), 0);
        out.emplace_back(std::move(seq));
        return out;
    }
    std::vector<Vertex> rest(n - 1);
    std::iota(rest.begin(), rest.end(), 1);
    do {
        if (rest.front() > rest.back()) continue;
        std::vector<Vertex> seq;
        seq.reserve(n);
        seq.push_back(0);
        seq.insert(seq.end(), rest.begin(), rest.end());
        out.emplace_back(std::move(seq));
    } while (std::next_permutation(rest.begin(), rest.end()));
    return out;
}

ExactResult exact_pi_circ(const Graph& g, const ExactOptions& opt) {
    if (opt.kmax < 1) throw input_error("kmax must be at least 1");
    if (g.vertex_count() > opt.bound)
        throw capability_error("graph too large for exhaustive search");

    ExactResult res;
    PairIndex idx(g);
    auto orders = enumerate_canonical_orderings(g.vertex_count());

    if (idx.count() == 0) {
        res.determined = true;
        res.k = 1;
        res.vacuous = true;
        res.family = {orders.front()};
        return res;
    }

    const int bits = idx.count();
    std::vector<Candidate> cands;
    for (int i = 0; i < static_cast<int>(orders.size()); ++i)
        cands.push_back({coverage_of(orders[i], idx), i});

    // Drop dominated masks; any minimum cover survives the substitution.
    std::vector<char> dead(cands.size(), 0);
    for (std::size_t a = 0; a < cands.size(); ++a) {
        if (dead[a]) continue;
        for (std::size_t b = 0; b < cands.size(); ++b) {
            if (a == b || dead[b]) continue;
            if (mask_subsumes(cands[a].mask, cands[b].mask)) dead[b] = 1;
        }
    }
    std::vector<Candidate> kept;
    for (std::size_t i = 0; i < cands.size(); ++i)
        if (!dead[i]) kept.push_back(std::move(cands[i]));

    CoverageMask empty(mask_words(bits), 0);
    for (int k = 1; k <= opt.kmax; ++k) {
        std::vector<int> chosen;
        if (cover_search(kept, empty, bits, k, chosen)) {
            res.determined = true;
            res.k = k;
            for (int c : chosen) res.family.push_back(orders[kept[c].order_index]);
            return res;
        }
    }
    return res;
}

bool is_outerplanar_small(const Graph& g, int bound) {
    ExactOptions opt;
    opt.kmax = 1;
    opt.bound = bound;
    return exact_pi_circ(g, opt).determined;
}

} // namespace circsep
