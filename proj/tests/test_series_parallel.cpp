#include "doctest.h"

#include <map>
#include <utility>

#include "circsep/generate.hpp"
#include "circsep/separation.hpp"
#include "circsep/series_parallel.hpp"
#include "support.hpp"

using namespace circsep;

namespace {

// Replays a trace on the edge multiset and demands each step's precondition:
// a Series vertex has exactly the two recorded incidences, a Parallel merge
// needs a doubled edge, and a single terminal edge must remain at the end.
bool trace_replays(const Graph& g, const ReductionTrace& t) {
    std::map<std::pair<Vertex, Vertex>, int> mult;
    auto key = [](Vertex a, Vertex b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
    for (const auto& e : g.edges()) ++mult[key(e.u, e.v)];
    auto degree = [&](Vertex v) {
        int d = 0;
        for (const auto& [k, c] : mult)
            if (k.first == v || k.second == v) d += c;
        return d;
    };
    for (const auto& s : t.steps) {
        if (s.kind == ReductionKind::Series) {
            if (degree(s.x) != 2) return false;
            if (--mult[key(s.x, s.a)] < 0) return false;
            if (--mult[key(s.x, s.b)] < 0) return false;
            ++mult[key(s.a, s.b)];
        } else {
            if (mult[key(s.a, s.b)] < 2) return false;
            --mult[key(s.a, s.b)];
        }
    }
    int left = 0;
    for (const auto& [k, c] : mult) left += c;
    return left == 1 && mult[key(t.terminal_a, t.terminal_b)] == 1;
}

Graph k23() { return Graph(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}}); }

} // namespace

TEST_CASE("a single edge reduces with an empty trace") {
    auto t = sp_reduce(Graph(2, {{0, 1}}));
    CHECK(t.steps.empty());
    CHECK(t.terminal_a == 0);
    CHECK(t.terminal_b == 1);
}

TEST_CASE("a path contracts its middle vertex") {
    auto t = sp_reduce(Graph(3, {{0, 1}, {1, 2}}));
    REQUIRE(t.steps.size() == 1);
    CHECK(t.steps[0] == ReductionStep{ReductionKind::Series, 1, 0, 2});
    CHECK(t.terminal_a == 0);
    CHECK(t.terminal_b == 2);
}

TEST_CASE("a triangle needs one series and one parallel step") {
    auto t = sp_reduce(Graph(3, {{0, 1}, {0, 2}, {1, 2}}));
    REQUIRE(t.steps.size() == 2);
    CHECK(t.steps[0].kind == ReductionKind::Series);
    CHECK(t.steps[1].kind == ReductionKind::Parallel);
    CHECK(trace_replays(Graph(3, {{0, 1}, {0, 2}, {1, 2}}), t));
}

TEST_CASE("reduction rejects graphs outside the class") {
    CHECK_THROWS_AS(sp_reduce(k4_graph()), not_series_parallel);
    CHECK_THROWS_AS(sp_reduce(Graph(1, {})), not_series_parallel);
    CHECK_THROWS_AS(sp_reduce(Graph(0, {})), input_error);
    CHECK_THROWS_AS(sp_reduce(Graph(4, {{0, 1}, {2, 3}})), input_error);
    CHECK_THROWS_AS(sp_construct(k4_graph()), not_series_parallel);
}

TEST_CASE("traces replay over the edge multiset") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        int n = 2 + static_cast<int>(seed % 20);
        Graph g = gen_series_parallel(n, seed);
        auto t = sp_reduce(g);
        CHECK(trace_replays(g, t));
        for (const auto& s : t.steps) CHECK(s.a < s.b);
    }
}

TEST_CASE("a path needs one ordering") {
    auto fam = sp_construct(Graph(3, {{0, 1}, {1, 2}}));
    REQUIRE(fam.size() == 1);
    CHECK(fam[0] == CircularOrder({0, 1, 2}));
    auto longer = sp_construct(Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}));
    REQUIRE(longer.size() == 1);
    CHECK(longer[0] == CircularOrder({0, 1, 2, 3, 4}));
}

TEST_CASE("the complete bipartite graph on two and three needs both orderings") {
    auto fam = sp_construct(k23());
    REQUIRE(fam.size() == 2);
    CHECK(verify_family(k23(), fam).ok);
    CHECK(!verify_family(k23(), {fam[0]}).ok);
    CHECK(!verify_family(k23(), {fam[1]}).ok);
}

TEST_CASE("constructed families verify across random instances") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        int n = 2 + static_cast<int>(seed % 49);
        Graph g = gen_series_parallel(n, 500 + seed);
        auto fam = sp_construct(g);
        REQUIRE(!fam.empty());
        CHECK(fam.size() <= 2);
        CHECK(verify_family(g, fam).ok);
        // a pair is only returned when one ordering cannot do the job
        if (fam.size() == 1) CHECK(verify_family(g, {fam[0]}).ok);
    }
}
