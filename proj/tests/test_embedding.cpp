#include "doctest.h"

#include <utility>
#include <vector>

#include "circsep/embedding.hpp"
#include "circsep/generate.hpp"
#include "circsep/separation.hpp"
#include "support.hpp"

using namespace circsep;

namespace {

TwoOuterEmbedding triangle_embedding() {
    Graph g(3, {{0, 1}, {0, 2}, {1, 2}});
    return make_embedding(g, {0, 1, 2}, {}, {{1, 2}, {2, 0}, {0, 1}});
}

// fan: hub 0 under the path 1..5
TwoOuterEmbedding fan_embedding() {
    Graph g(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {2, 3}, {3, 4}, {4, 5}});
    return make_embedding(g, {0, 1, 2, 3, 4, 5}, {},
                          {{1, 2, 3, 4, 5}, {2, 0}, {3, 0, 1}, {4, 0, 2}, {5, 0, 3}, {0, 4}});
}

// two triangles glued at 2, outer walk revisits the cut vertex
TwoOuterEmbedding butterfly_embedding() {
    Graph g(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
    return make_embedding(g, {0, 1, 2, 3, 4, 2}, {},
                          {{1, 2}, {2, 0}, {4, 0, 1, 3}, {4, 2}, {2, 3}});
}

int non_triangle_faces(const TwoOuterEmbedding& emb) {
    int big = 0;
    for (const auto& f : trace_faces(emb.g, emb.rotation))
        if (f.size() != 3) ++big;
    return big;
}

} // namespace

TEST_CASE("make_embedding derives layers from the outer boundary") {
    auto emb = k4_embedding();
    CHECK(emb.layer == std::vector<int>{2, 2, 2, 1});
    CHECK(emb.outer_simple());
    CHECK(!butterfly_embedding().outer_simple());
}

TEST_CASE("fixture embeddings validate") {
    validate_embedding(triangle_embedding());
    validate_embedding(k4_embedding());
    validate_embedding(fan_embedding());
    validate_embedding(butterfly_embedding());
}

TEST_CASE("make_embedding rejects malformed shapes") {
    Graph g = k4_graph();
    // inner walk naming an outer vertex
    CHECK_THROWS_AS(make_embedding(g, {0, 1, 2}, {{2}},
                                   {{1, 3, 2}, {2, 3, 0}, {0, 3, 1}, {2, 0, 1}}),
                    input_error);
    // rotation table too short
    CHECK_THROWS_AS(make_embedding(g, {0, 1, 2}, {{3}}, {{1, 3, 2}, {2, 3, 0}, {0, 3, 1}}),
                    input_error);
    // boundary vertex out of range
    CHECK_THROWS_AS(make_embedding(g, {0, 1, 7}, {{3}},
                                   {{1, 3, 2}, {2, 3, 0}, {0, 3, 1}, {2, 0, 1}}),
                    input_error);
}

TEST_CASE("validation catches walks that leave the graph") {
    Graph c4(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    auto emb = make_embedding(c4, {0, 2, 1, 3}, {}, {{1, 3}, {2, 0}, {3, 1}, {0, 2}});
    CHECK_THROWS_AS(validate_embedding(emb), structural_error);
}

TEST_CASE("validation catches a twisted rotation") {
    auto emb = k4_embedding();
    emb.rotation[0] = {1, 2, 3};
    CHECK_THROWS_AS(validate_embedding(emb), structural_error);
}

TEST_CASE("edge classification splits by endpoint layers") {
    auto part = classify_edges(k4_embedding());
    CHECK(part.e1.empty());
    CHECK(part.e2.size() == 3);
    CHECK(part.e12.size() == 3);
    CHECK(edge_class(k4_embedding(), Edge(0, 1)) == EdgeClass::Outer);
    CHECK(edge_class(k4_embedding(), Edge(0, 3)) == EdgeClass::Cross);

    auto flat = gen_outerplanar(10, 7);
    auto fp = classify_edges(flat);
    CHECK(fp.e1.empty());
    CHECK(fp.e12.empty());
    CHECK(static_cast<int>(fp.e2.size()) == flat.g.edge_count());

    for (std::uint64_t seed : {0, 1, 2}) {
        auto emb = gen_two_outerplanar(14, seed);
        auto p = classify_edges(emb);
        CHECK(static_cast<int>(p.e1.size() + p.e2.size() + p.e12.size()) == emb.g.edge_count());
        for (const auto& e : p.e1) CHECK((emb.layer[e.u] == 1 && emb.layer[e.v] == 1));
        for (const auto& e : p.e2) CHECK((emb.layer[e.u] == 2 && emb.layer[e.v] == 2));
        for (const auto& e : p.e12) CHECK(emb.layer[e.u] + emb.layer[e.v] == 3);
    }
}

TEST_CASE("outer face order reads the boundary") {
    CHECK(outer_face_order(triangle_embedding()) == CircularOrder({0, 1, 2}));
    auto fan = fan_embedding();
    CHECK(verify_family(fan.g, {outer_face_order(fan)}).ok);
    auto flat = gen_outerplanar(12, 3);
    CHECK(verify_family(flat.g, {outer_face_order(flat)}).ok);
    CHECK_THROWS_AS(outer_face_order(k4_embedding()), contract_error);
}

TEST_CASE("annulus scan walks the ring clockwise from the start") {
    auto emb = k4_embedding();
    using P = std::pair<Vertex, Vertex>;
    CHECK(annulus_scan(emb, 0) == std::vector<P>{{0, 3}, {2, 3}, {1, 3}});
    CHECK(annulus_scan(emb, 1) == std::vector<P>{{1, 3}, {0, 3}, {2, 3}});
    CHECK(annulus_scan(emb, 2) == std::vector<P>{{2, 3}, {1, 3}, {0, 3}});
    CHECK_THROWS_AS(annulus_scan(emb, 3), input_error);
    CHECK_THROWS_AS(annulus_scan(butterfly_embedding(), 0), contract_error);
}

TEST_CASE("outer repair bridges cut vertices with new edges only") {
    auto tri = triangle_embedding();
    auto same = make_outer_biconnected(tri);
    CHECK(same.g.edge_count() == tri.g.edge_count());

    auto fly = butterfly_embedding();
    auto fixed = make_outer_biconnected(fly);
    validate_embedding(fixed);
    CHECK(fixed.outer_simple());
    CHECK(fixed.g.vertex_count() == 5);
    CHECK(fixed.g.edge_count() == 7);
    CHECK(fixed.g.has_edge(0, 4));
    CHECK(CircularOrder(fixed.outer_cycle) == CircularOrder({0, 1, 2, 3, 4}));
    for (const auto& e : fly.g.edges()) CHECK(fixed.g.has_edge(e.u, e.v));
}

TEST_CASE("triangulation closes every bounded face") {
    for (std::uint64_t seed : {0, 1, 2, 9, 10, 11}) {
        auto emb = make_outer_biconnected(gen_two_outerplanar(14, seed));
        auto full = triangulate_maximal(emb);
        validate_embedding(full);
        CHECK(full.g.vertex_count() == emb.g.vertex_count());
        CHECK(full.outer_cycle == emb.outer_cycle);
        CHECK(full.layer == emb.layer);
        for (const auto& e : emb.g.edges()) CHECK(full.g.has_edge(e.u, e.v));
        // only the unbounded face may be larger than a triangle
        CHECK(non_triangle_faces(full) <= 1);
        REQUIRE(full.g.connected());
        int f = static_cast<int>(trace_faces(full.g, full.rotation).size());
        CHECK(full.g.vertex_count() - full.g.edge_count() + f == 2);
        // a second pass has nothing left to add
        CHECK(triangulate_maximal(full).g.edge_count() == full.g.edge_count());
    }
}

TEST_CASE("face tracing covers each directed edge once") {
    auto emb = k4_embedding();
    auto faces = trace_faces(emb.g, emb.rotation);
    REQUIRE(faces.size() == 4);
    int corners = 0;
    for (const auto& f : faces) corners += static_cast<int>(f.size());
    CHECK(corners == 2 * emb.g.edge_count());
}
