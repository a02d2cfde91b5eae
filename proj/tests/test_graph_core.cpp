#include <doctest.h>

#include <cmath>

#include "curvegraph/graph.hpp"

using namespace curvegraph;

namespace {

const char* kTriangle = R"({
  "name": "triangle",
  "vertices": [
    {"id": "a", "pos": [0, 0, 0]},
    {"id": "b", "pos": [1, 0, 0]},
    {"id": "c", "pos": [0, 1, 0]}
  ],
  "edges": [
    {"id": "ab", "ends": ["a", "b"]},
    {"id": "bc", "ends": ["b", "c"]},
    {"id": "ca", "ends": ["c", "a"]}
  ]
})";

}  // namespace

TEST_SUITE("graph_core") {

TEST_CASE("load, save, reload round-trip") {
    SpatialGraph g = load_graph(kTriangle);
    CHECK(g.name == "triangle");
    CHECK(g.vertices.size() == 3);
    CHECK(g.edges.size() == 3);
    CHECK(g.degree("a") == 2);
    SpatialGraph g2 = load_graph(save_graph(g));
    CHECK(graph_hash(g) == graph_hash(g2));
    CHECK(save_graph(g) == save_graph(g2));
}

TEST_CASE("hash tracks geometry") {
    SpatialGraph g = load_graph(kTriangle);
    SpatialGraph h = g;
    h.vertices["a"] = {0, 0, 0.25};
    CHECK(graph_hash(g) != graph_hash(h));
}

TEST_CASE("schema violations are rejected") {
    CHECK_THROWS_AS(load_graph("not json at all"), GraphError);
    CHECK_THROWS_AS(load_graph("{}"), GraphError);
    // Edge referencing a vertex that does not exist.
    CHECK_THROWS_AS(load_graph(R"({
        "name": "dangling",
        "vertices": [{"id": "a", "pos": [0,0,0]}, {"id": "b", "pos": [1,0,0]}],
        "edges": [{"id": "e", "ends": ["a", "zz"]}]})"),
                    GraphError);
    // Two vertices at the same point.
    CHECK_THROWS_AS(load_graph(R"({
        "name": "coincident",
        "vertices": [{"id": "a", "pos": [0,0,0]}, {"id": "b", "pos": [0,0,0]}],
        "edges": [{"id": "e", "ends": ["a", "b"]}]})"),
                    GraphError);
    // A loop needs at least one interior joint to carry geometry.
    CHECK_THROWS_AS(load_graph(R"({
        "name": "badloop",
        "vertices": [{"id": "a", "pos": [0,0,0]}],
        "edges": [{"id": "e", "ends": ["a", "a"]}]})"),
                    GraphError);
}

TEST_CASE("error codes are specific") {
    try {
        load_graph(R"({
            "name": "dangling",
            "vertices": [{"id": "a", "pos": [0,0,0]}, {"id": "b", "pos": [1,0,0]}],
            "edges": [{"id": "e", "ends": ["a", "zz"]}]})");
        FAIL("expected a throw");
    } catch (const GraphError& e) {
        CHECK(e.code == GraphError::Code::DanglingEndpoint);
    }
    try {
        load_graph(R"({
            "name": "badloop",
            "vertices": [{"id": "a", "pos": [0,0,0]}],
            "edges": [{"id": "e", "ends": ["a", "a"]}]})");
        FAIL("expected a throw");
    } catch (const GraphError& e) {
        CHECK(e.code == GraphError::Code::LoopWithoutJoint);
    }
}

TEST_CASE("loops with joints load and count twice in the degree") {
    SpatialGraph g = load_graph(R"({
        "name": "loop",
        "vertices": [{"id": "a", "pos": [0,0,0]}],
        "edges": [{"id": "e", "ends": ["a", "a"],
                   "polyline": [[1,0,0], [1,1,0], [0,1,0]]}]})");
    CHECK(g.edges[0].is_loop());
    CHECK(g.degree("a") == 2);
    CombinatorialGraph cg = combinatorial(g);
    CHECK(cg.degree(cg.index_of("a")) == 2);
    CHECK(cg.loop_edge_indices().size() == 1);
    ValidationReport rep = validate(g);
    CHECK(rep.loop_count == 1);
    CHECK(rep.connected);
}

TEST_CASE("chain includes both endpoints") {
    SpatialGraph g = load_graph(kTriangle);
    auto chain = g.chain(g.edge("ab"));
    REQUIRE(chain.size() == 2);
    CHECK(dist(chain.front(), g.pos("a")) == 0);
    CHECK(dist(chain.back(), g.pos("b")) == 0);
}

TEST_CASE("tangent star of a triangle corner") {
    SpatialGraph g = load_graph(kTriangle);
    VertexStar star = tangent_star(g, "a");
    REQUIRE(star.degree() == 2);
    for (const auto& t : star.tangents) CHECK(t.norm() == doctest::Approx(1.0));
    // At "a" the outgoing directions head toward b = +x and c = +y.
    double dx = std::max(dot(star.tangents[0], Vec3{1, 0, 0}),
                         dot(star.tangents[1], Vec3{1, 0, 0}));
    CHECK(dx == doctest::Approx(1.0));
}

TEST_CASE("subdivide splits an edge at a joint") {
    SpatialGraph g = load_graph(R"({
        "name": "bent",
        "vertices": [{"id": "a", "pos": [0,0,0]}, {"id": "b", "pos": [2,0,0]}],
        "edges": [{"id": "e", "ends": ["a", "b"], "polyline": [[1,1,0]]}]})");
    SpatialGraph s = subdivide(g, "e", 0);
    CHECK(s.vertices.size() == 3);
    CHECK(s.edges.size() == 2);
    CHECK_THROWS_AS(subdivide(g, "e", 5), GraphError);
    CHECK_THROWS_AS(subdivide(g, "nope", 0), GraphError);
}

TEST_CASE("inscribe open and closed") {
    std::vector<Point3> pts = {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}};
    SpatialGraph open = inscribe("path", pts, false);
    CHECK(open.vertices.size() == 2);  // endpoints; interior points become joints
    CHECK(open.edges.size() == 1);
    SpatialGraph closed = inscribe("cycle", pts, true);
    ValidationReport rep = validate(closed);
    CHECK(rep.loop_count >= 0);
    CHECK(rep.connected);
    // A closed inscription is a single cycle: total degree = 2 * edges.
    int total_degree = 0;
    for (const auto& [id, p] : closed.vertices) total_degree += closed.degree(id);
    CHECK(total_degree == 2 * static_cast<int>(closed.edges.size()));
    CHECK_THROWS_AS(inscribe("tiny", {{0, 0, 0}}, false), GraphError);
}

TEST_CASE("graph_union glues coincident vertices and renames clashes") {
    SpatialGraph a = load_graph(kTriangle);
    SpatialGraph b = load_graph(R"({
        "name": "tail",
        "vertices": [{"id": "a", "pos": [0,0,0]}, {"id": "t", "pos": [0,0,2]}],
        "edges": [{"id": "ab", "ends": ["a", "t"]}]})");
    SpatialGraph u = graph_union(a, b);
    // b's "a" sits exactly on a's "a", so they merge; "t" is new.
    CHECK(u.vertices.size() == 4);
    CHECK(u.edges.size() == 4);
    CHECK(u.degree("a") == 3);
    ValidationReport rep = validate(u);
    CHECK(rep.connected);
}

TEST_CASE("combinatorial projection keeps ids and connectivity") {
    SpatialGraph g = load_graph(kTriangle);
    CombinatorialGraph cg = combinatorial(g);
    CHECK(cg.vertex_ids.size() == 3);
    CHECK(cg.edges.size() == 3);
    CHECK(cg.connected());
    CHECK(cg.degree(cg.index_of("b")) == 2);
    CHECK(cg.index_of("zz") == -1);
}

}  // TEST_SUITE
