#include <doctest.h>

#include <cmath>

#include "curvegraph/families.hpp"
#include "curvegraph/graph_curvature.hpp"

using namespace curvegraph;

TEST_SUITE("graph_curvature") {

TEST_CASE("closed convex polygons have ntc exactly 2 pi") {
    for (int n = 3; n <= 8; ++n) {
        CAPTURE(n);
        std::vector<Point3> pts;
        for (int k = 0; k < n; ++k)
            pts.push_back({std::cos(2 * kPi * k / n), std::sin(2 * kPi * k / n), 0});
        SpatialGraph g = inscribe("ngon", pts, true);
        CHECK(ntc_total(g) == doctest::Approx(2 * kPi).epsilon(1e-12));
        CHECK(tc_total(g) == doctest::Approx(2 * kPi).epsilon(1e-12));
    }
}

TEST_CASE("polyline turning of an L and a staircase") {
    CHECK(polyline_turning({{0, 0, 0}, {1, 0, 0}, {1, 1, 0}}) ==
          doctest::Approx(kPi / 2).epsilon(1e-12));
    // Two opposite quarter turns still add up; turning is unsigned.
    CHECK(polyline_turning({{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {2, 1, 0}}) ==
          doctest::Approx(kPi).epsilon(1e-12));
    CHECK(polyline_turning({{0, 0, 0}, {1, 0, 0}}) == 0.0);
    CHECK_THROWS_AS(polyline_turning({{0, 0, 0}}), GraphError);
}

TEST_CASE("square report: four right-angle corners, no joints") {
    SpatialGraph g = load_graph(R"({
        "name": "square",
        "vertices": [
            {"id": "a", "pos": [0, 0, 0]}, {"id": "b", "pos": [1, 0, 0]},
            {"id": "c", "pos": [1, 1, 0]}, {"id": "d", "pos": [0, 1, 0]}
        ],
        "edges": [
            {"id": "ab", "ends": ["a", "b"]}, {"id": "bc", "ends": ["b", "c"]},
            {"id": "cd", "ends": ["c", "d"]}, {"id": "da", "ends": ["d", "a"]}
        ]
    })");
    CurvatureReport rep = curvature_report(g);
    CHECK(rep.joint_sum == 0.0);
    for (const auto& v : rep.vertices) {
        CHECK(v.degree == 2);
        CHECK(v.ntc == doctest::Approx(kPi / 2).epsilon(1e-12));
        CHECK(v.tc == doctest::Approx(kPi / 2).epsilon(1e-12));
    }
    CHECK(rep.ntc_total == doctest::Approx(2 * kPi).epsilon(1e-12));
}

TEST_CASE("subdividing an edge never changes the totals") {
    SpatialGraph g = embed_family(parse_family("theta:3"));
    double before = ntc_total(g);
    SpatialGraph s = subdivide(g, g.edges[0].id, 50);
    CHECK(ntc_total(s) == doctest::Approx(before).epsilon(1e-12));
    CHECK(tc_total(s) == doctest::Approx(tc_total(g)).epsilon(1e-12));
}

TEST_CASE("cylindrical shrink: identity at delta 1, straight stays straight") {
    SpatialGraph k4 = embed_family(parse_family("complete:4"));
    Direction axis = Vec3{0.3, 0.5, 0.8}.normalized();
    CHECK(ntc_total(cylindrical_shrink(k4, axis, 1.0)) ==
          doctest::Approx(ntc_total(k4)).epsilon(1e-12));
    // A linear map keeps straight K4 straight: ntc stays 4 pi at any delta.
    CHECK(ntc_total(cylindrical_shrink(k4, axis, 0.37)) ==
          doctest::Approx(4 * kPi).epsilon(1e-9));
    CHECK_THROWS_AS(cylindrical_shrink(k4, axis, 0.0), GraphError);
    CHECK_THROWS_AS(cylindrical_shrink(k4, axis, 1.5), GraphError);
    CHECK_THROWS_AS(cylindrical_shrink(k4, {0, 0, 0}, 0.5), GraphError);
}

TEST_CASE("circuit validation rejects broken circuits") {
    SpatialGraph g = embed_family(parse_family("theta:3"));
    Circuit c;
    c.components.push_back({});  // empty component
    CHECK_THROWS_AS(circuit_curvature(g, c), GraphError);
    Circuit open;
    // e0 runs u->v; following it with e1 forward (u->v again) breaks closure
    // only if the chain does not return; a single traversal is never closed
    // for a non-loop edge.
    open.components.push_back({{0, 0, true}});
    CHECK_THROWS_AS(circuit_curvature(g, open), GraphError);
    Circuit bad_edge;
    bad_edge.components.push_back({{99, 0, true}, {99, 1, false}});
    CHECK_THROWS_AS(circuit_curvature(g, bad_edge), GraphError);
}

TEST_CASE("circuit curvature of a doubled triangle") {
    SpatialGraph g = load_graph(R"({
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
        ]})");
    // Two parallel copies of the triangle tour.
    Circuit c;
    c.components.push_back({{0, 0, true}, {1, 0, true}, {2, 0, true}});
    c.components.push_back({{0, 1, true}, {1, 1, true}, {2, 1, true}});
    CHECK(circuit_curvature(g, c) == doctest::Approx(2 * ntc_total(g)).epsilon(1e-12));
}

}  // TEST_SUITE
