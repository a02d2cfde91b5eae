#include <doctest.h>

#include <cmath>

#include "curvegraph/families.hpp"
#include "curvegraph/graph_curvature.hpp"
#include "curvegraph/projection.hpp"
#include "curvegraph/rng.hpp"

using namespace curvegraph;

TEST_SUITE("projection") {

TEST_CASE("planar graphs are non-generic along the plane normal") {
    SpatialGraph g = embed_family(parse_family("theta:3"));  // lives in z = 0
    GenericityReport rep = is_generic(g, {0, 0, 1});
    CHECK_FALSE(rep.generic);
    CHECK_FALSE(rep.witness.empty());
    Direction fixed = ensure_generic(g, {0, 0, 1});
    CHECK(is_generic(g, fixed).generic);
}

TEST_CASE("straight K4: mu is 2 in every generic direction") {
    SpatialGraph k4 = embed_family(parse_family("complete:4"));
    for (int i = 0; i < 25; ++i) {
        Direction e = ensure_generic(k4, rng::sphere_point(7100, i));
        CHECK(mu(k4, e) == HalfInt::whole(2));
    }
}

TEST_CASE("straight K4 profile: nlm ladder -3/2, -1/2, +1/2, +3/2") {
    SpatialGraph k4 = embed_family(parse_family("complete:4"));
    Direction e = ensure_generic(k4, Vec3{0.3, 0.5, 0.8}.normalized());
    ProjectionProfile pr = profile(k4, e);
    REQUIRE(pr.critical.size() == 4);
    CHECK(pr.critical[0].nlm == -HalfInt::half(3));
    CHECK(pr.critical[1].nlm == -HalfInt::half(1));
    CHECK(pr.critical[2].nlm == HalfInt::half(1));
    CHECK(pr.critical[3].nlm == HalfInt::half(3));
    for (std::size_t i = 0; i + 1 < pr.critical.size(); ++i)
        CHECK(pr.critical[i].height < pr.critical[i + 1].height);
    CHECK(pr.mu == HalfInt::whole(2));
}

TEST_CASE("convex closed curve: mu = 1, width = 2") {
    std::vector<Point3> pts;
    for (int k = 0; k < 8; ++k)
        pts.push_back({std::cos(2 * kPi * k / 8), std::sin(2 * kPi * k / 8), 0});
    SpatialGraph octagon = inscribe("octagon", pts, true);
    for (int i = 0; i < 10; ++i) {
        Direction e = ensure_generic(octagon, rng::sphere_point(7200, i));
        CHECK(mu(octagon, e) == HalfInt::whole(1));
        CHECK(width_in_direction(octagon, e) == 2);
    }
}

TEST_CASE("nlm sums to zero over all critical points") {
    for (int i = 0; i < 10; ++i) {
        CombinatorialGraph cg = random_multigraph(4 + i % 3, 7 + i % 2, 7300 + i);
        SpatialGraph g = random_embedding(cg, 7400 + i);
        Direction e = ensure_generic(g, rng::sphere_point(7500, i));
        ProjectionProfile pr = profile(g, e);
        HalfInt total;
        for (const auto& cp : pr.critical) total += cp.nlm;
        CHECK(total == HalfInt{});
    }
}

TEST_CASE("fiber counting on the theta graph") {
    SpatialGraph g = embed_family(parse_family("theta:3"));
    // Project along x so that u = (0,1,0) and v = (0,-1,0) spread out.
    Direction e = ensure_generic(g, {0, 1, 0});
    ProjectionProfile pr = profile(g, e);
    double lo = pr.critical.front().height, hi = pr.critical.back().height;
    // Between the two vertices the three strands cross any level.
    CHECK(fiber_count(g, e, 0.5 * (lo + hi)) == 3);
    CHECK(fiber_count(g, e, lo - 1.0) == 0);
    CHECK(fiber_count(g, e, hi + 1.0) == 0);
    CHECK(width_in_direction(g, e) >= 3);
    // A level through a vertex is rejected.
    CHECK_THROWS_AS(fiber_count(g, e, lo), GraphError);
}

TEST_CASE("updown degrees split the star by height") {
    SpatialGraph k4 = embed_family(parse_family("complete:4"));
    Direction e = ensure_generic(k4, Vec3{0.3, 0.5, 0.8}.normalized());
    ProjectionProfile pr = profile(k4, e);
    auto [dp_bottom, dm_bottom] = updown_degrees(k4, e, pr.critical.front().id);
    CHECK(dp_bottom == 3);
    CHECK(dm_bottom == 0);
    auto [dp_top, dm_top] = updown_degrees(k4, e, pr.critical.back().id);
    CHECK(dp_top == 0);
    CHECK(dm_top == 3);
}

TEST_CASE("joint extrema carry nlm +-1") {
    // A V-shaped polyline: one edge with a single joint at the bottom.
    SpatialGraph g = load_graph(R"({
        "name": "vee",
        "vertices": [{"id": "l", "pos": [-1, 1, 0]}, {"id": "r", "pos": [1, 1, 0]}],
        "edges": [{"id": "e", "ends": ["l", "r"], "polyline": [[0, 0, 0.01]]}]})");
    Direction e = ensure_generic(g, {0, 1, 0});
    ProjectionProfile pr = profile(g, e);
    bool found_joint_min = false;
    for (const auto& cp : pr.critical)
        if (cp.kind == CriticalPoint::Kind::JointExtremum) {
            found_joint_min = true;
            CHECK(cp.nlm == -HalfInt::whole(1));  // a minimum
            CHECK(cp.d_plus == 2);
        }
    CHECK(found_joint_min);
}

TEST_CASE("mu rejects the zero direction") {
    SpatialGraph k4 = embed_family(parse_family("complete:4"));
    CHECK_THROWS_AS(mu(k4, Vec3{0, 0, 0}), GraphError);
}

}  // TEST_SUITE
