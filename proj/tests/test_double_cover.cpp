#include <doctest.h>

#include <cmath>
#include <map>
#include <set>

#include "curvegraph/double_cover.hpp"
#include "curvegraph/families.hpp"
#include "curvegraph/graph_curvature.hpp"
#include "curvegraph/projection.hpp"
#include "curvegraph/rng.hpp"

using namespace curvegraph;

namespace {

// Every (edge, copy) must be traversed exactly once across all components.
void check_covers_every_copy(const CombinatorialGraph& cg, const Circuit& c) {
    std::map<std::pair<int, int>, int> seen;
    for (const auto& comp : c.components)
        for (const auto& t : comp) ++seen[{t.edge, t.copy}];
    REQUIRE(seen.size() == 2 * cg.edges.size());
    for (const auto& [key, count] : seen) CHECK(count == 1);
}

// In a non-reversing circuit, consecutive traversals never run the same edge
// straight back (same edge, opposite direction) - that is the excluded
// U-turn for loops and non-loops alike.
void check_nonreversing(const Circuit& c) {
    for (const auto& comp : c.components) {
        REQUIRE(!comp.empty());
        for (std::size_t i = 0; i < comp.size(); ++i) {
            const Traversal& t = comp[i];
            const Traversal& n = comp[(i + 1) % comp.size()];
            bool uturn = t.edge == n.edge && t.forward != n.forward;
            CHECK_FALSE(uturn);
        }
    }
}

}  // namespace

TEST_SUITE("double_cover") {

TEST_CASE("doubling keeps the base graph") {
    CombinatorialGraph cg = make_family(parse_family("theta:3"));
    DoubledGraph dg = doubled(cg);
    CHECK(dg.copies == 2);
    CHECK(dg.base.edges.size() == cg.edges.size());
}

TEST_CASE("circuits cover every doubled edge exactly once") {
    for (const char* family : {"theta:3", "complete:4", "ladder:3", "triple_circles"}) {
        CAPTURE(family);
        CombinatorialGraph cg = make_family(parse_family(family));
        DoubledGraph dg = doubled(cg);
        for (std::uint64_t seed = 0; seed < 8; ++seed) {
            Circuit c = euler_circuit(dg, true, seed);
            check_covers_every_copy(cg, c);
            check_nonreversing(c);
        }
    }
}

TEST_CASE("reversing circuits also cover everything") {
    CombinatorialGraph cg = make_family(parse_family("wheel:4"));
    DoubledGraph dg = doubled(cg);
    for (std::uint64_t seed = 0; seed < 8; ++seed)
        check_covers_every_copy(cg, euler_circuit(dg, false, seed));
}

TEST_CASE("same seed gives the same circuit") {
    DoubledGraph dg = doubled(make_family(parse_family("complete:4")));
    Circuit a = euler_circuit(dg, true, 7);
    Circuit b = euler_circuit(dg, true, 7);
    REQUIRE(a.components.size() == b.components.size());
    for (std::size_t i = 0; i < a.components.size(); ++i) {
        REQUIRE(a.components[i].size() == b.components[i].size());
        for (std::size_t j = 0; j < a.components[i].size(); ++j) {
            CHECK(a.components[i][j].edge == b.components[i][j].edge);
            CHECK(a.components[i][j].copy == b.components[i][j].copy);
            CHECK(a.components[i][j].forward == b.components[i][j].forward);
        }
    }
}

TEST_CASE("circuit curvature equals twice the net total curvature") {
    SpatialGraph g = embed_family(parse_family("ladder:3"));
    DoubledGraph dg = doubled(combinatorial(g));
    double target = 2 * ntc_total(g);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        Circuit c = euler_circuit(dg, true, seed);
        CHECK(circuit_curvature(g, c) == doctest::Approx(target).epsilon(1e-12));
    }
}

TEST_CASE("counting local maxima along any circuit recovers nlm") {
    SpatialGraph g = embed_family(parse_family("butterfly"));
    DoubledGraph dg = doubled(combinatorial(g));
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        Circuit c = euler_circuit(dg, false, 900 + seed);
        Direction e = ensure_generic(g, rng::sphere_point(901, seed));
        for (const auto& [vid, pos] : g.vertices) {
            (void)pos;
            CHECK(nlm_from_circuit(g, c, e, vid) == nlm(g, e, vid));
        }
    }
}

TEST_CASE("best pairing at a right-angle cross is flat") {
    // Two straight lines through the vertex: pairing each tangent with its
    // opposite continuation turns nowhere.
    std::vector<Vec3> cross = {{1, 0, 0}, {0, 1, 0}, {-1, 0, 0}, {0, -1, 0}};
    CHECK(min_vertex_pairing_curvature(cross) ==
          doctest::Approx(0.0).scale(1).epsilon(1e-12));
}

TEST_CASE("best pairing of the tilted 4-star is 2 alpha") {
    const double alpha = 0.5;
    std::vector<Vec3> star = {{1, 0, 0},
                              {0, 1, 0},
                              {-std::cos(alpha), 0, std::sin(alpha)},
                              {0, -std::cos(alpha), -std::sin(alpha)}};
    CHECK(min_vertex_pairing_curvature(star) ==
          doctest::Approx(2 * alpha).epsilon(1e-9));
}

TEST_CASE("loops traverse with both copies") {
    CombinatorialGraph cg = make_family(parse_family("triple_circles"));
    DoubledGraph dg = doubled(cg);
    Circuit c = euler_circuit(dg, true, 3);
    check_covers_every_copy(cg, c);
    check_nonreversing(c);
}

}  // TEST_SUITE
