#include <doctest.h>

#include <cmath>

#include "curvegraph/crofton.hpp"
#include "curvegraph/families.hpp"
#include "curvegraph/graph_curvature.hpp"

using namespace curvegraph;

TEST_SUITE("crofton") {

TEST_CASE("convex planar curve: mu is 1 in every direction, estimate is exact") {
    SpatialGraph square =
        inscribe("square", {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}}, true);
    QuadratureResult q = crofton_ntc(square, Quadrature::MonteCarlo, 2000, 11);
    CHECK(q.estimate == doctest::Approx(2 * kPi).epsilon(1e-12));
    CHECK(q.uncertainty == doctest::Approx(0.0).scale(1).epsilon(1e-12));
    CHECK(q.samples == 2000);
}

TEST_CASE("fibonacci lattice agrees on the planar theta") {
    SpatialGraph g = embed_family(parse_family("theta:3"));
    QuadratureResult q = crofton_ntc(g, Quadrature::Fibonacci, 20000, 5);
    CHECK(std::abs(q.estimate - ntc_total(g)) <= 0.01 * ntc_total(g));
}

TEST_CASE("monte carlo matches ntc_total on a spatial graph") {
    SpatialGraph g = random_embedding(random_multigraph(5, 8, 404), 405);
    QuadratureResult q = crofton_ntc(g, Quadrature::MonteCarlo, 60000, 6);
    double direct = ntc_total(g);
    CHECK(std::abs(q.estimate - direct) <= std::max(3 * q.uncertainty, 0.01 * direct));
}

TEST_CASE("identical seeds reproduce the estimate exactly") {
    SpatialGraph g = embed_family(parse_family("butterfly"));
    QuadratureResult a = crofton_ntc(g, Quadrature::MonteCarlo, 5000, 42);
    QuadratureResult b = crofton_ntc(g, Quadrature::MonteCarlo, 5000, 42);
    CHECK(a.estimate == b.estimate);
    CHECK(a.uncertainty == b.uncertainty);
    QuadratureResult c = crofton_ntc(g, Quadrature::MonteCarlo, 5000, 43);
    CHECK(a.estimate != c.estimate);
}

TEST_CASE("sample count validation") {
    SpatialGraph g = embed_family(parse_family("complete:4"));
    CHECK_THROWS_AS(crofton_ntc(g, Quadrature::MonteCarlo, 5, 1), GraphError);
}

TEST_CASE("heatmap grid shape and content") {
    SpatialGraph square =
        inscribe("square", {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}}, true);
    auto cells = mu_heatmap(square, 8);
    REQUIRE(cells.size() == 8 * 16);
    CHECK(cells.front().lat == doctest::Approx(90.0 - 0.5 * 180.0 / 8));
    CHECK(cells.front().lon == doctest::Approx(-180.0 + 0.5 * 360.0 / 16));
    CHECK(cells.back().lat == doctest::Approx(-90.0 + 0.5 * 180.0 / 8));
    for (const auto& c : cells) {
        // A convex planar curve projects with exactly one maximum from
        // every direction.
        CHECK(c.mu == HalfInt::whole(1));
    }
    CHECK_THROWS_AS(mu_heatmap(square, 4), GraphError);
}

}  // TEST_SUITE
