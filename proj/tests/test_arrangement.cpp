#include <doctest.h>

#include <cmath>

#include "curvegraph/arrangement.hpp"
#include "curvegraph/rng.hpp"

using namespace curvegraph;

TEST_SUITE("arrangement") {

TEST_CASE("single tangent splits the sphere into two hemispheres") {
    SphericalArrangement arr = build_arrangement({{0, 0, 1}});
    CHECK(arr.circles.size() == 1);
    REQUIRE(arr.cells.size() == 2);
    CHECK(arr.total_area() == doctest::Approx(4 * kPi).epsilon(1e-12));
    CHECK(arr.cells[0].area == doctest::Approx(2 * kPi).epsilon(1e-12));
    int vplus = 0, vminus = 0;
    for (const auto& c : arr.cells) (c.value > 0 ? vplus : vminus) += c.value;
    CHECK(vplus == 1);
    CHECK(vminus == -1);
}

TEST_CASE("opposite tangents share one circle and cancel") {
    SphericalArrangement arr = build_arrangement({{0, 0, 1}, {0, 0, -1}});
    CHECK(arr.circles.size() == 1);
    CHECK(arr.circles[0].multiplicity == 2);
    for (const auto& c : arr.cells) CHECK(c.value == 0);
}

TEST_CASE("three orthogonal tangents give the octant arrangement") {
    SphericalArrangement arr =
        build_arrangement({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK(arr.circles.size() == 3);
    CHECK(arr.vertices.size() == 6);
    REQUIRE(arr.cells.size() == 8);
    double positive_weighted = 0;
    for (const auto& c : arr.cells) {
        CHECK(c.area == doctest::Approx(kPi / 2).epsilon(1e-9));
        CHECK(std::abs(c.value) % 2 == 1);  // parity matches the degree
        if (c.value > 0) positive_weighted += c.area * c.value;
    }
    // One octant sees all three tangents below (+3), three octants see one (+1).
    CHECK(positive_weighted == doctest::Approx(3 * (kPi / 2) + 3 * (kPi / 2)).epsilon(1e-9));
}

TEST_CASE("random stars: areas tile the sphere and parities match") {
    for (int d = 2; d <= 7; ++d) {
        std::vector<Vec3> tangents;
        for (int i = 0; i < d; ++i)
            tangents.push_back(rng::sphere_point(900 + d, i));
        SphericalArrangement arr = build_arrangement(tangents);
        CHECK(arr.total_area() == doctest::Approx(4 * kPi).epsilon(1e-9));
        for (const auto& c : arr.cells) {
            CHECK(std::abs(c.value) <= d);
            CHECK((c.value - d) % 2 == 0);
            CHECK(c.area > 0);
        }
    }
}

TEST_CASE("generic circle counts: d circles meet in d(d-1) paired vertices") {
    std::vector<Vec3> tangents;
    for (int i = 0; i < 4; ++i) tangents.push_back(rng::sphere_point(17, i));
    SphericalArrangement arr = build_arrangement(tangents);
    CHECK(arr.circles.size() == 4);
    // Each unordered circle pair meets at two antipodal points.
    CHECK(arr.vertices.size() == 4 * 3);
    // Euler: V - E + F = 2 with E = 2V on a generic great-circle arrangement.
    CHECK(arr.cells.size() == arr.vertices.size() + 2);
}

}  // TEST_SUITE
