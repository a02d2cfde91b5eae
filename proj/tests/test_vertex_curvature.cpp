#include <doctest.h>

#include <cmath>

#include "curvegraph/families.hpp"
#include "curvegraph/rng.hpp"
#include "curvegraph/vertex_curvature.hpp"

using namespace curvegraph;

namespace {

std::vector<Vec3> planar_star(int d) {
    std::vector<Vec3> t;
    for (int k = 0; k < d; ++k)
        t.push_back({std::cos(2 * kPi * k / d), std::sin(2 * kPi * k / d), 0});
    return t;
}

}  // namespace

TEST_SUITE("vertex_curvature") {

TEST_CASE("coplanar equal-angle stars") {
    for (int d = 3; d <= 6; ++d) {
        CAPTURE(d);
        auto star = planar_star(d);
        double expected_ntc = d % 2 == 1 ? kPi / 2 : 0.0;
        CHECK(ntc_vertex(star) == doctest::Approx(expected_ntc).epsilon(1e-9));
        int quarter_turns = (d - 1) * (d - 1) / 2;
        CHECK(tc_vertex(star) == doctest::Approx(kPi / 2 * quarter_turns).epsilon(1e-9));
    }
}

TEST_CASE("cone curvature of equal-angle stars: pi/2d for odd d, 0 for even d") {
    // The supremum is attained at e = T_i when d is odd; even stars cancel.
    CHECK(ctc_vertex(planar_star(3)) == doctest::Approx(kPi / 6).epsilon(1e-9));
    CHECK(ctc_vertex(planar_star(5)) == doctest::Approx(kPi / 10).epsilon(1e-9));
    CHECK(ctc_vertex(planar_star(4)) == doctest::Approx(0.0).scale(1).epsilon(1e-6));
    CHECK(ctc_vertex(planar_star(6)) == doctest::Approx(0.0).scale(1).epsilon(1e-6));
}

TEST_CASE("free end: a single tangent has ntc pi/2") {
    std::vector<Vec3> one = {{0, 0, 1}};
    CHECK(ntc_vertex(one) == doctest::Approx(kPi / 2).epsilon(1e-12));
    CHECK_THROWS_AS(tc_vertex(one), GraphError);
    CHECK(ctc_vertex(one) == doctest::Approx(kPi / 2).epsilon(1e-9));
    CHECK(vtc_vertex(one) == doctest::Approx(1.0));
}

TEST_CASE("degree 2 reduces to the exterior angle") {
    for (double theta : {0.3, 1.0, 2.0, 3.0}) {
        CAPTURE(theta);
        // Two tangents with interior angle theta between them: exterior pi - theta.
        std::vector<Vec3> two = {{1, 0, 0}, {-std::cos(theta), std::sin(theta), 0}};
        CHECK(ntc_vertex(two) == doctest::Approx(theta).epsilon(1e-9));
        CHECK(tc_vertex(two) == doctest::Approx(theta).epsilon(1e-9));
        CHECK(exterior_angle(two[0], two[1]) == doctest::Approx(theta).epsilon(1e-12));
    }
    std::vector<Vec3> straight = {{1, 0, 0}, {-1, 0, 0}};
    CHECK(ntc_vertex(straight) == doctest::Approx(0.0).scale(1).epsilon(1e-12));
}

TEST_CASE("orthogonal 3-star has ntc 3pi/4") {
    std::vector<Vec3> star = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    CHECK(ntc_vertex(star) == doctest::Approx(3 * kPi / 4).epsilon(1e-9));
}

TEST_CASE("vtc is the norm of the tangent sum") {
    auto star = planar_star(3);
    CHECK(vtc_vertex(star) == doctest::Approx(0.0).scale(1).epsilon(1e-12));
    std::vector<Vec3> skew = {{1, 0, 0}, {0, 1, 0}};
    CHECK(vtc_vertex(skew) == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("monte carlo agrees with the arrangement") {
    for (int d : {3, 4, 5}) {
        CAPTURE(d);
        std::vector<Vec3> star;
        for (int i = 0; i < d; ++i) star.push_back(rng::sphere_point(3000 + d, i));
        double exact = ntc_vertex(star);
        McEstimate mc = ntc_vertex_mc(star, 200000, 31 + d);
        CHECK(std::abs(mc.estimate - exact) <= 4 * mc.stderr_of_mean + 1e-12);
    }
}

TEST_CASE("odd degree floor and tc dominance on random stars") {
    for (int i = 0; i < 50; ++i) {
        int d = 3 + 2 * (i % 2);
        auto star = random_star(d, i);
        CHECK(ntc_vertex(star) >= kPi / 2 - 1e-9);
    }
    for (int i = 0; i < 50; ++i) {
        int d = 2 + i % 5;
        auto star = random_star(d, 100 + i);
        CHECK(tc_vertex(star) >= (d - 1) * ntc_vertex(star) - 1e-9);
    }
}

TEST_CASE("gluing two stars never increases ntc beyond the sum") {
    for (int i = 0; i < 25; ++i) {
        auto a = random_star(2 + i % 3, 200 + i);
        auto b = random_star(2 + (i / 3) % 3, 300 + i);
        std::vector<Vec3> both = a;
        both.insert(both.end(), b.begin(), b.end());
        CHECK(ntc_vertex(both) <= ntc_vertex(a) + ntc_vertex(b) + 1e-9);
    }
}

TEST_CASE("vertex_report bundles all quantities") {
    auto star = planar_star(3);
    VertexReport rep = vertex_report(star);
    CHECK(rep.degree == 3);
    CHECK(rep.ntc == doctest::Approx(ntc_vertex(star)));
    CHECK(rep.tc == doctest::Approx(tc_vertex(star)));
    CHECK(rep.ctc == doctest::Approx(ctc_vertex(star)));
    CHECK(rep.vtc == doctest::Approx(vtc_vertex(star)));
    REQUIRE(rep.exterior_angles.size() == 3);
    for (double a : rep.exterior_angles)
        CHECK(a == doctest::Approx(kPi / 3).epsilon(1e-9));
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(ntc_vertex({}), GraphError);
    CHECK_THROWS_AS(ntc_vertex({{0, 0, 0}}), GraphError);
    CHECK_THROWS_AS(ntc_vertex_mc({{0, 0, 1}}, 0, 1), GraphError);
}

}  // TEST_SUITE
