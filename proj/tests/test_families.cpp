#include <doctest.h>

#include <cmath>
#include <set>

#include "curvegraph/families.hpp"
#include "curvegraph/graph_curvature.hpp"

using namespace curvegraph;

TEST_SUITE("families") {

TEST_CASE("specs parse and print back") {
    CHECK(family_text(parse_family("complete:5")) == "complete:5");
    CHECK(family_text(parse_family("bipartite:4,3")) == "bipartite:4,3");
    CHECK(family_text(parse_family("triple_circles")) == "triple_circles");
    FamilySpec sw = parse_family("sinewave:4,0.3");
    CHECK(sw.m == 4);
    CHECK(sw.eps == doctest::Approx(0.3));
}

TEST_CASE("bad specs are rejected") {
    for (const char* text :
         {"complete:1", "complete:99", "bipartite:9,1", "bipartite:2", "theta:1",
          "wheel:2", "ladder:2", "ring:7", "sinewave:3,0.95", "butterfly:2.0",
          "nonsense", "complete:abc", "complete:"}) {
        CAPTURE(text);
        CHECK_THROWS_AS(parse_family(text), GraphError);
    }
}

TEST_CASE("combinatorial shapes") {
    CombinatorialGraph k5 = make_family(parse_family("complete:5"));
    CHECK(k5.vertex_ids.size() == 5);
    CHECK(k5.edges.size() == 10);
    for (std::size_t v = 0; v < 5; ++v) CHECK(k5.degree(static_cast<int>(v)) == 4);

    CombinatorialGraph k32 = make_family(parse_family("bipartite:3,2"));
    CHECK(k32.vertex_ids.size() == 5);
    CHECK(k32.edges.size() == 6);

    CombinatorialGraph th4 = make_family(parse_family("theta:4"));
    CHECK(th4.vertex_ids.size() == 2);
    CHECK(th4.edges.size() == 4);
    CHECK(th4.degree(0) == 4);

    CombinatorialGraph w5 = make_family(parse_family("wheel:5"));
    CHECK(w5.vertex_ids.size() == 6);
    CHECK(w5.edges.size() == 10);
    CHECK(w5.degree(w5.index_of("h")) == 5);

    CombinatorialGraph l4 = make_family(parse_family("ladder:4"));
    CHECK(l4.vertex_ids.size() == 8);
    CHECK(l4.edges.size() == 12);
    for (std::size_t v = 0; v < 8; ++v) CHECK(l4.degree(static_cast<int>(v)) == 3);

    CombinatorialGraph r3 = make_family(parse_family("ring:3"));
    CHECK(r3.vertex_ids.size() == 6);
    CHECK(r3.edges.size() == 12);
    for (std::size_t v = 0; v < 6; ++v) CHECK(r3.degree(static_cast<int>(v)) == 4);

    CombinatorialGraph s3 = make_family(parse_family("sinewave:3"));
    CHECK(s3.vertex_ids.size() == 6);
    CHECK(s3.edges.size() == 12);

    CombinatorialGraph tc = make_family(parse_family("triple_circles"));
    CHECK(tc.vertex_ids.size() == 4);
    CHECK(tc.edges.size() == 6);
    CHECK(tc.loop_edge_indices().size() == 3);

    CombinatorialGraph tt = make_family(parse_family("triple_theta"));
    CHECK(tt.vertex_ids.size() == 4);
    CHECK(tt.edges.size() == 9);
    CHECK(tt.degree(tt.index_of("w")) == 9);
}

TEST_CASE("embeddings validate and land on the expected values") {
    for (const char* text : {"complete:4", "bipartite:3,3", "theta:4", "wheel:4",
                             "ladder:3", "ring:3", "sinewave:3", "butterfly",
                             "triple_circles", "triple_theta"}) {
        CAPTURE(text);
        SpatialGraph g = embed_family(parse_family(text));
        ValidationReport rep = validate(g);
        CHECK(rep.connected);
        CHECK(ntc_total(g) > 0);
    }
    CHECK(ntc_total(embed_family(parse_family("complete:4"))) ==
          doctest::Approx(4 * kPi).epsilon(1e-12));
    const double alpha = std::atan(0.5);
    CHECK(ntc_total(embed_family(parse_family("butterfly"))) ==
          doctest::Approx(5 * kPi - 4 * alpha).epsilon(1e-12));
    CHECK(ntc_total(embed_family(parse_family("theta:3"))) ==
          doctest::Approx(3 * kPi).epsilon(1e-6));
}

TEST_CASE("sinewave vertices sit on the unit circle") {
    SpatialGraph g = embed_family(parse_family("sinewave:3"));
    for (const auto& [id, p] : g.vertices) {
        CAPTURE(id);
        CHECK(p.norm() == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("embedding a family twice gives identical geometry") {
    SpatialGraph a = embed_family(parse_family("ring:3"));
    SpatialGraph b = embed_family(parse_family("ring:3"));
    CHECK(graph_hash(a) == graph_hash(b));
}

TEST_CASE("closed forms match the stated formulas") {
    CHECK(family_ntc_pi(parse_family("complete:6")) == HalfInt::whole(9));
    CHECK(family_ntc_pi(parse_family("complete:7")) == HalfInt::whole(12));
    CHECK(family_ntc_pi(parse_family("bipartite:4,3")) == HalfInt::whole(6));
    CHECK(family_ntc_pi(parse_family("theta:6")) == HalfInt::whole(6));
    CHECK(family_ntc_pi(parse_family("wheel:6")) == HalfInt::whole(5));
    CHECK(family_ntc_pi(parse_family("ladder:5")) == HalfInt::whole(7));
    CHECK(family_ntc_pi(parse_family("ring:3")) == HalfInt::whole(8));
    CHECK(catalog_rows().size() >= 20);
}

TEST_CASE("random generators produce valid graphs") {
    CombinatorialGraph cubic = random_trivalent(8, 77);
    CHECK(cubic.vertex_ids.size() == 8);
    CHECK(cubic.edges.size() == 12);
    for (std::size_t v = 0; v < 8; ++v) CHECK(cubic.degree(static_cast<int>(v)) == 3);
    for (const auto& e : cubic.edges) CHECK_FALSE(e.is_loop());

    CombinatorialGraph multi = random_multigraph(5, 9, 78);
    CHECK(multi.vertex_ids.size() == 5);
    CHECK(multi.edges.size() == 9);
    for (std::size_t v = 0; v < 5; ++v) CHECK(multi.degree(static_cast<int>(v)) >= 2);

    SpatialGraph embedded = random_embedding(multi, 79);
    ValidationReport rep = validate(embedded);
    CHECK(rep.vertex_count == 5);
    CHECK(rep.edge_count == 9);

    auto star = random_star(5, 80);
    CHECK(star.size() == 5);
    for (const auto& t : star) CHECK(t.norm() == doctest::Approx(1.0).epsilon(1e-12));

    // Seeds are reproducible.
    CHECK(graph_hash(random_embedding(multi, 79)) == graph_hash(embedded));
}

TEST_CASE("generator validation") {
    CHECK_THROWS_AS(random_trivalent(5, 1), GraphError);   // odd count
    CHECK_THROWS_AS(random_trivalent(2, 1), GraphError);   // too small
    CHECK_THROWS_AS(random_multigraph(4, 2, 1), GraphError);  // too few edges
    CHECK_THROWS_AS(random_star(0, 1), GraphError);
}

}  // TEST_SUITE
