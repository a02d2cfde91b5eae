#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "curvegraph/graph.hpp"
#include "curvegraph/halfint.hpp"

namespace curvegraph {

// Built-in graph families. Parameter text forms:
//   complete:m  bipartite:m,n  theta:m  wheel:m  ladder:m  ring:m
//   sinewave:m[,eps]  butterfly[:alpha]  triple_circles  triple_theta
struct FamilySpec {
    std::string family;
    int m = 0, n = 0;
    double alpha = 0;  // butterfly wing angle (radians)
    double eps = 0;    // sinewave amplitude
};

FamilySpec parse_family(const std::string& text);
std::string family_text(const FamilySpec& spec);

CombinatorialGraph make_family(const FamilySpec& spec);

// Concrete coordinates: planar where the family is planar (wheels, thetas,
// rings, butterflies, ...), a prism for ladders, a sphere point set for
// complete graphs. Curved edges are sampled polylines.
SpatialGraph embed_family(const FamilySpec& spec);

// Closed-form minimum net total curvature in units of pi.
HalfInt family_ntc_pi(const FamilySpec& spec);

struct CatalogRow {
    std::string family;
    std::string params;
    HalfInt ntc_pi;
    std::string formula;  // closed form behind the value
};

std::vector<CatalogRow> catalog_rows();

// --- randomized instances (property tests and sampling) -------------------

// Configuration-model cubic multigraph: no loops, parallel edges allowed.
// `vertices` must be even and >= 4.
CombinatorialGraph random_trivalent(int vertices, std::uint64_t seed);

// Uniform random endpoints (loops and parallels allowed), resampled until
// every degree is >= 2; requires edges >= vertices.
CombinatorialGraph random_multigraph(int vertices, int edges, std::uint64_t seed);

// Generic-position embedding: well-separated vertex points, one bent joint
// per proper edge (so parallel edges differ geometrically), two per loop.
SpatialGraph random_embedding(const CombinatorialGraph& cg, std::uint64_t seed);

// Unit tangents with pairwise angular separation >= 0.1 rad, also away from
// each other's antipodes by the same margin.
std::vector<Vec3> random_star(int degree, std::uint64_t seed);

}  // namespace curvegraph
