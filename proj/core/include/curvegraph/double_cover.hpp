#pragma once

#include <cstdint>
#include <vector>

#include "curvegraph/geometry.hpp"
#include "curvegraph/graph.hpp"
#include "curvegraph/halfint.hpp"

namespace curvegraph {

// The doubled multigraph: every base edge exists in two copies (0 and 1),
// so every vertex has even degree and Euler circuits exist per component.
struct DoubledGraph {
    CombinatorialGraph base;
    int copies = 2;
};

DoubledGraph doubled(const CombinatorialGraph& g);

struct Traversal {
    int edge = 0;   // index into base.edges
    int copy = 0;   // 0 or 1
    bool forward = true;  // true: traversed from end u toward end v
};

// Closed traversals covering every edge copy exactly once. Transition choices
// can close a tour early, so several components are allowed.
struct Circuit {
    std::vector<std::vector<Traversal>> components;
};

// Random Euler circuit of the doubled graph, built from seeded per-vertex
// transition matchings. With nonreversing set, no traversal is immediately
// followed by the other copy of the same base edge entering at the same
// edge-end (i.e. the same path walked straight back); that requires every
// base degree to be at least 2.
Circuit euler_circuit(const DoubledGraph& dg, bool nonreversing, std::uint64_t seed);

// Net local maxima at a vertex counted from the circuit's passages through it.
HalfInt nlm_from_circuit(const SpatialGraph& g, const Circuit& c, const Direction& e,
                         const std::string& vertex_id);

// Minimum over all non-reversing transition matchings at a single vertex of
// half the sum of exterior angles across the matched pairs: the smallest
// possible per-vertex contribution of any doubled circuit, divided by two.
double min_vertex_pairing_curvature(const std::vector<Vec3>& tangents);

}  // namespace curvegraph
