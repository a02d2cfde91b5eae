#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "curvegraph/graph.hpp"
#include "curvegraph/halfint.hpp"

namespace curvegraph {

// A flat 1-D placement: a strict height order of the topological vertices
// (order[rank] = vertex index, rank 0 lowest) plus, for every loop edge, the
// side of its single interior extremum. Non-loop edges are monotone.
struct HeightAssignment {
    std::vector<int> order;
    std::vector<bool> loop_up;  // aligned with CombinatorialGraph::loop_edge_indices()
};

struct AssignmentScore {
    HalfInt mu;       // sum of positive net-local-maxima over all critical points
    int extrema = 0;  // count of local maxima and minima (vertices + loop interiors)
    int width = 0;    // maximum fiber cardinality over regular levels
};

AssignmentScore mu_of_assignment(const CombinatorialGraph& cg, const HeightAssignment& a);

// Exhaustive minimum over orderings x loop choices. mu, extrema, and width are
// minimized independently (their argmins can differ).
struct FlatResult {
    HalfInt mu_star;
    HalfInt ntc_star_pi;  // minimum net total curvature in units of pi; = 2*mu_star
    HalfInt bridge;       // min extrema / 2
    int width_star = 0;
    std::vector<HeightAssignment> argmin;  // mu-minimizers, enumeration order, capped
    std::uint64_t searched = 0;

    double ntc_star() const;  // radians
};

inline constexpr int kFlatVertexBudget = 10;
inline constexpr int kArgminCap = 64;

FlatResult flat_min(const CombinatorialGraph& cg);
HalfInt bridge_number(const CombinatorialGraph& cg);

// Checks min-NTC = pi*(2*bridge + k/2), k = number of odd-degree vertices.
// The identity is guaranteed when every vertex is trivalent, or when exactly
// one vertex w is not, carries no loop, and its edges lead to pairwise
// distinct trivalent vertices. Outside that hypothesis the comparison is
// still computed and `violation` says what failed.
struct TrivalentCheck {
    bool hypothesis_ok = true;
    std::string violation;
    int odd_vertices = 0;
    HalfInt lhs_pi;  // 2*mu_star
    HalfInt rhs_pi;  // 2*bridge + k/2
    bool equal = false;
};

TrivalentCheck trivalent_formula_check(const CombinatorialGraph& cg);

// Joins a and b at a new degree-4 vertex placed in the interior of one edge
// of each (combinatorial subdivision), then compares the joint minimum with
// the parts: f(union) must lie in [f1 + f2 - 2pi, f1 + f2].
struct UnionCheck {
    HalfInt f1_pi, f2_pi, union_pi;  // flat minima in units of pi
    HalfInt lower_pi, upper_pi;
    bool within = false;
    bool floor_attained = false;
};

UnionCheck one_point_union_check(const CombinatorialGraph& a, int edge_a,
                                 const CombinatorialGraph& b, int edge_b);

// Independent reference minimizer for graphs with at most 6 vertices. It
// searches a strictly larger space: vertices may share heights (any ordered
// set partition with no tied non-loop edge), and each loop ranges over five
// interior shapes (one extremum up or down, three extrema up or down, and
// one of each with split ends). Used to confirm that strict orders with one
// extremum per loop already attain the minimum.
struct OracleResult {
    HalfInt mu_star;
    int extrema_min = 0;
    std::uint64_t searched = 0;
};

OracleResult flat_min_oracle(const CombinatorialGraph& cg);

}  // namespace curvegraph
