#pragma once

#include <string>
#include <vector>

#include "curvegraph/double_cover.hpp"
#include "curvegraph/geometry.hpp"
#include "curvegraph/graph.hpp"

namespace curvegraph {

// Whole-graph totals. Polyline joints are degree-2 points, where all three
// vertex functionals coincide with the exterior angle, so the joint sum is
// shared; topological vertices get their functional-specific values.
struct CurvatureReport {
    struct VertexTerm {
        std::string id;
        int degree = 0;
        double ntc = 0, tc = 0, ctc = 0;
    };
    std::vector<VertexTerm> vertices;
    double joint_sum = 0;  // included in each total below
    double ntc_total = 0, tc_total = 0, ctc_total = 0;
};

CurvatureReport curvature_report(const SpatialGraph& g);
double ntc_total(const SpatialGraph& g);
double tc_total(const SpatialGraph& g);
double ctc_total(const SpatialGraph& g);

// Sum of exterior angles at the interior joints of one polyline chain.
double polyline_turning(const std::vector<Point3>& chain);
// Same, over all edges of the graph.
double joint_bend_sum(const SpatialGraph& g);

// Total curvature of a closed parameterization: exterior angles at every
// transition between consecutive traversals plus the interior bends of each
// traversed edge copy.
double circuit_curvature(const SpatialGraph& g, const Circuit& c);

// p -> <e,p>e + delta*(p - <e,p>e) applied to vertices and joints.
SpatialGraph cylindrical_shrink(const SpatialGraph& g, const Direction& e, double delta);

}  // namespace curvegraph
