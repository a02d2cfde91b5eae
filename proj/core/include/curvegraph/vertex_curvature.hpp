#pragma once

#include <cstdint>
#include <vector>

#include "curvegraph/arrangement.hpp"
#include "curvegraph/geometry.hpp"

namespace curvegraph {

// The four per-vertex curvature functionals of a tangent star:
//   ntc: 1/4 integral over S^2 of the positive part of sum chi_i
//   tc:  sum over pairs of exterior angles arccos<Ti,-Tj>
//   ctc: sup over e in S^2 of sum_i (pi/2 - arccos<Ti,e>)
//   vtc: |sum Ti|
struct VertexReport {
    int degree = 0;
    double ntc = 0, tc = 0, ctc = 0, vtc = 0;
    std::vector<double> exterior_angles;  // pairs (i,j), i<j, row-major
};

struct McEstimate {
    double estimate = 0;
    double stderr_of_mean = 0;
    std::int64_t samples = 0;
};

double ntc_from_arrangement(const SphericalArrangement& arr);
double ntc_vertex(const std::vector<Vec3>& tangents);
McEstimate ntc_vertex_mc(const std::vector<Vec3>& tangents, std::int64_t samples, std::uint64_t seed);
double tc_vertex(const std::vector<Vec3>& tangents);  // d >= 2
double ctc_vertex(const std::vector<Vec3>& tangents);
double vtc_vertex(const std::vector<Vec3>& tangents);
VertexReport vertex_report(const std::vector<Vec3>& tangents);

}  // namespace curvegraph
