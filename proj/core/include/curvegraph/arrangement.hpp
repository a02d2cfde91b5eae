#pragma once

#include <vector>

#include "curvegraph/geometry.hpp"

namespace curvegraph {

// Arrangement of the great circles {e : <e,Ti> = 0} on the unit sphere,
// together with the value sum_i chi_i(e) on each open cell, where
// chi_i(e) = +1 if <e,Ti> < 0 and -1 otherwise.
struct SphericalArrangement {
    struct Circle {
        Vec3 normal;       // representative tangent direction (unit)
        int multiplicity;  // how many input tangents map to this circle (up to sign)
    };
    struct Arc {
        int circle;  // index into circles
        Vec3 from, to, mid;
        Vec3 dir;  // unit travel direction at mid (interior of the cell is to its left)
    };
    struct Cell {
        double area;            // steradians, by angular excess
        int value;              // sum of chi_i at an interior sample, parity == d
        Vec3 sample;            // interior point the value was evaluated at
        std::vector<Arc> boundary;  // cyclic, interior to the left
    };

    std::vector<Circle> circles;
    std::vector<Vec3> vertices;  // pairwise circle intersections, merged
    std::vector<Cell> cells;

    double total_area() const;  // should be 4*pi
};

// Tolerances: circles whose normals agree up to sign within kCircleMergeTol
// are merged with multiplicity; intersection points within kVertexMergeTol
// are identified; vertex-on-circle incidence uses kIncidenceTol.
inline constexpr double kCircleMergeTol = 1e-9;
inline constexpr double kVertexMergeTol = 1e-9;
inline constexpr double kIncidenceTol = 1e-8;

SphericalArrangement build_arrangement(const std::vector<Vec3>& tangents);

}  // namespace curvegraph
