#pragma once

#include <string>
#include <utility>
#include <vector>

#include "curvegraph/geometry.hpp"
#include "curvegraph/graph.hpp"
#include "curvegraph/halfint.hpp"

namespace curvegraph {

// Directional combinatorics of the height function <e,.> on a polygonal
// spatial graph: up/down degrees, net local maxima, multiplicity, fibers.
struct CriticalPoint {
    enum class Kind { Vertex, JointExtremum };
    Kind kind = Kind::Vertex;
    std::string id;       // vertex id, or owning edge id for a joint
    int joint_index = -1; // polyline index for joints
    double height = 0;
    int d_plus = 0, d_minus = 0;
    HalfInt nlm;
    Point3 where;
};

struct GenericityReport {
    bool generic = false;
    std::string witness;  // names the violation when not generic
};

struct ProjectionProfile {
    Direction direction;  // the direction the profile was computed for
    std::vector<CriticalPoint> critical;  // ascending height
    HalfInt mu;
};

// Orthogonality threshold on unit vectors; height-separation threshold.
inline constexpr double kOrthogonalTol = 1e-12;
inline constexpr double kHeightSepTol = 1e-9;

GenericityReport is_generic(const SpatialGraph& g, const Direction& e);

// Deterministic perturbation: rotate by 1e-7 radians about axes derived from
// the graph hash, up to 8 retries; throws NonGeneric if all fail.
Direction ensure_generic(const SpatialGraph& g, Direction e);

std::pair<int, int> updown_degrees(const SpatialGraph& g, const Direction& e,
                                   const std::string& vertex_id);
HalfInt nlm(const SpatialGraph& g, const Direction& e, const std::string& vertex_id);

ProjectionProfile profile(const SpatialGraph& g, const Direction& e);
HalfInt mu(const SpatialGraph& g, const Direction& e);

// Geometric level-set cardinality; also checks it equals twice the partial
// nlm sum above the level and throws if the two disagree.
int fiber_count(const SpatialGraph& g, const Direction& e, double level);

int width_in_direction(const SpatialGraph& g, const Direction& e);

}  // namespace curvegraph
