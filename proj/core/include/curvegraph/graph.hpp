#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "curvegraph/geometry.hpp"

namespace curvegraph {

// Typed validation failure; the CLI maps these to exit code 1.
class GraphError : public std::runtime_error {
public:
    enum class Code {
        Schema,             // malformed document
        DanglingEndpoint,   // edge references an unknown vertex id
        LoopWithoutJoint,   // loop edge with no interior polyline point
        CoincidentPoints,   // consecutive polyline points closer than the separation floor
        ZeroLengthSegment,  // degenerate first segment at a vertex
        BadArgument,        // out-of-range index / malformed parameter
        NonGeneric,         // direction stayed non-generic after perturbation retries
        BudgetExceeded,     // brute-force size limit
    };

    GraphError(Code c, const std::string& what) : std::runtime_error(what), code(c) {}
    Code code;
};

// Two points are considered distinct when farther apart than this. Far above
// parse noise, far below any test geometry scale.
inline constexpr double kSeparation = 1e-9;

using Point3 = Vec3;
using Direction = Vec3;  // unit vector; |e| = 1 within 1e-12

// Piecewise-linear embedded multigraph. Edge geometry is the chain
// vertex(u), polyline..., vertex(v); `polyline` holds interior joints only.
// Immutable after load: every operation that changes a graph returns a new value.
struct SpatialGraph {
    struct Edge {
        std::string id;
        std::string u, v;
        std::vector<Point3> polyline;
        bool is_loop() const { return u == v; }
    };

    std::string name;
    std::map<std::string, Point3> vertices;
    std::vector<Edge> edges;

    const Point3& pos(const std::string& id) const;
    const Edge& edge(const std::string& id) const;
    int degree(const std::string& id) const;

    // Full geometric chain of an edge including both endpoint positions.
    std::vector<Point3> chain(const Edge& e) const;
};

// Abstract multigraph: vertex indices 0..n-1, loops allowed.
struct CombinatorialGraph {
    struct Edge {
        int u = 0, v = 0;
        std::string id;
        bool is_loop() const { return u == v; }
    };

    std::string name;
    std::vector<std::string> vertex_ids;
    std::vector<Edge> edges;

    int degree(int v) const;
    int index_of(const std::string& id) const;  // -1 when absent
    std::vector<int> loop_edge_indices() const;
    bool connected() const;
};

// The multiset of unit tangents at a vertex, one per incident edge-end
// (a loop contributes two). The sole input to the per-vertex functionals.
struct VertexStar {
    std::string vertex_id;
    std::vector<Vec3> tangents;
    int degree() const { return static_cast<int>(tangents.size()); }
};

struct ValidationReport {
    bool connected = true;
    int vertex_count = 0;
    int edge_count = 0;
    int loop_count = 0;
};

// --- ingestion / emission ------------------------------------------------

// Parses and validates the JSON document (see README for the schema).
SpatialGraph load_graph(const std::string& text);
SpatialGraph load_graph_file(const std::string& path);

// Canonical form: vertices and edges sorted by id, shortest-round-trip
// decimals. save(load(save(g))) == save(g) byte for byte.
std::string save_graph(const SpatialGraph& g);

ValidationReport validate(const SpatialGraph& g);
CombinatorialGraph combinatorial(const SpatialGraph& g);

// FNV-1a over the canonical serialization; seeds deterministic perturbations.
std::uint64_t graph_hash(const SpatialGraph& g);

// --- geometry queries ----------------------------------------------------

VertexStar tangent_star(const SpatialGraph& g, const std::string& vertex_id);

// --- refinement ----------------------------------------------------------

// Promotes interior joint `joint_index` of the edge to a degree-2 vertex.
// The geometric image is unchanged; the vertex set grows by one.
SpatialGraph subdivide(const SpatialGraph& g, const std::string& edge_id, int joint_index);

// Polygonal arc (or closed polygon) through the sample points, in order.
// Open arcs become a single edge between two endpoint vertices; closed ones a
// two-vertex cycle. Throws on duplicate consecutive samples.
SpatialGraph inscribe(const std::string& name, const std::vector<Point3>& samples, bool closed);

// --- union ---------------------------------------------------------------

// Disjoint union with vertices identified by exact position match (within the
// separation tolerance). Edge ids from b are prefixed on collision.
SpatialGraph graph_union(const SpatialGraph& a, const SpatialGraph& b);

}  // namespace curvegraph
