#include "curvegraph/graph_curvature.hpp"

#include <cmath>

#include "curvegraph/vertex_curvature.hpp"

namespace curvegraph {

namespace {

Vec3 chain_dir(const std::vector<Point3>& chain, bool at_front) {
    Vec3 d = at_front ? chain[1] - chain[0] : chain[chain.size() - 2] - chain.back();
    double n = d.norm();
    if (n <= kSeparation)
        throw GraphError(GraphError::Code::ZeroLengthSegment, "zero-length segment in chain");
    return d / n;
}

}  // namespace

double polyline_turning(const std::vector<Point3>& chain) {
    if (chain.size() < 2)
        throw GraphError(GraphError::Code::BadArgument, "chain needs at least two points");
    double total = 0;
    for (std::size_t i = 1; i + 1 < chain.size(); ++i) {
        Vec3 in = (chain[i] - chain[i - 1]).normalized();
        Vec3 out = (chain[i + 1] - chain[i]).normalized();
        // Tangents pointing away from the joint, star convention.
        total += exterior_angle(-in, out);
    }
    return total;
}

double joint_bend_sum(const SpatialGraph& g) {
    double total = 0;
    for (const auto& e : g.edges) total += polyline_turning(g.chain(e));
    return total;
}

CurvatureReport curvature_report(const SpatialGraph& g) {
    CurvatureReport r;
    r.joint_sum = joint_bend_sum(g);
    r.ntc_total = r.tc_total = r.ctc_total = r.joint_sum;
    for (const auto& [id, v] : g.vertices) {
        (void)v;
        VertexStar star = tangent_star(g, id);
        CurvatureReport::VertexTerm t;
        t.id = id;
        t.degree = static_cast<int>(star.tangents.size());
        t.ntc = ntc_vertex(star.tangents);
        t.tc = star.tangents.size() >= 2 ? tc_vertex(star.tangents) : 0.0;
        t.ctc = ctc_vertex(star.tangents);
        r.ntc_total += t.ntc;
        r.tc_total += t.tc;
        r.ctc_total += t.ctc;
        r.vertices.push_back(std::move(t));
    }
    return r;
}

double ntc_total(const SpatialGraph& g) {
    double total = joint_bend_sum(g);
    for (const auto& [id, v] : g.vertices) {
        (void)v;
        total += ntc_vertex(tangent_star(g, id).tangents);
    }
    return total;
}

double tc_total(const SpatialGraph& g) {
    double total = joint_bend_sum(g);
    for (const auto& [id, v] : g.vertices) {
        (void)v;
        VertexStar star = tangent_star(g, id);
        if (star.tangents.size() >= 2) total += tc_vertex(star.tangents);
    }
    return total;
}

double ctc_total(const SpatialGraph& g) {
    double total = joint_bend_sum(g);
    for (const auto& [id, v] : g.vertices) {
        (void)v;
        total += ctc_vertex(tangent_star(g, id).tangents);
    }
    return total;
}

double circuit_curvature(const SpatialGraph& g, const Circuit& c) {
    double total = 0;
    for (const auto& comp : c.components) {
        if (comp.empty())
            throw GraphError(GraphError::Code::BadArgument, "empty circuit component");
        for (std::size_t i = 0; i < comp.size(); ++i) {
            const Traversal& t = comp[i];
            const Traversal& t2 = comp[(i + 1) % comp.size()];
            auto bad = [&](int ei) { return ei < 0 || static_cast<std::size_t>(ei) >= g.edges.size(); };
            if (bad(t.edge) || bad(t2.edge))
                throw GraphError(GraphError::Code::BadArgument, "traversal references unknown edge");
            const SpatialGraph::Edge& e = g.edges[t.edge];
            const SpatialGraph::Edge& e2 = g.edges[t2.edge];
            const std::string& dest = t.forward ? e.v : e.u;
            const std::string& from2 = t2.forward ? e2.u : e2.v;
            if (dest != from2)
                throw GraphError(GraphError::Code::BadArgument, "circuit is not closed");
            std::vector<Point3> chain = g.chain(e);
            std::vector<Point3> chain2 = g.chain(e2);
            total += polyline_turning(chain);
            Vec3 arrive = chain_dir(chain, !t.forward);   // away from dest
            Vec3 depart = chain_dir(chain2, t2.forward);  // away from from2
            total += exterior_angle(arrive, depart);
        }
    }
    return total;
}

SpatialGraph cylindrical_shrink(const SpatialGraph& g, const Direction& e, double delta) {
    if (!(delta > 0.0) || !(delta <= 1.0))
        throw GraphError(GraphError::Code::BadArgument, "shrink factor must be in (0, 1]");
    double n = e.norm();
    if (n <= kSeparation)
        throw GraphError(GraphError::Code::BadArgument, "axis direction must be nonzero");
    Vec3 axis = e / n;
    auto map = [&](const Point3& p) {
        Vec3 axial = axis * dot(axis, p);
        return axial + (p - axial) * delta;
    };
    SpatialGraph out = g;
    for (auto& [id, p] : out.vertices) {
        (void)id;
        p = map(p);
    }
    for (auto& edge : out.edges)
        for (auto& joint : edge.polyline) joint = map(joint);
    return out;
}

}  // namespace curvegraph
