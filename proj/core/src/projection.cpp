#include "curvegraph/projection.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "curvegraph/rng.hpp"

namespace curvegraph {

namespace {

// Signs of the height derivative along each segment of an edge chain.
std::vector<int> segment_signs(const SpatialGraph& g, const SpatialGraph::Edge& edge,
                               const Direction& e, std::string* witness) {
    const auto chain = g.chain(edge);
    std::vector<int> signs;
    signs.reserve(chain.size() - 1);
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        const Vec3 d = (chain[i + 1] - chain[i]).normalized();
        const double t = dot(e, d);
        if (std::abs(t) <= kOrthogonalTol) {
            if (witness) {
                std::ostringstream ss;
                ss << "edge '" << edge.id << "' segment " << i << " is orthogonal to the direction";
                *witness = ss.str();
            }
            return {};
        }
        signs.push_back(t > 0 ? 1 : -1);
    }
    return signs;
}

}  // namespace

GenericityReport is_generic(const SpatialGraph& g, const Direction& e) {
    GenericityReport r;
    std::vector<double> heights;
    for (const auto& edge : g.edges) {
        std::string w;
        const auto signs = segment_signs(g, edge, e, &w);
        if (signs.empty() && !w.empty()) {
            r.witness = w;
            return r;
        }
        const auto chain = g.chain(edge);
        for (std::size_t j = 0; j + 1 < signs.size(); ++j)
            if (signs[j] != signs[j + 1]) heights.push_back(dot(e, chain[j + 1]));
    }
    for (const auto& [id, p] : g.vertices) heights.push_back(dot(e, p));
    std::sort(heights.begin(), heights.end());
    for (std::size_t i = 0; i + 1 < heights.size(); ++i)
        if (heights[i + 1] - heights[i] <= kHeightSepTol) {
            std::ostringstream ss;
            ss << "critical heights collide near " << heights[i];
            r.witness = ss.str();
            return r;
        }
    r.generic = true;
    return r;
}

Direction ensure_generic(const SpatialGraph& g, Direction e) {
    e = e.normalized();
    GenericityReport rep = is_generic(g, e);
    if (rep.generic) return e;
    const std::uint64_t h = graph_hash(g);
    for (int k = 0; k < 8; ++k) {
        const Vec3 axis = rng::sphere_point(h, static_cast<std::uint64_t>(k));
        e = rotate_about_axis(e, axis, 1e-7).normalized();
        rep = is_generic(g, e);
        if (rep.generic) return e;
    }
    throw GraphError(GraphError::Code::NonGeneric,
                     "direction remained non-generic after 8 perturbations: " + rep.witness);
}

std::pair<int, int> updown_degrees(const SpatialGraph& g, const Direction& e,
                                   const std::string& vertex_id) {
    int up = 0, down = 0;
    auto branch = [&](const Vec3& toward) {
        const double t = dot(e, toward.normalized());
        if (std::abs(t) <= kOrthogonalTol)
            throw GraphError(GraphError::Code::NonGeneric,
                             "zero height derivative on an edge at vertex '" + vertex_id + "'");
        (t > 0 ? up : down) += 1;
    };
    bool any = false;
    for (const auto& edge : g.edges) {
        const auto chain = g.chain(edge);
        if (edge.u == vertex_id) {
            branch(chain[1] - chain[0]);
            any = true;
        }
        if (edge.v == vertex_id) {
            branch(chain[chain.size() - 2] - chain[chain.size() - 1]);
            any = true;
        }
    }
    if (!any)
        throw GraphError(GraphError::Code::BadArgument, "vertex '" + vertex_id + "' has no incident edges");
    return {up, down};
}

HalfInt nlm(const SpatialGraph& g, const Direction& e, const std::string& vertex_id) {
    const auto [up, down] = updown_degrees(g, e, vertex_id);
    return HalfInt::from_doubled(down - up);
}

ProjectionProfile profile(const SpatialGraph& g, const Direction& e) {
    const auto rep = is_generic(g, e);
    if (!rep.generic)
        throw GraphError(GraphError::Code::NonGeneric, "non-generic direction: " + rep.witness);

    ProjectionProfile pr;
    pr.direction = e.normalized();

    for (const auto& [id, p] : g.vertices) {
        CriticalPoint cp;
        cp.kind = CriticalPoint::Kind::Vertex;
        cp.id = id;
        cp.height = dot(pr.direction, p);
        cp.where = p;
        std::tie(cp.d_plus, cp.d_minus) = updown_degrees(g, pr.direction, id);
        cp.nlm = HalfInt::from_doubled(cp.d_minus - cp.d_plus);
        pr.critical.push_back(std::move(cp));
    }
    for (const auto& edge : g.edges) {
        const auto signs = segment_signs(g, edge, pr.direction, nullptr);
        const auto chain = g.chain(edge);
        for (std::size_t j = 0; j + 1 < signs.size(); ++j) {
            if (signs[j] == signs[j + 1]) continue;
            CriticalPoint cp;
            cp.kind = CriticalPoint::Kind::JointExtremum;
            cp.id = edge.id;
            cp.joint_index = static_cast<int>(j);
            cp.where = chain[j + 1];
            cp.height = dot(pr.direction, cp.where);
            if (signs[j] > 0) {  // rises then falls: local maximum
                cp.d_plus = 0;
                cp.d_minus = 2;
            } else {
                cp.d_plus = 2;
                cp.d_minus = 0;
            }
            cp.nlm = HalfInt::from_doubled(cp.d_minus - cp.d_plus);
            pr.critical.push_back(std::move(cp));
        }
    }
    std::sort(pr.critical.begin(), pr.critical.end(),
              [](const CriticalPoint& a, const CriticalPoint& b) { return a.height < b.height; });

    HalfInt total, pos;
    for (const auto& cp : pr.critical) {
        total += cp.nlm;
        pos += cp.nlm.pos();
    }
    if (!(total == HalfInt{}))
        throw GraphError(GraphError::Code::NonGeneric, "net local maxima did not sum to zero");
    pr.mu = pos;
    return pr;
}

HalfInt mu(const SpatialGraph& g, const Direction& e) { return profile(g, e).mu; }

namespace {

int fiber_count_checked(const SpatialGraph& g, const ProjectionProfile& pr, double level) {
    const Direction& e = pr.direction;
    for (const auto& [id, p] : g.vertices)
        if (std::abs(dot(e, p) - level) <= kHeightSepTol)
            throw GraphError(GraphError::Code::BadArgument, "level passes through vertex '" + id + "'");
    for (const auto& edge : g.edges)
        for (const auto& p : edge.polyline)
            if (std::abs(dot(e, p) - level) <= kHeightSepTol)
                throw GraphError(GraphError::Code::BadArgument,
                                 "level passes through a joint of edge '" + edge.id + "'");

    int geometric = 0;
    for (const auto& edge : g.edges) {
        const auto chain = g.chain(edge);
        for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
            const double a = dot(e, chain[i]) - level;
            const double b = dot(e, chain[i + 1]) - level;
            if (a * b < 0) ++geometric;
        }
    }

    HalfInt above;
    for (const auto& cp : pr.critical)
        if (cp.height > level) above += cp.nlm;
    // #(e,s) = 2 * sum of nlm above the level; exact in doubled units.
    if (above.doubled != geometric)
        throw GraphError(GraphError::Code::NonGeneric,
                         "fiber count disagreed with the partial nlm sum");
    return geometric;
}

}  // namespace

int fiber_count(const SpatialGraph& g, const Direction& e, double level) {
    return fiber_count_checked(g, profile(g, e), level);
}

int width_in_direction(const SpatialGraph& g, const Direction& e) {
    const auto pr = profile(g, e);
    if (pr.critical.size() < 2) return 0;
    int best = 0;
    for (std::size_t i = 0; i + 1 < pr.critical.size(); ++i) {
        const double lo = pr.critical[i].height;
        const double hi = pr.critical[i + 1].height;
        int count = -1;
        for (double f : {0.5, 0.45, 0.55, 0.37, 0.63}) {
            try {
                count = fiber_count_checked(g, pr, lo + f * (hi - lo));
                break;
            } catch (const GraphError&) {
                continue;
            }
        }
        if (count < 0)
            throw GraphError(GraphError::Code::NonGeneric,
                             "no clear level found inside a critical gap");
        best = std::max(best, count);
    }
    return best;
}

}  // namespace curvegraph
