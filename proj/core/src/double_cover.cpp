#include "curvegraph/double_cover.hpp"

#include <algorithm>
#include <cmath>

#include "curvegraph/projection.hpp"
#include "curvegraph/rng.hpp"

namespace curvegraph {

DoubledGraph doubled(const CombinatorialGraph& g) { return DoubledGraph{g, 2}; }

namespace {

// Dart encoding: 4*edge + 2*copy + end, where end 0 sits at u and end 1 at v.
inline int dart_edge(int d) { return d >> 2; }
inline int dart_copy(int d) { return (d >> 1) & 1; }
inline int dart_end(int d) { return d & 1; }
inline int dart_mate(int d) { return d ^ 1; }  // other end of the same copy

inline bool reversal_pair(int a, int b) {
    return dart_edge(a) == dart_edge(b) && dart_copy(a) != dart_copy(b) &&
           dart_end(a) == dart_end(b);
}

bool match_vertex(const std::vector<int>& darts, std::vector<char>& used, std::size_t from,
                  bool nonreversing, std::vector<std::pair<int, int>>& out) {
    while (from < darts.size() && used[from]) ++from;
    if (from >= darts.size()) return true;
    used[from] = 1;
    for (std::size_t j = from + 1; j < darts.size(); ++j) {
        if (used[j]) continue;
        if (nonreversing && reversal_pair(darts[from], darts[j])) continue;
        used[j] = 1;
        out.emplace_back(darts[from], darts[j]);
        if (match_vertex(darts, used, from + 1, nonreversing, out)) return true;
        out.pop_back();
        used[j] = 0;
    }
    used[from] = 0;
    return false;
}

}  // namespace

Circuit euler_circuit(const DoubledGraph& dg, bool nonreversing, std::uint64_t seed) {
    const auto& g = dg.base;
    const int n = static_cast<int>(g.vertex_ids.size());
    if (nonreversing)
        for (int v = 0; v < n; ++v)
            if (g.degree(v) == 1)
                throw GraphError(GraphError::Code::BadArgument,
                                 "non-reversing circuit impossible: vertex '" + g.vertex_ids[v] +
                                     "' has degree 1");

    // Collect darts per vertex and pick a transition matching at each.
    std::vector<std::vector<int>> at(n);
    for (int ei = 0; ei < static_cast<int>(g.edges.size()); ++ei)
        for (int c = 0; c < 2; ++c) {
            at[g.edges[ei].u].push_back(4 * ei + 2 * c + 0);
            at[g.edges[ei].v].push_back(4 * ei + 2 * c + 1);
        }

    std::vector<int> partner(4 * g.edges.size(), -1);
    std::uint64_t ctr = 0;
    for (int v = 0; v < n; ++v) {
        auto& darts = at[v];
        for (std::size_t i = darts.size(); i > 1; --i) {
            const std::size_t j =
                static_cast<std::size_t>(rng::uniform(seed, ctr++) * static_cast<double>(i));
            std::swap(darts[i - 1], darts[std::min(j, i - 1)]);
        }
        std::vector<char> used(darts.size(), 0);
        std::vector<std::pair<int, int>> pairs;
        if (!match_vertex(darts, used, 0, nonreversing, pairs))
            throw GraphError(GraphError::Code::BadArgument,
                             "no valid transition matching at vertex '" + g.vertex_ids[v] + "'");
        for (const auto& [a, b] : pairs) {
            partner[a] = b;
            partner[b] = a;
        }
    }

    Circuit circuit;
    std::vector<char> visited(2 * g.edges.size(), 0);
    for (int ei = 0; ei < static_cast<int>(g.edges.size()); ++ei)
        for (int c = 0; c < 2; ++c) {
            if (visited[2 * ei + c]) continue;
            std::vector<Traversal> comp;
            int d = 4 * ei + 2 * c;  // enter this copy at its u end
            const int start = d;
            do {
                visited[2 * dart_edge(d) + dart_copy(d)] = 1;
                comp.push_back({dart_edge(d), dart_copy(d), dart_end(d) == 0});
                d = partner[dart_mate(d)];
            } while (d != start);
            circuit.components.push_back(std::move(comp));
        }
    return circuit;
}

HalfInt nlm_from_circuit(const SpatialGraph& g, const Circuit& c, const Direction& e,
                         const std::string& vertex_id) {
    // Branch tangents at each end of each edge, pointing away from the endpoint.
    const Direction en = e.normalized();
    auto end_tangent = [&](const SpatialGraph::Edge& edge, bool at_v) {
        const auto chain = g.chain(edge);
        return at_v ? (chain[chain.size() - 2] - chain.back()).normalized()
                    : (chain[1] - chain.front()).normalized();
    };
    auto rises = [&](const Vec3& t) {
        const double d = dot(en, t);
        if (std::abs(d) <= kOrthogonalTol)
            throw GraphError(GraphError::Code::NonGeneric,
                             "zero height derivative at vertex '" + vertex_id + "'");
        return d > 0;
    };

    int lmax = 0, lmin = 0;
    for (const auto& comp : c.components) {
        const std::size_t m = comp.size();
        for (std::size_t i = 0; i < m; ++i) {
            const Traversal& t = comp[i];
            const Traversal& t2 = comp[(i + 1) % m];
            const auto& edge = g.edges.at(static_cast<std::size_t>(t.edge));
            const auto& edge2 = g.edges.at(static_cast<std::size_t>(t2.edge));
            const std::string& shared = t.forward ? edge.v : edge.u;
            const std::string& from2 = t2.forward ? edge2.u : edge2.v;
            if (shared != from2)
                throw GraphError(GraphError::Code::BadArgument, "circuit is not closed");
            if (shared != vertex_id) continue;
            const bool up_in = rises(end_tangent(edge, t.forward));
            const bool up_out = rises(end_tangent(edge2, !t2.forward));
            if (!up_in && !up_out) ++lmax;
            if (up_in && up_out) ++lmin;
        }
    }
    return HalfInt::from_doubled(lmax - lmin);
}

namespace {

double best_matching(std::vector<int>& darts, std::vector<char>& used, std::size_t from,
                     const std::vector<Vec3>& tangents) {
    while (from < used.size() && used[from]) ++from;
    if (from >= used.size()) return 0.0;
    used[from] = 1;
    double best = 1e300;
    for (std::size_t j = from + 1; j < used.size(); ++j) {
        if (used[j]) continue;
        if (reversal_pair(darts[from], darts[j])) continue;
        used[j] = 1;
        const double a = exterior_angle(tangents[static_cast<std::size_t>(dart_edge(darts[from]))],
                                        tangents[static_cast<std::size_t>(dart_edge(darts[j]))]);
        best = std::min(best, a + best_matching(darts, used, from + 1, tangents));
        used[j] = 0;
    }
    used[from] = 0;
    return best;
}

}  // namespace

double min_vertex_pairing_curvature(const std::vector<Vec3>& tangents) {
    const std::size_t d = tangents.size();
    if (d < 2 || d > 8)
        throw GraphError(GraphError::Code::BudgetExceeded,
                         "vertex pairing enumeration supports degrees 2..8");
    // Model the star as d spoke edges at one vertex: darts (i, copy, end 0).
    std::vector<int> darts;
    for (std::size_t i = 0; i < d; ++i)
        for (int c = 0; c < 2; ++c) darts.push_back(4 * static_cast<int>(i) + 2 * c);
    std::vector<char> used(darts.size(), 0);
    return 0.5 * best_matching(darts, used, 0, tangents);
}

}  // namespace curvegraph
