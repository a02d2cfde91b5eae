#include "curvegraph/arrangement.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "curvegraph/graph.hpp"

namespace curvegraph {

double SphericalArrangement::total_area() const {
    double s = 0;
    for (const auto& c : cells) s += c.area;
    return s;
}

namespace {

int value_at(const std::vector<Vec3>& tangents, const Vec3& e) {
    int v = 0;
    for (const auto& t : tangents) v += dot(e, t) < 0.0 ? 1 : -1;
    return v;
}

// Directed arc of one circle, from vertex `o` to vertex `d` sweeping
// counterclockwise (around the circle normal) through `span` radians.
struct HalfEdge {
    int circle;
    int o, d;           // vertex indices
    Vec3 dir_o, dir_d;  // unit travel directions at origin and destination
    Vec3 mid;           // arc midpoint
    Vec3 dir_mid;       // unit travel direction at the midpoint
    int twin;
};

double wrap_positive(double a) {
    a = std::fmod(a, 2 * kPi);
    if (a < 0) a += 2 * kPi;
    return a;
}

}  // namespace

SphericalArrangement build_arrangement(const std::vector<Vec3>& tangents) {
    if (tangents.empty())
        throw GraphError(GraphError::Code::BadArgument, "arrangement needs at least one tangent");
    for (const auto& t : tangents)
        if (std::abs(t.norm() - 1.0) > 1e-6)
            throw GraphError(GraphError::Code::BadArgument, "tangents must be unit vectors");
    SphericalArrangement arr;

    // Deduplicate circles: T and -T define the same great circle.
    for (const auto& t : tangents) {
        Vec3 n = t.normalized();
        bool merged = false;
        for (auto& c : arr.circles) {
            if (cross(c.normal, n).norm() <= kCircleMergeTol) {
                ++c.multiplicity;
                merged = true;
                break;
            }
        }
        if (!merged) arr.circles.push_back({n, 1});
    }

    const int nc = static_cast<int>(arr.circles.size());
    if (nc == 1) {
        // Two hemispheres; sample at the poles of the single circle.
        const Vec3 n = arr.circles[0].normal;
        for (const Vec3& s : {n, -1.0 * n}) {
            SphericalArrangement::Cell cell;
            cell.area = 2 * kPi;
            cell.sample = s;
            cell.value = value_at(tangents, s);
            arr.cells.push_back(cell);
        }
        return arr;
    }

    // Pairwise intersections, merged within tolerance.
    auto add_vertex = [&](const Vec3& p) {
        for (const auto& v : arr.vertices)
            if (dist(v, p) <= kVertexMergeTol) return;
        arr.vertices.push_back(p);
    };
    for (int i = 0; i < nc; ++i)
        for (int j = i + 1; j < nc; ++j) {
            Vec3 x = cross(arr.circles[i].normal, arr.circles[j].normal);
            double nn = x.norm();
            if (nn <= kCircleMergeTol) continue;  // cannot happen post-merge, kept defensive
            x = x / nn;
            add_vertex(x);
            add_vertex(-1.0 * x);
        }

    // Split each circle into arcs at its incident vertices.
    std::vector<HalfEdge> hes;
    for (int ci = 0; ci < nc; ++ci) {
        const Vec3 n = arr.circles[ci].normal;
        const Vec3 a = any_orthogonal(n);
        const Vec3 b = cross(n, a);
        std::vector<std::pair<double, int>> on_circle;  // (theta, vertex index)
        for (int vi = 0; vi < static_cast<int>(arr.vertices.size()); ++vi) {
            const Vec3& v = arr.vertices[vi];
            if (std::abs(dot(v, n)) > kIncidenceTol) continue;
            on_circle.emplace_back(std::atan2(dot(v, b), dot(v, a)), vi);
        }
        if (on_circle.size() < 2)
            throw GraphError(GraphError::Code::NonGeneric,
                             "degenerate arrangement: a circle has fewer than two incident vertices");
        std::sort(on_circle.begin(), on_circle.end());

        auto at = [&](double th) { return std::cos(th) * a + std::sin(th) * b; };
        auto tangent_at = [&](double th) { return -std::sin(th) * a + std::cos(th) * b; };

        const int k = static_cast<int>(on_circle.size());
        for (int s = 0; s < k; ++s) {
            const auto [th0, v0] = on_circle[s];
            const auto [th1raw, v1] = on_circle[(s + 1) % k];
            const double span = s + 1 < k ? th1raw - th0 : wrap_positive(th1raw - th0);
            const double th1 = th0 + span;
            const double thm = th0 + span / 2;

            HalfEdge fwd;
            fwd.circle = ci;
            fwd.o = v0;
            fwd.d = v1;
            fwd.dir_o = tangent_at(th0);
            fwd.dir_d = tangent_at(th1);
            fwd.mid = at(thm);
            fwd.dir_mid = tangent_at(thm);

            HalfEdge rev;
            rev.circle = ci;
            rev.o = v1;
            rev.d = v0;
            rev.dir_o = -1.0 * tangent_at(th1);
            rev.dir_d = -1.0 * tangent_at(th0);
            rev.mid = fwd.mid;
            rev.dir_mid = -1.0 * fwd.dir_mid;

            fwd.twin = static_cast<int>(hes.size()) + 1;
            rev.twin = static_cast<int>(hes.size());
            hes.push_back(fwd);
            hes.push_back(rev);
        }
    }

    // Outgoing half-edges per vertex, for the face-following rule.
    std::vector<std::vector<int>> outgoing(arr.vertices.size());
    for (int h = 0; h < static_cast<int>(hes.size()); ++h) outgoing[hes[h].o].push_back(h);

    // next(h): at v = dest(h), the outgoing half-edge g != twin(h) minimizing the
    // counterclockwise angle from g's direction to -dir_d(h). Faces keep their
    // interior on the left; that angle is the face's interior angle at v.
    auto next_of = [&](int h, double* interior_angle) {
        const HalfEdge& he = hes[h];
        const int v = he.d;
        const Vec3 up = arr.vertices[v];
        const Vec3 a = any_orthogonal(up);
        const Vec3 b = cross(up, a);
        auto ang = [&](const Vec3& d) { return std::atan2(dot(d, b), dot(d, a)); };
        const double ref = ang(-1.0 * he.dir_d);
        int best = -1;
        double best_delta = 4 * kPi;
        for (int g : outgoing[v]) {
            if (g == he.twin) continue;
            double delta = wrap_positive(ref - ang(hes[g].dir_o));
            if (delta < best_delta) {
                best_delta = delta;
                best = g;
            }
        }
        if (best < 0)
            throw GraphError(GraphError::Code::NonGeneric, "arrangement face tracing found no continuation");
        *interior_angle = best_delta;
        return best;
    };

    std::vector<char> used(hes.size(), 0);
    for (int h0 = 0; h0 < static_cast<int>(hes.size()); ++h0) {
        if (used[h0]) continue;
        SphericalArrangement::Cell cell;
        double angle_sum = 0;
        int n_sides = 0;
        int h = h0;
        do {
            used[h] = 1;
            const HalfEdge& he = hes[h];
            cell.boundary.push_back({he.circle, arr.vertices[he.o], arr.vertices[he.d], he.mid, he.dir_mid});
            double ia = 0;
            h = next_of(h, &ia);
            angle_sum += ia;
            ++n_sides;
        } while (h != h0);
        cell.area = angle_sum - (n_sides - 2) * kPi;

        // Interior sample: step left (interior side) off an arc midpoint, retrying
        // across boundary arcs and step sizes until clearly off every circle.
        bool found = false;
        double best_clearance = -1;
        for (double delta : {1e-4, 1e-3, 1e-5, 1e-2}) {
            for (const auto& arc : cell.boundary) {
                Vec3 s = (arc.mid + delta * cross(arc.mid, arc.dir)).normalized();
                double clearance = 1e30;
                for (const auto& c : arr.circles) clearance = std::min(clearance, std::abs(dot(s, c.normal)));
                if (clearance > best_clearance) {
                    best_clearance = clearance;
                    cell.sample = s;
                }
                if (clearance > delta * 0.1 && clearance > 1e-12) {
                    found = true;
                    break;
                }
            }
            if (found) break;
        }
        if (!found && best_clearance <= 1e-12)
            throw GraphError(GraphError::Code::NonGeneric, "could not sample a cell interior");
        cell.value = value_at(tangents, cell.sample);
        arr.cells.push_back(std::move(cell));
    }
    return arr;
}

}  // namespace curvegraph
