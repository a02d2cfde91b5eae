#include "curvegraph/vertex_curvature.hpp"

#include <algorithm>
#include <cmath>

#include "curvegraph/graph.hpp"
#include "curvegraph/rng.hpp"
#include "curvegraph/threads.hpp"

namespace curvegraph {

double ntc_from_arrangement(const SphericalArrangement& arr) {
    double s = 0;
    for (const auto& c : arr.cells) s += c.area * std::max(c.value, 0);
    return 0.25 * s;
}

double ntc_vertex(const std::vector<Vec3>& tangents) {
    return ntc_from_arrangement(build_arrangement(tangents));
}

McEstimate ntc_vertex_mc(const std::vector<Vec3>& tangents, std::int64_t samples, std::uint64_t seed) {
    if (samples < 1)
        throw GraphError(GraphError::Code::BadArgument, "need at least one sample");
    constexpr std::int64_t kBlock = 1 << 14;
    const std::size_t n_blocks = static_cast<std::size_t>((samples + kBlock - 1) / kBlock);
    std::vector<double> block_sum(n_blocks, 0), block_sq(n_blocks, 0);
    parallel_blocks(n_blocks, [&](std::size_t bi) {
        const std::int64_t lo = static_cast<std::int64_t>(bi) * kBlock;
        const std::int64_t hi = std::min(samples, lo + kBlock);
        double s = 0, s2 = 0;
        for (std::int64_t i = lo; i < hi; ++i) {
            const Vec3 e = rng::sphere_point(seed, static_cast<std::uint64_t>(i));
            int v = 0;
            for (const auto& t : tangents) v += dot(e, t) < 0.0 ? 1 : -1;
            const double p = v > 0 ? v : 0;
            s += p;
            s2 += p * p;
        }
        block_sum[bi] = s;
        block_sq[bi] = s2;
    });
    const double sum = pairwise_sum(block_sum);
    const double sq = pairwise_sum(block_sq);
    const double n = static_cast<double>(samples);
    const double mean = sum / n;
    const double var = samples > 1 ? std::max(0.0, (sq - n * mean * mean) / (n - 1)) : 0.0;
    McEstimate r;
    r.estimate = kPi * mean;  // 1/4 * 4pi * mean
    r.stderr_of_mean = kPi * std::sqrt(var / n);
    r.samples = samples;
    return r;
}

double tc_vertex(const std::vector<Vec3>& tangents) {
    if (tangents.size() < 2)
        throw GraphError(GraphError::Code::BadArgument, "tc needs degree >= 2");
    double s = 0;
    for (std::size_t i = 0; i < tangents.size(); ++i)
        for (std::size_t j = i + 1; j < tangents.size(); ++j)
            s += exterior_angle(tangents[i], tangents[j]);
    return s;
}

double vtc_vertex(const std::vector<Vec3>& tangents) {
    Vec3 s{0, 0, 0};
    for (const auto& t : tangents) s += t;
    return s.norm();
}

namespace {

double cone_sum(const std::vector<Vec3>& tangents, const Vec3& e) {
    double s = 0;
    for (const auto& t : tangents) s += std::asin(std::clamp(dot(t, e), -1.0, 1.0));
    return s;
}

// Projected-gradient ascent on the sphere; the objective is concave-ish in
// patches but non-smooth where <Ti,e> = +-1, so the line search backs off
// aggressively and the caller keeps the best of all starts anyway.
double ascend(const std::vector<Vec3>& tangents, Vec3 e) {
    double f = cone_sum(tangents, e);
    for (int it = 0; it < 200; ++it) {
        Vec3 g{0, 0, 0};
        for (const auto& t : tangents) {
            const double d = std::clamp(dot(t, e), -1.0, 1.0);
            g += t / std::sqrt(std::max(1.0 - d * d, 1e-16));
        }
        Vec3 gt = g - dot(g, e) * e;
        const double gn = gt.norm();
        if (gn < 1e-10) break;
        double step = 0.5 / (1.0 + gn);
        bool moved = false;
        for (int bt = 0; bt < 48; ++bt) {
            const Vec3 cand = (e + step * gt).normalized();
            const double fc = cone_sum(tangents, cand);
            if (fc > f + 1e-15) {
                e = cand;
                f = fc;
                moved = true;
                break;
            }
            step *= 0.5;
        }
        if (!moved) break;
    }
    return f;
}

}  // namespace

double ctc_vertex(const std::vector<Vec3>& tangents) {
    if (tangents.empty())
        throw GraphError(GraphError::Code::BadArgument, "ctc needs degree >= 1");
    std::vector<Vec3> seeds;
    for (const auto& t : tangents) {
        seeds.push_back(t);
        seeds.push_back(-1.0 * t);
    }
    Vec3 sum{0, 0, 0};
    for (const auto& t : tangents) sum += t;
    if (sum.norm() > 1e-12) {
        seeds.push_back(sum.normalized());
        seeds.push_back(-1.0 * sum.normalized());
    }
    for (std::size_t i = 0; i < tangents.size(); ++i)
        for (std::size_t j = i + 1; j < tangents.size(); ++j) {
            const Vec3 x = cross(tangents[i], tangents[j]);
            if (x.norm() > 1e-12) {
                seeds.push_back(x.normalized());
                seeds.push_back(-1.0 * x.normalized());
            }
        }

    double best = -1e30;
    for (const auto& s : seeds) best = std::max(best, std::max(cone_sum(tangents, s), ascend(tangents, s)));
    // Quasi-uniform scan as a safety floor under the multi-start ascent.
    for (const Vec3& e : fibonacci_sphere(10000)) best = std::max(best, cone_sum(tangents, e));
    return best;
}

VertexReport vertex_report(const std::vector<Vec3>& tangents) {
    VertexReport r;
    r.degree = static_cast<int>(tangents.size());
    r.ntc = ntc_vertex(tangents);
    r.vtc = vtc_vertex(tangents);
    r.ctc = ctc_vertex(tangents);
    if (r.degree >= 2) {
        r.tc = tc_vertex(tangents);
        for (std::size_t i = 0; i < tangents.size(); ++i)
            for (std::size_t j = i + 1; j < tangents.size(); ++j)
                r.exterior_angles.push_back(exterior_angle(tangents[i], tangents[j]));
    }
    return r;
}

}  // namespace curvegraph
