#include "curvegraph/crofton.hpp"

#include <cmath>
#include <exception>
#include <stdexcept>

#include "curvegraph/projection.hpp"
#include "curvegraph/rng.hpp"
#include "curvegraph/threads.hpp"

namespace curvegraph {

QuadratureResult crofton_ntc(const SpatialGraph& g, Quadrature scheme, std::size_t n,
                             std::uint64_t seed) {
    if (n < 10)
        throw GraphError(GraphError::Code::BadArgument, "need at least 10 sample directions");

    std::vector<Vec3> lattice;
    Rotation rot;
    if (scheme == Quadrature::Fibonacci) {
        lattice = fibonacci_sphere(n);
        rot = rng::rotation(seed, 0);
    }

    constexpr std::size_t kBlock = 1024;
    const std::size_t blocks = (n + kBlock - 1) / kBlock;
    struct Slot {
        double sum = 0, sumsq = 0;
        std::size_t accepted = 0, rejected = 0;
        std::exception_ptr error;
    };
    std::vector<Slot> slots(blocks);

    parallel_blocks(blocks, [&](std::size_t b) {
        Slot& s = slots[b];
        try {
            const std::size_t hi = std::min(n, (b + 1) * kBlock);
            for (std::size_t k = b * kBlock; k < hi; ++k) {
                Vec3 e = scheme == Quadrature::MonteCarlo ? rng::sphere_point(seed, k)
                                                          : rot.apply(lattice[k]);
                double m;
                try {
                    m = mu(g, e).value();
                } catch (const GraphError& ge) {
                    if (ge.code != GraphError::Code::NonGeneric) throw;
                    ++s.rejected;
                    continue;
                }
                s.sum += m;
                s.sumsq += m * m;
                ++s.accepted;
            }
        } catch (...) {
            s.error = std::current_exception();
        }
    });

    QuadratureResult r;
    double sum = 0, sumsq = 0;
    for (const Slot& s : slots) {
        if (s.error) std::rethrow_exception(s.error);
        sum += s.sum;
        sumsq += s.sumsq;
        r.samples += s.accepted;
        r.rejected += s.rejected;
    }
    if (r.rejected * 1000 >= n)
        throw GraphError(GraphError::Code::NonGeneric,
                         "more than 0.1% of sample directions were non-generic");
    const double m = static_cast<double>(r.samples);
    const double mean = sum / m;
    r.estimate = 2.0 * kPi * mean;
    double var = r.samples > 1 ? (sumsq - sum * sum / m) / (m - 1.0) : 0.0;
    if (var < 0) var = 0;
    r.uncertainty = 2.0 * kPi * std::sqrt(var / m);
    return r;
}

std::vector<HeatmapCell> mu_heatmap(const SpatialGraph& g, int resolution) {
    if (resolution < 8)
        throw GraphError(GraphError::Code::BadArgument, "heatmap resolution must be at least 8");
    const int rows = resolution, cols = 2 * resolution;
    std::vector<HeatmapCell> grid(static_cast<std::size_t>(rows) * cols);

    std::vector<std::exception_ptr> errors(rows);
    parallel_blocks(static_cast<std::size_t>(rows), [&](std::size_t i) {
        try {
            const double lat = 90.0 - (static_cast<double>(i) + 0.5) * 180.0 / rows;
            const double clat = std::cos(lat * kPi / 180.0);
            const double slat = std::sin(lat * kPi / 180.0);
            for (int j = 0; j < cols; ++j) {
                const double lon = -180.0 + (j + 0.5) * 360.0 / cols;
                Vec3 e{clat * std::cos(lon * kPi / 180.0), clat * std::sin(lon * kPi / 180.0),
                       slat};
                HeatmapCell& cell = grid[i * cols + j];
                cell.lon = lon;
                cell.lat = lat;
                try {
                    cell.mu = mu(g, e);
                } catch (const GraphError& ge) {
                    if (ge.code != GraphError::Code::NonGeneric) throw;
                    cell.mu = mu(g, ensure_generic(g, e));
                    cell.generic = false;
                }
            }
        } catch (...) {
            errors[i] = std::current_exception();
        }
    });
    for (const auto& err : errors)
        if (err) std::rethrow_exception(err);
    return grid;
}

}  // namespace curvegraph
