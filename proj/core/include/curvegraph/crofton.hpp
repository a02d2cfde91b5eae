#pragma once

#include <cstdint>
#include <vector>

#include "curvegraph/graph.hpp"
#include "curvegraph/halfint.hpp"

namespace curvegraph {

enum class Quadrature { MonteCarlo, Fibonacci };

struct QuadratureResult {
    double estimate = 0;     // radians
    double uncertainty = 0;  // stderr of the mean (MC) / dispersion bound (lattice)
    std::size_t samples = 0;
    std::size_t rejected = 0;  // directions that stayed non-generic
};

// Estimates 2*pi * E[mu(e)] over uniformly distributed directions, which
// equals the graph's net total curvature. The fibonacci scheme evaluates the
// lattice under a seeded random global rotation. Throws when more than 0.1%
// of the directions are rejected as non-generic.
QuadratureResult crofton_ntc(const SpatialGraph& g, Quadrature scheme, std::size_t n,
                             std::uint64_t seed);

struct HeatmapCell {
    double lon = 0, lat = 0;  // degrees, cell center
    HalfInt mu;
    bool generic = true;  // false: value comes from a perturbed direction
};

// Equirectangular grid of mu values, `resolution` latitude rows by
// 2*resolution longitude columns. Cells whose exact direction is non-generic
// are evaluated at a deterministically perturbed direction and flagged.
std::vector<HeatmapCell> mu_heatmap(const SpatialGraph& g, int resolution);

}  // namespace curvegraph
