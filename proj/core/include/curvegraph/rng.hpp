#pragma once

#include <cstdint>
#include <vector>

#include "curvegraph/geometry.hpp"

namespace curvegraph {

// Counter-based splittable generator: every draw is a stateless hash of
// (seed, counter, lane). Parallel and serial evaluation orders produce
// identical streams, which keeps Monte Carlo runs reproducible under any
// thread count.
namespace rng {

inline std::uint64_t mix64(std::uint64_t v) {
    v += 0x9e3779b97f4a7c15ULL;
    v = (v ^ (v >> 30)) * 0xbf58476d1ce4e5b9ULL;
    v = (v ^ (v >> 27)) * 0x94d049bb133111ebULL;
    return v ^ (v >> 31);
}

inline std::uint64_t at(std::uint64_t seed, std::uint64_t counter, std::uint64_t lane = 0) {
    return mix64(mix64(mix64(seed) ^ counter) ^ (lane * 0xda942042e4dd58b5ULL));
}

// Uniform in [0,1).
inline double uniform(std::uint64_t seed, std::uint64_t counter, std::uint64_t lane = 0) {
    return static_cast<double>(at(seed, counter, lane) >> 11) * 0x1.0p-53;
}

// Uniform point on the unit sphere (area-preserving cylindrical map).
inline Vec3 sphere_point(std::uint64_t seed, std::uint64_t counter) {
    double z = 2.0 * uniform(seed, counter, 0) - 1.0;
    double phi = 2.0 * kPi * uniform(seed, counter, 1);
    double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    return {r * std::cos(phi), r * std::sin(phi), z};
}

// Uniform random rotation (Shoemake's quaternion method).
inline Rotation rotation(std::uint64_t seed, std::uint64_t counter = 0) {
    double u1 = uniform(seed, counter, 2);
    double u2 = uniform(seed, counter, 3);
    double u3 = uniform(seed, counter, 4);
    double a = std::sqrt(1.0 - u1), b = std::sqrt(u1);
    Rotation q;
    q.x = a * std::sin(2.0 * kPi * u2);
    q.y = a * std::cos(2.0 * kPi * u2);
    q.z = b * std::sin(2.0 * kPi * u3);
    q.w = b * std::cos(2.0 * kPi * u3);
    return q;
}

}  // namespace rng

// Fibonacci (golden-spiral) lattice: n nearly uniform points on the sphere.
// Offset by half a step in z so no point sits at the poles.
inline std::vector<Vec3> fibonacci_sphere(std::size_t n) {
    std::vector<Vec3> pts;
    pts.reserve(n);
    const double dz = 2.0 / static_cast<double>(n);
    const double dphi = kPi * (std::sqrt(5.0) + 1.0);
    double z = -1.0 + 0.5 * dz;
    double phi = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        pts.push_back({r * std::cos(phi), r * std::sin(phi), z});
        z += dz;
        phi += dphi;
    }
    return pts;
}

}  // namespace curvegraph
