#include <benchmark/benchmark.h>

#include <cstdint>

#include "curvegraph/crofton.hpp"
#include "curvegraph/double_cover.hpp"
#include "curvegraph/families.hpp"
#include "curvegraph/graph_curvature.hpp"
#include "curvegraph/minimizer.hpp"
#include "curvegraph/projection.hpp"
#include "curvegraph/vertex_curvature.hpp"

namespace {

using namespace curvegraph;

// Exact ntc of a single star via the spherical arrangement, by degree.
void BM_NtcVertexExact(benchmark::State& state) {
    const int degree = static_cast<int>(state.range(0));
    const std::vector<Vec3> star = random_star(degree, 12345);
    for (auto _ : state) {
        double v = ntc_vertex(star);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_NtcVertexExact)->DenseRange(3, 8);

// Monte Carlo ntc throughput; items = sphere samples.
void BM_NtcVertexMonteCarlo(benchmark::State& state) {
    const std::vector<Vec3> star = random_star(5, 777);
    const std::int64_t samples = state.range(0);
    for (auto _ : state) {
        McEstimate e = ntc_vertex_mc(star, samples, 99);
        benchmark::DoNotOptimize(e.estimate);
    }
    state.SetItemsProcessed(state.iterations() * samples);
}
BENCHMARK(BM_NtcVertexMonteCarlo)->RangeMultiplier(8)->Range(1 << 10, 1 << 19);

// Projection multiplicity of a straight tetrahedron embedding along one
// generic direction (critical point scan plus local extremum count).
void BM_MuProfile(benchmark::State& state) {
    const SpatialGraph g = embed_family(parse_family("complete:4"));
    const Vec3 dir = ensure_generic(g, Vec3{0.31, 0.52, 0.8}.normalized());
    for (auto _ : state) {
        HalfInt m = mu(g, dir);
        benchmark::DoNotOptimize(m.doubled);
    }
}
BENCHMARK(BM_MuProfile);

// Crofton-style quadrature of ntc_total; items = directions integrated.
void BM_CroftonEstimate(benchmark::State& state) {
    const SpatialGraph g = embed_family(parse_family("theta:3"));
    const std::size_t samples = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        QuadratureResult r = crofton_ntc(g, Quadrature::MonteCarlo, samples, 5);
        benchmark::DoNotOptimize(r.estimate);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(samples));
}
BENCHMARK(BM_CroftonEstimate)->RangeMultiplier(4)->Range(1 << 10, 1 << 16);

// Exhaustive flat-position minimization over all vertex height orders.
void BM_FlatMin(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const CombinatorialGraph cg = make_family(parse_family("complete:" + std::to_string(n)));
    for (auto _ : state) {
        FlatResult r = flat_min(cg);
        benchmark::DoNotOptimize(r.mu_star.doubled);
    }
    state.SetLabel("orders=" + std::to_string(flat_min(cg).searched));
}
BENCHMARK(BM_FlatMin)->DenseRange(4, 6);

// Nonreversing Euler circuit extraction in the doubled graph.
void BM_EulerCircuit(benchmark::State& state) {
    const CombinatorialGraph cg = make_family(parse_family("ladder:4"));
    const DoubledGraph dg = doubled(cg);
    std::uint64_t seed = 0;
    for (auto _ : state) {
        Circuit c = euler_circuit(dg, true, seed++);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_EulerCircuit);

// Full curvature report of a dense polyline graph (per-vertex ntc/tc/ctc
// plus joint bends); the ctc supremum search dominates.
void BM_CurvatureReport(benchmark::State& state) {
    const SpatialGraph g = embed_family(parse_family("complete:5"));
    for (auto _ : state) {
        CurvatureReport r = curvature_report(g);
        benchmark::DoNotOptimize(r.ntc_total);
    }
}
BENCHMARK(BM_CurvatureReport);

}  // namespace

BENCHMARK_MAIN();
