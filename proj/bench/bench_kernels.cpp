#include "logmonoid/cone.hpp"
#include "logmonoid/kernels.hpp"

#include <benchmark/benchmark.h>

using namespace logmonoid;

namespace {

std::vector<Vector> simplex_rays(long height) {
    return {make_vector({1, 0, 0}), make_vector({0, 1, 0}), make_vector({3, 7, height})};
}

struct Candidates {
    std::vector<Vector> points;
    std::vector<Integer> degree;
    std::vector<Vector> facets;
};

Candidates candidates(long height) {
    auto rays = simplex_rays(height);
    RationalCone c = RationalCone::from_generators(3, rays);
    Candidates out;
    out.points = kernels::serial::parallelepiped_points(kernels::prepare_parallelepiped(rays));
    out.points.insert(out.points.end(), rays.begin(), rays.end());
    Vector w = c.grading();
    std::sort(out.points.begin(), out.points.end(),
              [&](const Vector& a, const Vector& b) { return dot(w, a) < dot(w, b); });
    for (const auto& x : out.points) out.degree.push_back(dot(w, x));
    out.facets = c.facet_normals();
    return out;
}

void BM_points_serial(benchmark::State& state) {
    auto p = kernels::prepare_parallelepiped(simplex_rays(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(kernels::serial::parallelepiped_points(p));
}

void BM_points_omp(benchmark::State& state) {
    auto p = kernels::prepare_parallelepiped(simplex_rays(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(kernels::omp::parallelepiped_points(p));
}

void BM_mask_serial(benchmark::State& state) {
    Candidates c = candidates(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(kernels::serial::irreducible_mask(c.points, c.degree, c.facets));
}

void BM_mask_omp(benchmark::State& state) {
    Candidates c = candidates(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(kernels::omp::irreducible_mask(c.points, c.degree, c.facets));
}

}  // namespace

BENCHMARK(BM_points_serial)->Arg(1000)->Arg(20000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_points_omp)->Arg(1000)->Arg(20000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_mask_serial)->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_mask_omp)->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
