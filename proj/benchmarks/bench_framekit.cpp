#include <benchmark/benchmark.h>

#include "framekit/bounds.hpp"
#include "framekit/duals.hpp"
#include "framekit/gramian.hpp"

using namespace framekit;

namespace {

GridPtr bench_grid(int nodes_per_unit) {
    return build_grid(BoundedSet({{-0.5, 0.5}}), nodes_per_unit);
}

void gram_quadrature(benchmark::State& state) {
    const auto k_count = static_cast<int>(state.range(0));
    const auto grid = bench_grid(256);
    const Generator g = make_generator(TruncatedGaussianShape{1.0}, grid);
    const TranslateSet lambda = TranslateSet::jittered_lattice(1.0, k_count, 0.125, 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(gram_matrix(g, lambda, TransformMode::quadrature));
    }
}

void frame_bounds_eig(benchmark::State& state) {
    const auto k_count = static_cast<int>(state.range(0));
    const auto grid = bench_grid(256);
    const Generator g = make_generator(TruncatedGaussianShape{1.0}, grid);
    const TranslateSet lambda = TranslateSet::jittered_lattice(1.0, k_count, 0.125, 2);
    const SystemMatrices sys = translate_system(g, lambda);
    for (auto _ : state) {
        benchmark::DoNotOptimize(frame_bounds(sys));
    }
}

void factorization_residuals(benchmark::State& state) {
    const auto npu = static_cast<int>(state.range(0));
    const auto grid = bench_grid(npu);
    const Generator g = make_generator(RaisedCosineShape{0.5}, grid);
    const TranslateSet lambda = TranslateSet::jittered_lattice(1.0, 64, 0.125, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_factorizations(g, lambda));
    }
}

void canonical_dual_columns(benchmark::State& state) {
    const auto k_count = static_cast<int>(state.range(0));
    const auto grid = bench_grid(128);
    const Generator g = make_generator(TruncatedGaussianShape{1.0}, grid);
    const TranslateSet lambda = TranslateSet::jittered_lattice(1.0, k_count, 0.125, 4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(canonical_dual_translates(
            g, lambda, DualMethod::explicit_formula, 1e-10));
    }
}

} // namespace

BENCHMARK(gram_quadrature)->Arg(16)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(frame_bounds_eig)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(factorization_residuals)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(canonical_dual_columns)->Arg(64)->Arg(136)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
