#include "graphzeta/pool.hpp"
#include "graphzeta/spectral.hpp"
#include "graphzeta/walk_operators.hpp"
#include "graphzeta/zeta.hpp"

#include <benchmark/benchmark.h>

namespace gz = graphzeta;

static gz::Graph bench_graph(benchmark::State& state) {
    gz::SampleStream rng(42);
    return gz::random_connected_graph(static_cast<int>(state.range(0)), 0.2, rng);
}

static void BM_GroverMatrix(benchmark::State& state) {
    const gz::Graph g = bench_graph(state);
    for (auto _ : state) benchmark::DoNotOptimize(gz::grover_matrix(g));
}
BENCHMARK(BM_GroverMatrix)->Arg(10)->Arg(40)->Arg(100);

static void BM_KonnoSatoPoint(benchmark::State& state) {
    const gz::Graph g = bench_graph(state);
    const gz::Complex u(0.3, 0.1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(gz::grover_zeta_reciprocal(g, u));
        benchmark::DoNotOptimize(gz::konno_sato_rhs(g, u));
    }
}
BENCHMARK(BM_KonnoSatoPoint)->Arg(10)->Arg(40);

static void BM_GroverSpectrumDirect(benchmark::State& state) {
    const gz::Graph g = bench_graph(state);
    for (auto _ : state) benchmark::DoNotOptimize(gz::grover_spectrum_direct(g));
}
BENCHMARK(BM_GroverSpectrumDirect)->Arg(10)->Arg(40);

static void BM_GroverSpectrumViaMapping(benchmark::State& state) {
    const gz::Graph g = bench_graph(state);
    for (auto _ : state) benchmark::DoNotOptimize(gz::grover_spectrum_via_mapping(g));
}
BENCHMARK(BM_GroverSpectrumViaMapping)->Arg(10)->Arg(40)->Arg(100);

static void BM_ZeroSet(benchmark::State& state) {
    const gz::Graph g = bench_graph(state);
    for (auto _ : state) benchmark::DoNotOptimize(gz::qw_zero_set(g));
}
BENCHMARK(BM_ZeroSet)->Arg(10)->Arg(100);

BENCHMARK_MAIN();
