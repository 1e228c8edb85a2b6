#include "stmodal/correspondence.hpp"
#include "stmodal/random.hpp"

#include <benchmark/benchmark.h>
#include <omp.h>

using namespace stmodal;

namespace {

Frame bench_frame(std::size_t worlds) {
    Rng rng(derive_seed(0, 900 + worlds));
    Frame f;
    while (f.size() != worlds) f = random_transitive_frame(rng, worlds, 0.4, 0.5);
    return f;
}

void BM_validate_reference(benchmark::State& state) {
    const Frame f = bench_frame(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(frame_validates_reference(f, axiom(AxiomName::aaf)));
}

void BM_validate_kernel(benchmark::State& state) {
    const Frame f = bench_frame(static_cast<std::size_t>(state.range(0)));
    omp_set_num_threads(static_cast<int>(state.range(1)));
    for (auto _ : state) benchmark::DoNotOptimize(frame_validates(f, axiom(AxiomName::aaf)));
    omp_set_num_threads(omp_get_num_procs());
}

void BM_fo_reference(benchmark::State& state) {
    const Frame f = bench_frame(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(fo_check_reference(f, AxiomName::aa2f));
}

void BM_fo_kernel(benchmark::State& state) {
    const Frame f = bench_frame(static_cast<std::size_t>(state.range(0)));
    omp_set_num_threads(static_cast<int>(state.range(1)));
    for (auto _ : state) benchmark::DoNotOptimize(fo_check(f, AxiomName::aa2f));
    omp_set_num_threads(omp_get_num_procs());
}

} // namespace

BENCHMARK(BM_validate_reference)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_validate_kernel)->ArgsProduct({{4, 5}, {1, 4}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_fo_reference)->Arg(16)->Arg(32)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_fo_kernel)->ArgsProduct({{16, 32}, {1, 4}})->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
