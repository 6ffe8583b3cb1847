#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "netrust/density.hpp"

using namespace netrust;

static void BM_EstimateDensity(benchmark::State& state) {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::vector<double> samples(static_cast<std::size_t>(state.range(0)));
    for (auto& s : samples) s = unif(rng);
    for (auto _ : state) {
        auto d = estimate_density(samples, 0.5, 512);
        benchmark::DoNotOptimize(d);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_EstimateDensity)->Range(8, 1 << 14);

static void BM_IntegrateDensity(benchmark::State& state) {
    std::vector<double> samples{0.1, 0.4, 0.4, 0.7, 0.9};
    auto d = estimate_density(samples, 0.5, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(integrate_density(d));
    }
}
BENCHMARK(BM_IntegrateDensity)->Range(512, 1 << 14);

BENCHMARK_MAIN();
