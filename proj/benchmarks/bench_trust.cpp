#include <benchmark/benchmark.h>

#include <random>

#include "netrust/report.hpp"
#include "netrust/spectrum.hpp"
#include "netrust/trust.hpp"

using namespace netrust;

namespace {

RecordSet make_records(std::size_t n, std::size_t vocab) {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    RecordSet rs{"bench", {}};
    rs.records.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        rs.records.push_back({"q" + std::to_string(i),
                              "L" + std::to_string(rng() % vocab),
                              "L" + std::to_string(rng() % vocab), unif(rng)});
    }
    return rs;
}

}  // namespace

static void BM_ScoreAll(benchmark::State& state) {
    auto rs = make_records(static_cast<std::size_t>(state.range(0)), 100);
    TrustParams p;
    for (auto _ : state) {
        auto scored = score_all(rs, p);
        benchmark::DoNotOptimize(scored);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ScoreAll)->Range(1 << 10, 1 << 18);

static void BM_Spectrum(benchmark::State& state) {
    auto rs = make_records(static_cast<std::size_t>(state.range(0)), 100);
    TrustParams p;
    auto scored = score_all(rs, p);
    for (auto _ : state) {
        auto spec = trust_spectrum(scored, Grouping::predicted, rs.model_name);
        benchmark::DoNotOptimize(spec);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Spectrum)->Range(1 << 10, 1 << 18);

static void BM_ModelSummary(benchmark::State& state) {
    auto rs = make_records(static_cast<std::size_t>(state.range(0)), 100);
    TrustParams p;
    for (auto _ : state) {
        auto s = model_summary(rs, p);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(BM_ModelSummary)->Range(1 << 10, 1 << 16);
