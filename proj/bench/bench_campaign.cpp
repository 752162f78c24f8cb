#include <benchmark/benchmark.h>

#include "cstar/campaign.hpp"
#include "cstar/gruss.hpp"
#include "cstar/random.hpp"

namespace {

cstar::CampaignConfig bench_config(int jobs) {
    cstar::CampaignConfig config;
    config.instances = 2000;
    config.jobs = jobs;
    return config;
}

void BM_CampaignSerial(benchmark::State& state) {
    const cstar::CampaignConfig config = bench_config(1);
    for (auto _ : state) benchmark::DoNotOptimize(cstar::run_campaign_serial(config));
    state.SetItemsProcessed(state.iterations() * config.instances);
}
BENCHMARK(BM_CampaignSerial)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_CampaignParallel(benchmark::State& state) {
    const cstar::CampaignConfig config = bench_config(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(cstar::run_campaign_parallel(config));
    state.SetItemsProcessed(state.iterations() * config.instances);
}
BENCHMARK(BM_CampaignParallel)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();

// Direct functional against the O(m^2) double sum on the largest default instance shape.
cstar::GrussInstance largest_instance() {
    cstar::CampaignConfig config;
    for (std::uint64_t i = 0;; ++i) {
        cstar::GrussInstance instance = cstar::make_campaign_instance(cstar::mix_seed(7, i), config);
        if (instance.f.size() == 16 && instance.f.rows() == 4 && instance.f.cols() == 4) return instance;
    }
}

void BM_GrussFunctional(benchmark::State& state) {
    const cstar::GrussInstance instance = largest_instance();
    for (auto _ : state) benchmark::DoNotOptimize(cstar::gruss_functional(instance.f, instance.g));
}
BENCHMARK(BM_GrussFunctional);

void BM_Korkine(benchmark::State& state) {
    const cstar::GrussInstance instance = largest_instance();
    for (auto _ : state) benchmark::DoNotOptimize(cstar::korkine(instance.f, instance.g));
}
BENCHMARK(BM_Korkine);

}  // namespace

BENCHMARK_MAIN();
