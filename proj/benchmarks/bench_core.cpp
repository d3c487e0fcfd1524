#include <benchmark/benchmark.h>

#include "monoinv/harness.hpp"
#include "monoinv/measure.hpp"
#include "monoinv/unimodal.hpp"

using namespace monoinv;

namespace {

std::vector<PiecewiseMonotone> sample(int max_knots, std::size_t n = 64) {
    GenConfig cfg;
    cfg.seed = 1;
    cfg.max_knots = max_knots;
    std::vector<PiecewiseMonotone> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(gen_monotone(instance_config(cfg, i)));
    return out;
}

void BM_Generate(benchmark::State& state) {
    GenConfig cfg;
    cfg.max_knots = static_cast<int>(state.range(0));
    std::uint64_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(gen_monotone(instance_config(cfg, i++)));
}
BENCHMARK(BM_Generate)->Arg(4)->Arg(12)->Arg(48);

void BM_Inverse(benchmark::State& state) {
    auto gs = sample(static_cast<int>(state.range(0)));
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(inverse_class(gs[i++ % gs.size()]));
}
BENCHMARK(BM_Inverse)->Arg(4)->Arg(12)->Arg(48);

void BM_Classify(benchmark::State& state) {
    auto gs = sample(static_cast<int>(state.range(0)));
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(classify(gs[i++ % gs.size()]));
}
BENCHMARK(BM_Classify)->Arg(4)->Arg(12)->Arg(48);

void BM_Pushforward(benchmark::State& state) {
    auto gs = sample(static_cast<int>(state.range(0)));
    std::vector<std::pair<PiecewiseMeasure, PiecewiseMonotone>> cases;
    for (const auto& g : gs)
        if (auto h = inverse_class(g); std::holds_alternative<PiecewiseMonotone>(h))
            cases.emplace_back(lebesgue_restricted(g), std::get<PiecewiseMonotone>(h));
    std::size_t i = 0;
    for (auto _ : state) {
        const auto& [m, h] = cases[i++ % cases.size()];
        benchmark::DoNotOptimize(pushforward(m, h));
    }
}
BENCHMARK(BM_Pushforward)->Arg(4)->Arg(12)->Arg(48);

void BM_Law(benchmark::State& state, const char* law) {
    GenConfig cfg;
    cfg.seed = 7;
    for (auto _ : state) benchmark::DoNotOptimize(run_law(law, 100, cfg));
    state.SetItemsProcessed(state.iterations() * 100);
}
BENCHMARK_CAPTURE(BM_Law, galois, "GALOIS")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Law, main_equiv, "MAIN_EQUIV")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Law, ac_equiv, "AC_EQUIV")->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
