// Serial reference sweep against the OpenMP sweep on the same range.

#include <benchmark/benchmark.h>

#include "weilpoly/engine.hpp"

namespace {

using namespace weilpoly;

SearchRange sweep_range()
{
    SearchRange range;
    range.rhos = { 5, 7 };
    range.b_min = 1;
    range.b_max = 1;
    range.q_max = 64;
    return range;
}

ClassifyOptions sweep_options(benchmark::State const & state)
{
    ClassifyOptions opts;
    opts.numeric_oracle = state.range(0) != 0;
    return opts;
}

void BM_search_serial(benchmark::State & state)
{
    auto range = sweep_range();
    auto opts = sweep_options(state);
    std::size_t n = 0;
    for (auto _ : state) {
        auto summary = search_serial(range, opts, [&](ClassificationReport const &) { ++n; });
        benchmark::DoNotOptimize(summary.valid);
    }
    state.counters["reports"] = benchmark::Counter(static_cast<double>(n), benchmark::Counter::kIsRate);
}

void BM_search_parallel(benchmark::State & state)
{
    auto range = sweep_range();
    auto opts = sweep_options(state);
    auto workers = static_cast<unsigned>(state.range(1));
    std::size_t n = 0;
    for (auto _ : state) {
        auto summary = search(range, opts, [&](ClassificationReport const &) { ++n; }, workers);
        benchmark::DoNotOptimize(summary.valid);
    }
    state.counters["reports"] = benchmark::Counter(static_cast<double>(n), benchmark::Counter::kIsRate);
}

} // namespace

BENCHMARK(BM_search_serial)->Args({ 0 })->Args({ 1 })->Unit(benchmark::kMillisecond);
BENCHMARK(BM_search_parallel)
    ->ArgsProduct({ { 0, 1 }, { 2, 4 } })
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
