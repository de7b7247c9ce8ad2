// Serial reference kernel against the OpenMP kernel on the same grid.

#include <benchmark/benchmark.h>

#include <omp.h>

#include "splice/sweep.hpp"

namespace {

const std::vector<splice::GridPoint>& grid() {
    static const auto points = splice::expand_grid({{5, 7, 11}, {2, 3, 4}, 10000, 200, 1});
    return points;
}

void BM_SweepSerial(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(splice::verify_points_serial(grid()));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(grid().size()));
}

void BM_SweepParallel(benchmark::State& state) {
    const int jobs = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(splice::verify_points_parallel(grid(), jobs));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(grid().size()));
}

}  // namespace

BENCHMARK(BM_SweepSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
