#include <benchmark/benchmark.h>

#include "waypath/planner.hpp"

using namespace waypath;

namespace {

OccupancyGrid empty_grid(int n) { return OccupancyGrid(n, n, 1.0); }

void BM_Dijkstra(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const OccupancyGrid grid = empty_grid(n);
    for (auto _ : state) {
        auto plan = dijkstra(grid, {0, 0}, {n - 1, n - 1});
        benchmark::DoNotOptimize(plan.cost_cm);
    }
}
BENCHMARK(BM_Dijkstra)->Arg(25)->Arg(50)->Arg(100);

void BM_ThetaPlan(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const OccupancyGrid grid = empty_grid(n);
    const WorldPoint from = grid.center({0, 0});
    const WorldPoint to = grid.center({n - 1, n - 1});
    for (auto _ : state) {
        auto plan = theta_plan(from, 0.0, to);
        benchmark::DoNotOptimize(plan.cost_cm);
    }
}
BENCHMARK(BM_ThetaPlan)->Arg(25)->Arg(50)->Arg(100);

void BM_RandomGridDijkstra(benchmark::State& state) {
    const OccupancyGrid grid = random_grid(100, 100, 1.0, 0.2, 12345);
    for (auto _ : state) {
        try {
            auto plan = dijkstra(grid, {0, 0}, {99, 99});
            benchmark::DoNotOptimize(plan.ops);
        } catch (const Error&) {
        }
    }
}
BENCHMARK(BM_RandomGridDijkstra);

} // namespace

BENCHMARK_MAIN();
