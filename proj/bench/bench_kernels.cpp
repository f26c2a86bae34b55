#include "generators.h"
#include "oracles.h"

#include <benchmark/benchmark.h>

using namespace rp;

namespace {

Exec mode(const benchmark::State& state) { return state.range(1) ? Exec::Parallel : Exec::Serial; }

void label(benchmark::State& state) { state.SetLabel(state.range(1) ? "parallel" : "serial"); }

// weak visibility of every edge from one long edge
void BM_WeakVisible(benchmark::State& state)
{
    Instance inst = gen_winding_spiral(static_cast<int>(state.range(0)));
    Region r(inst);
    const Polygon& P = inst.polygon;
    Exec exec = mode(state);
    for (auto _ : state)
        for (int e = 1; e < P.size(); ++e)
            benchmark::DoNotOptimize(
                weak_visible(r.plain(), Carrier::edge(P, 0), IntervalSet(Interval::open(0, 1)), Carrier::edge(P, e),
                             IntervalSet(Interval::open(0, 1)), exec));
    label(state);
}

void BM_MirrorLayers(benchmark::State& state)
{
    Instance inst = gen_spiral(static_cast<int>(state.range(0)));
    Region r(inst);
    Exec exec = mode(state);
    for (auto _ : state)
        benchmark::DoNotOptimize(run(r, exec).mirror_count());
    label(state);
}

void BM_Illuminate(benchmark::State& state)
{
    Instance inst = gen_random_simple(static_cast<int>(state.range(0)), 11);
    Region r(inst);
    Exec exec = mode(state);
    for (auto _ : state)
        benchmark::DoNotOptimize(illuminate(r.plain(), inst.source, inst.target, 6, exec).fronts.size());
    label(state);
}

}  // namespace

BENCHMARK(BM_WeakVisible)->ArgsProduct({{12, 24, 40}, {0, 1}})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_MirrorLayers)->ArgsProduct({{12, 20, 28}, {0, 1}})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Illuminate)->ArgsProduct({{16, 32, 48}, {0, 1}})->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
