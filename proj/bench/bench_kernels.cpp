#include <benchmark/benchmark.h>

#include "posetlab/enumerate.hpp"
#include "posetlab/graph_posets.hpp"
#include "posetlab/homology.hpp"

using namespace posetlab;

namespace {

// Sub(G) for a rank-3 graph with the given number of edges
FinitePoset sub_poset(int edges)
{
    for (const auto& cg : enumerate_spine_graphs(3))
        if (cg.graph.num_edges() == edges)
            return build_poset(cg.graph, PosetKind::Sub).poset;
    return {};
}

void BM_OrderComplexParallel(benchmark::State& state)
{
    const FinitePoset p = sub_poset(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(order_complex(p));
}

void BM_OrderComplexSerial(benchmark::State& state)
{
    const FinitePoset p = sub_poset(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(order_complex_serial(p));
}

void BM_BoundaryParallel(benchmark::State& state)
{
    const SimplicialComplex k = order_complex(sub_poset(6));
    const int d = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(boundary_matrix(k, d));
}

void BM_BoundarySerial(benchmark::State& state)
{
    const SimplicialComplex k = order_complex(sub_poset(6));
    const int d = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(boundary_matrix_serial(k, d));
}

void BM_ReducedHomology(benchmark::State& state)
{
    const SimplicialComplex k = order_complex(sub_poset(static_cast<int>(state.range(0))));
    for (auto _ : state)
        benchmark::DoNotOptimize(reduced_homology(k));
}

}  // namespace

BENCHMARK(BM_OrderComplexParallel)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OrderComplexSerial)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BoundaryParallel)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BoundarySerial)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ReducedHomology)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
