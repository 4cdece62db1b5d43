// Wall-clock microbenchmarks for the conversion routes. The operation-count
// harness lives in the library (`bench`); this adds real-time numbers for the
// same code paths.
#include <benchmark/benchmark.h>

#include <random>

#include "bcdconv/addition.hpp"
#include "bcdconv/bench.hpp"
#include "bcdconv/divtable.hpp"
#include "bcdconv/oracle.hpp"
#include "bcdconv/parallel.hpp"

using namespace bcdconv;

namespace {

BcdNumber make_input(std::size_t n) {
    std::mt19937_64 rng(n);  // fixed per size: comparable across runs
    return random_bcd(n, rng);
}

}  // namespace

static void BM_ConvertDivtable(benchmark::State& state) {
    BcdNumber x = make_input(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        OpCounters c;
        benchmark::DoNotOptimize(convert_divtable(x, c));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ConvertDivtable)->RangeMultiplier(2)->Range(8, 1024)->Complexity();

static void BM_ConvertAddition(benchmark::State& state) {
    BcdNumber x = make_input(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        OpCounters c;
        benchmark::DoNotOptimize(convert_addition(x, c));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ConvertAddition)->RangeMultiplier(2)->Range(8, 1024)->Complexity();

static void BM_ConvertParallelRecursive(benchmark::State& state) {
    BcdNumber x = make_input(static_cast<std::size_t>(state.range(0)));
    SplitPlan plan;
    for (auto _ : state) {
        OpCounters c;
        benchmark::DoNotOptimize(convert_parallel_recursive(x, plan, c));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ConvertParallelRecursive)->RangeMultiplier(2)->Range(8, 1024)->Complexity();

static void BM_DescendingPowersOracle(benchmark::State& state) {
    BcdNumber x = make_input(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(convert_descending_powers(x));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DescendingPowersOracle)->RangeMultiplier(2)->Range(8, 512)->Complexity();

BENCHMARK_MAIN();
