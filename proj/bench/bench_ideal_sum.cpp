// Ideal sums for 1/E10-type terms: per-ideal reference, table serial, table parallel.
// Argument: norm bound.

#include <benchmark/benchmark.h>

#include <vector>

#include "merocusp/kernels.hpp"
#include "merocusp/lattice.hpp"

using namespace merocusp;

namespace {

constexpr prec_t P = 256;
constexpr long M = 5;

std::vector<SeriesTerm> terms() { return {{12, 0, 0, BigComplex(1, 0, P)}, {12, 1, 1, BigComplex(1, 0, P)}}; }

void BM_reference(benchmark::State& state) {
    auto ideals = enumerate_primitive(Field::gaussian, state.range(0));
    auto t = terms();
    for (auto _ : state) benchmark::DoNotOptimize(ideal_sum_reference(Field::gaussian, ideals, t, M, P));
    state.counters["ideals"] = static_cast<double>(ideals.size());
}

void BM_table(benchmark::State& state, Execution mode) {
    auto table = IdealTable::get(Field::gaussian, state.range(0), P);
    auto t = terms();
    for (auto _ : state) benchmark::DoNotOptimize(ideal_sum(*table, t, M, P, mode));
    state.counters["ideals"] = static_cast<double>(table->ideals().size());
}

void BM_table_build(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(IdealTable(Field::gaussian, state.range(0), P));
}

}  // namespace

BENCHMARK(BM_reference)->Arg(1000)->Arg(5000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_table, serial, Execution::serial)->Arg(1000)->Arg(5000)->Arg(20000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_table, parallel, Execution::parallel)
    ->Arg(1000)
    ->Arg(5000)
    ->Arg(20000)
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();
BENCHMARK(BM_table_build)->Arg(5000)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
