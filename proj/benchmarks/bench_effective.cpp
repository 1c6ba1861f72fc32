#include <benchmark/benchmark.h>

#include <eacws/effective.hpp>
#include <eacws/generators.hpp>
#include <eacws/graph.hpp>

namespace {

void bench_catalog(benchmark::State& state) {
    auto n = static_cast<std::size_t>(state.range(0));
    auto c = static_cast<std::size_t>(state.range(1));
    auto layout = eacws::make_layout(n, c);
    auto gens = eacws::encoded_generators(layout, eacws::ring_graph(n));
    auto singles = eacws::enumerate_single_errors(layout);
    for (auto _ : state) {
        auto catalog = eacws::build_error_catalog(gens, singles);
        benchmark::DoNotOptimize(catalog.distinct_nonzero());
    }
}

void bench_reduce(benchmark::State& state) {
    auto layout = eacws::make_layout(9, 1);
    auto gens = eacws::encoded_generators(layout, eacws::ring_graph(9));
    auto errors = eacws::enumerate_errors_up_to_weight(layout, 2);
    for (auto _ : state) {
        for (const auto& e : errors)
            benchmark::DoNotOptimize(eacws::reduce_to_effective(e, gens).pattern.any());
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * errors.size()));
}

}  // namespace

BENCHMARK(bench_catalog)->Args({7, 2})->Args({9, 1})->Unit(benchmark::kMicrosecond);
BENCHMARK(bench_reduce)->Unit(benchmark::kMicrosecond);
