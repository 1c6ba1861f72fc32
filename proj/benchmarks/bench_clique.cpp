#include <benchmark/benchmark.h>

#include <eacws/clique.hpp>
#include <eacws/pipeline.hpp>

namespace {

eacws::ConflictSet ring_conflicts(std::size_t n, std::size_t c) {
    return eacws::construct_code(n, c, eacws::ring_graph(n)).conflicts;
}

void bench_search(benchmark::State& state) {
    auto conflicts = ring_conflicts(static_cast<std::size_t>(state.range(0)),
                                    static_cast<std::size_t>(state.range(1)));
    std::uint64_t nodes = 0;
    for (auto _ : state) {
        eacws::SearchResult sr = eacws::max_clique_code(conflicts);
        benchmark::DoNotOptimize(sr.code.K());
        nodes = sr.nodes;
    }
    state.counters["nodes"] = static_cast<double>(nodes);
}

}  // namespace

BENCHMARK(bench_search)->Args({6, 1})->Args({7, 2})->Unit(benchmark::kMillisecond);
