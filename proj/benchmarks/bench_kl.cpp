#include <benchmark/benchmark.h>

#include <eacws/fixtures.hpp>
#include <eacws/kl.hpp>
#include <eacws/pipeline.hpp>
#include <eacws/word_ops.hpp>

namespace {

struct Prepared {
    std::vector<eacws::StateVector> states;
    std::vector<eacws::PauliOperator> errors;
    eacws::QubitLayout layout;
};

Prepared prepare(const char* fixture) {
    eacws::CodeRecord rec = eacws::load_fixture_record(fixture);
    eacws::ConstructedCode cc =
        eacws::construct_code(rec.n, rec.c, eacws::ring_graph(rec.graph.n), rec.d);
    eacws::ClassicalCode code;
    code.length = rec.n + rec.c;
    for (const auto& w : rec.codewords)
        code.codewords.push_back(eacws::parse_bits(w, rec.n + rec.c, rec.n));
    auto table = eacws::word_operator_table(code, cc.generators, cc.map);
    eacws::StateVector base = eacws::base_state(cc.layout);
    eacws::apply_encoding(base, cc.map, eacws::ConjugateDirection::forward);
    Prepared p{eacws::codeword_states(table, base),
               eacws::enumerate_single_errors(cc.layout), cc.layout};
    p.errors.insert(p.errors.begin(), eacws::identity_pauli(cc.layout));
    return p;
}

void bench_kl_check(benchmark::State& state) {
    Prepared p = prepare("paper-6-4-3-1");
    for (auto _ : state) {
        eacws::KLReport report = eacws::kl_check(p.states, p.errors);
        benchmark::DoNotOptimize(report.pass);
    }
}

void bench_distance(benchmark::State& state) {
    Prepared p = prepare("paper-6-4-3-1");
    std::vector<std::size_t> support;
    for (std::size_t q = 0; q < p.layout.n; ++q) support.push_back(q);
    for (auto _ : state) {
        eacws::DistanceReport rep = eacws::certify_distance(p.states, p.layout, 3, &support);
        benchmark::DoNotOptimize(rep.certified);
    }
}

}  // namespace

BENCHMARK(bench_kl_check)->Unit(benchmark::kMillisecond);
BENCHMARK(bench_distance)->Unit(benchmark::kMillisecond);
