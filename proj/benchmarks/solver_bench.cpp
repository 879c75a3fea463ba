#include <benchmark/benchmark.h>

#include "hds/generate.hpp"
#include "hds/graph.hpp"
#include "hds/reduction.hpp"
#include "hds/solver.hpp"

namespace {

void BM_SignPartition(benchmark::State& state) {
    const auto n = state.range(0);
    std::vector<hds::Int> w(static_cast<std::size_t>(n));
    hds::Rng rng(1);
    for (auto& x : w) x = rng.uniform(-10, 10);
    const hds::WeightVector weights(w);
    for (auto _ : state) {
        benchmark::DoNotOptimize(hds::sign_partition(weights));
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_SignPartition)->RangeMultiplier(2)->Range(8, 64)->Complexity(benchmark::oNCubed);

// Planted degree sequences at half density, the hardest regime for the
// include/exclude search.
void BM_DecidePlanted(benchmark::State& state) {
    const auto n = state.range(0);
    const auto m = hds::choose3(n) / 2;
    std::uint64_t seed = 0;
    std::uint64_t nodes = 0;
    for (auto _ : state) {
        state.PauseTiming();
        const auto planted = hds::gen_planted_degseq(n, m, ++seed);
        state.ResumeTiming();
        const auto outcome = hds::decide_degseq(planted.instance.d);
        nodes += outcome.stats.nodes;
        benchmark::DoNotOptimize(outcome.answer);
    }
    state.counters["nodes"] = benchmark::Counter(static_cast<double>(nodes),
                                                 benchmark::Counter::kAvgIterations);
}
BENCHMARK(BM_DecidePlanted)->DenseRange(6, 11)->Unit(benchmark::kMillisecond);

// Reduced 3-partition instances, planted (YES) and unplanted (mostly NO).
void BM_DecideReduced(benchmark::State& state) {
    const auto n = state.range(0);
    const bool planted = state.range(1) != 0;
    std::uint64_t seed = 0;
    std::uint64_t nodes = 0;
    for (auto _ : state) {
        state.PauseTiming();
        const auto inst = hds::gen_partition(n, 8, ++seed, planted);
        const auto reduced = hds::reduce_partition_to_degseq(inst);
        state.ResumeTiming();
        const auto outcome = hds::decide_degseq(reduced.degseq.d);
        nodes += outcome.stats.nodes;
        benchmark::DoNotOptimize(outcome.answer);
    }
    state.counters["nodes"] = benchmark::Counter(static_cast<double>(nodes),
                                                 benchmark::Counter::kAvgIterations);
}
BENCHMARK(BM_DecideReduced)
    ->ArgsProduct({{6, 9}, {0, 1}})
    ->Unit(benchmark::kMillisecond);

void BM_ErdosGallai(benchmark::State& state) {
    const auto n = state.range(0);
    // n/2-regular with n even: graphical, so every (j, l) pair is evaluated.
    const hds::DegreeSequence seq(std::vector<hds::Int>(static_cast<std::size_t>(n), n / 2));
    for (auto _ : state) {
        benchmark::DoNotOptimize(hds::eg_check(seq));
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_ErdosGallai)->RangeMultiplier(4)->Range(16, 1024)->Complexity(benchmark::oNSquared);

} // namespace

BENCHMARK_MAIN();
