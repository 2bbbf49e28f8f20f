#include "sgc/families.hpp"
#include "sgc/solve.hpp"
#include "sgc/transform.hpp"

#include <benchmark/benchmark.h>

namespace {

void BM_chi_c_circuit(benchmark::State& state)
{
    auto g = sgc::circuit(static_cast<int>(state.range(0)), {0});
    for (auto _ : state) benchmark::DoNotOptimize(sgc::chi_c(g));
}
BENCHMARK(BM_chi_c_circuit)->DenseRange(3, 9, 2);

void BM_chi_c_balanced_circuit(benchmark::State& state)
{
    auto g = sgc::circuit(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(sgc::chi_c(g));
}
BENCHMARK(BM_chi_c_balanced_circuit)->DenseRange(3, 9, 2);

void BM_report_kstar(benchmark::State& state)
{
    auto g = sgc::k_star(std::vector<int>(static_cast<std::size_t>(state.range(0)), 2));
    for (auto _ : state) benchmark::DoNotOptimize(sgc::report(g));
}
BENCHMARK(BM_report_kstar)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_report_random(benchmark::State& state)
{
    auto g = sgc::random_signed(static_cast<int>(state.range(0)), 0.5, 0.5, 17);
    for (auto _ : state) benchmark::DoNotOptimize(sgc::report(g));
}
BENCHMARK(BM_report_random)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

void BM_feasible(benchmark::State& state)
{
    auto g = sgc::random_signed(8, 0.6, 0.5, 3);
    const sgc::Int k = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(sgc::feasible(g, k, 2));
}
BENCHMARK(BM_feasible)->DenseRange(5, 13, 4);

void BM_descend(benchmark::State& state)
{
    auto g = sgc::circuit(5, {0});
    auto c = *sgc::feasible(g, 21, 5);
    for (auto _ : state) benchmark::DoNotOptimize(sgc::descend(g, c));
}
BENCHMARK(BM_descend);

} // namespace

BENCHMARK_MAIN();
