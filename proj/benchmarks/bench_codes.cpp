#include <benchmark/benchmark.h>

#include "subcode/codebuild.hpp"

using namespace subcode;

namespace {

void BM_greedy_select(benchmark::State& state) {
    const std::size_t n = std::size_t(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(greedy_select(n, Metric::subspace, 4, 2));
}

void BM_rate_lower_bound_row(benchmark::State& state) {
    // heaviest published parameter row: both metrics at n = 13
    for (auto _ : state) {
        const auto ds = greedy_select(13, Metric::subspace, 6, 3);
        const auto di = greedy_select(13, Metric::injection, 3, 3);
        benchmark::DoNotOptimize(rate_lower_bound(ds, 2));
        benchmark::DoNotOptimize(rate_lower_bound(di, 2));
    }
}

void BM_gabidulin(benchmark::State& state) {
    auto f = Gf::get(2);
    for (auto _ : state)
        benchmark::DoNotOptimize(gabidulin_code(f, 6, 7, 3));
}

void BM_min_rank_scan(benchmark::State& state) {
    auto f = Gf::get(2);
    const LinearMatrixCode c = gabidulin_code(f, 4, 4, 2);
    for (auto _ : state) benchmark::DoNotOptimize(min_rank_distance(c));
}

void BM_build_code_n6(benchmark::State& state) {
    auto f = Gf::get(2);
    for (auto _ : state)
        benchmark::DoNotOptimize(build_code(f, 6, Metric::subspace, 4));
}

}  // namespace

BENCHMARK(BM_greedy_select)->Arg(9)->Arg(13);
BENCHMARK(BM_rate_lower_bound_row);
BENCHMARK(BM_gabidulin);
BENCHMARK(BM_min_rank_scan);
BENCHMARK(BM_build_code_n6);
