#include <benchmark/benchmark.h>

#include <random>

#include "subcode/matrix.hpp"
#include "subcode/pluecker.hpp"

using namespace subcode;

namespace {

MatrixGf random_matrix(const GfPtr& f, std::size_t rows, std::size_t cols,
                       std::mt19937_64& rng) {
    MatrixGf m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.set(i, j, fe_t(rng() % f->q()));
    return m;
}

void BM_rref(benchmark::State& state) {
    auto f = Gf::get(unsigned(state.range(0)));
    std::mt19937_64 rng(1);
    const MatrixGf m = random_matrix(f, 32, 64, rng);
    for (auto _ : state) benchmark::DoNotOptimize(m.rref());
}

void BM_det(benchmark::State& state) {
    auto f = Gf::get(unsigned(state.range(0)));
    std::mt19937_64 rng(2);
    const MatrixGf m = random_matrix(f, 16, 16, rng);
    for (auto _ : state) benchmark::DoNotOptimize(m.det());
}

void BM_pluecker_coordinates(benchmark::State& state) {
    auto f = Gf::get(2);
    std::mt19937_64 rng(3);
    MatrixGf m = random_matrix(f, 5, 10, rng);
    while (m.rank() != 5) m = random_matrix(f, 5, 10, rng);
    const Subspace s = Subspace::row_space(m);
    for (auto _ : state) benchmark::DoNotOptimize(pluecker_coordinates(s));
}

}  // namespace

BENCHMARK(BM_rref)->Arg(2)->Arg(3)->Arg(256);
BENCHMARK(BM_det)->Arg(2)->Arg(4);
BENCHMARK(BM_pluecker_coordinates);
