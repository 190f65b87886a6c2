// C = A*B with C m x n, A m x 128, B 128 x n, m workers: MoA kernel against
// the reference gemm loop. Args are {m, n}.

#include <benchmark/benchmark.h>

#include "moa/gemm.hpp"
#include "moa/harness.hpp"
#include "moa/parallel.hpp"

namespace {

constexpr moa::index_t kEll = 128;

void matmul_args(benchmark::internal::Benchmark* b) {
    for (const int m : {1, 2, 4}) {
        for (int n = 2; n <= 4096; n *= 4) {
            b->Args({m, n});
        }
    }
}

void set_counters(benchmark::State& state, moa::index_t m, moa::index_t n) {
    state.counters["flops"] =
        benchmark::Counter(static_cast<double>(2 * m * n * kEll), benchmark::Counter::kIsIterationInvariantRate);
}

void BM_MoaInner(benchmark::State& state) {
    const moa::index_t m = state.range(0);
    const moa::index_t n = state.range(1);
    const auto [a, b] = moa::harness::make_operands(1, m, kEll, n);
    const auto plan = moa::plan_inner(a.shape(), b.shape());
    for (auto _ : state) {
        auto c = moa::execute_parallel(plan, a, b, {}, m);
        benchmark::DoNotOptimize(c.data().data());
    }
    set_counters(state, m, n);
}
BENCHMARK(BM_MoaInner)->Apply(matmul_args)->UseRealTime();

void BM_GemmBaseline(benchmark::State& state) {
    const moa::index_t m = state.range(0);
    const moa::index_t n = state.range(1);
    const auto [a, b] = moa::harness::make_operands(1, m, kEll, n);
    const auto lhs = moa::gemm::from_row_major(a);
    const auto rhs = moa::gemm::from_row_major(b);
    moa::gemm::GemmParams params;
    params.m = m;
    params.n = n;
    params.k = kEll;
    moa::gemm::ColMajorMatrix c(m, n);
    for (auto _ : state) {
        moa::gemm::gemm_parallel(params, lhs, rhs, c, m);
        benchmark::DoNotOptimize(c.data.data());
        benchmark::ClobberMemory();
    }
    set_counters(state, m, n);
}
BENCHMARK(BM_GemmBaseline)->Apply(matmul_args)->UseRealTime();

void BM_MoaOuter(benchmark::State& state) {
    const moa::index_t size = state.range(0);
    const auto [a, b] = moa::harness::make_operands(2, 1, size, size);
    const auto plan = moa::plan_outer(a.shape(), b.shape());
    for (auto _ : state) {
        auto c = moa::execute_sequential(plan, a, b);
        benchmark::DoNotOptimize(c.data().data());
    }
    state.SetItemsProcessed(state.iterations() * size * size * size);
}
BENCHMARK(BM_MoaOuter)->RangeMultiplier(4)->Range(4, 64);

} // namespace

BENCHMARK_MAIN();
