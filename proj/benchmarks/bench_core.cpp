#include <benchmark/benchmark.h>

#include "collatzdb/collatzdb.hpp"

using namespace collatzdb;

static void BM_ConjugacyPermutation(benchmark::State& state) {
    const BranchMap t = BranchMap::collatz();
    const auto k = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(conjugacy_permutation(t, k));
    state.SetComplexityN(std::int64_t{1} << k);
}
BENCHMARK(BM_ConjugacyPermutation)->DenseRange(8, 20, 4)->Complexity();

static void BM_VerifyConjugacy(benchmark::State& state) {
    const BranchMap t = BranchMap::collatz();
    const auto k = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(verify_conjugacy(t, k));
}
BENCHMARK(BM_VerifyConjugacy)->DenseRange(6, 14, 4);

static void BM_FkmSequence(benchmark::State& state) {
    const auto k = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(fkm_sequence(2, k));
}
BENCHMARK(BM_FkmSequence)->DenseRange(8, 20, 4);

static void BM_PhiExact(benchmark::State& state) {
    const BranchMap t = BranchMap::collatz();
    const Rational n(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(phi_exact(t, n));
}
BENCHMARK(BM_PhiExact)->Arg(27)->Arg(97)->Arg(871);

static void BM_UniformPower(benchmark::State& state) {
    const BranchMap t = BranchMap::collatz();
    const auto k = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(check_uniform_power(t, k, k + 3));
}
BENCHMARK(BM_UniformPower)->DenseRange(4, 8, 2);

static void BM_EnumerateCycles(benchmark::State& state) {
    const auto max_len = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_cycles_for_b(1, max_len));
}
BENCHMARK(BM_EnumerateCycles)->Arg(10)->Arg(14);

BENCHMARK_MAIN();
