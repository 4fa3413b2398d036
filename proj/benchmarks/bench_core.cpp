#include <benchmark/benchmark.h>

#include "qrlab/identities.hpp"

namespace {

using namespace qrlab;

// smallest n >= lo with 4n-1 prime
i64 prime_n_at(i64 lo) {
    i64 n = lo;
    while (!is_prime(u64(4 * n - 1))) ++n;
    return n;
}

void BM_isqrt(benchmark::State& state) {
    i128 x = i128(1) << 62;
    for (auto _ : state) {
        benchmark::DoNotOptimize(isqrt(x));
        x += 12345;
    }
}
BENCHMARK(BM_isqrt);

void BM_is_prime(benchmark::State& state) {
    u64 x = (u64(1) << 61) - 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(is_prime(x));
        x -= 2;
    }
}
BENCHMARK(BM_is_prime);

void BM_sum_qr_full(benchmark::State& state) {
    const auto ctx = make_context(prime_n_at(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(sum_qr(ctx, ctx.p - 1));
    state.SetComplexityN(ctx.p);
}
BENCHMARK(BM_sum_qr_full)->RangeMultiplier(4)->Range(64, 16384)->Complexity();

void BM_jump_profile(benchmark::State& state) {
    const auto ctx = make_context(prime_n_at(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(jump_profile(ctx));
    state.SetComplexityN(ctx.p);
}
BENCHMARK(BM_jump_profile)->RangeMultiplier(4)->Range(64, 16384)->Complexity();

void BM_identity_pass(benchmark::State& state) {
    const auto ctx = make_context(prime_n_at(state.range(0)));
    for (auto _ : state) {
        const auto art = compute_artifacts(ctx);
        for (const auto& id : identity_catalog())
            benchmark::DoNotOptimize(verify_identity(art, id));
    }
}
BENCHMARK(BM_identity_pass)->Arg(500)->Arg(2000);

void BM_dirichlet_estimate(benchmark::State& state) {
    const auto ctx = make_context(prime_n_at(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(dirichlet_estimate(ctx, 0));
}
BENCHMARK(BM_dirichlet_estimate)->Arg(500)->Arg(2502);

} // namespace

BENCHMARK_MAIN();
