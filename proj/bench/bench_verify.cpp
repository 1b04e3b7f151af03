// Serial reference verifier versus the chunked OpenMP kernel.

#include <benchmark/benchmark.h>

#include <thread>

#include "syracuse/claims.hpp"
#include "syracuse/verifier.hpp"

namespace {

using namespace syracuse;

VerifyConfig config_for(std::int64_t hi, unsigned workers) {
    VerifyConfig c;
    c.lo = Nat{3};
    c.hi = Nat{static_cast<std::uint64_t>(hi) | 1U};
    c.worker_count = workers;
    return c;
}

void BM_VerifyReference(benchmark::State& state) {
    const VerifyConfig c = config_for(state.range(0), 1);
    for (auto _ : state) benchmark::DoNotOptimize(verify_range_reference(c));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(seed_count(c)));
}

void BM_VerifyKernel(benchmark::State& state) {
    const VerifyConfig c = config_for(state.range(0), static_cast<unsigned>(state.range(1)));
    for (auto _ : state) benchmark::DoNotOptimize(verify_range(c));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(seed_count(c)));
}

void BM_ClaimScan(benchmark::State& state) {
    const auto workers = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(check_claim(ClaimId::C34_M_INTEGRAL, Nat{3}, Nat{200'001}, 10, workers));
    }
}

const std::int64_t kMaxWorkers = std::max(1U, std::thread::hardware_concurrency());

}  // namespace

BENCHMARK(BM_VerifyReference)->Arg(100'000)->Arg(1'000'000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyKernel)
    ->Args({100'000, 1})
    ->Args({1'000'000, 1})
    ->Args({1'000'000, kMaxWorkers})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClaimScan)->Arg(1)->Arg(kMaxWorkers)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
