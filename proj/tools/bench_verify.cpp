#include <benchmark/benchmark.h>

#include "fanodelta/catalog.hpp"

namespace {

const fano::Ledger& ledger() {
    static const fano::Ledger l = fano::load_ledger(fano::default_ledger_path());
    return l;
}

void BM_VerifyAllSerial(benchmark::State& state) {
    const auto& l = ledger();
    for (auto _ : state) benchmark::DoNotOptimize(fano::verify_all_serial(l.entries, l.path.parent_path()));
}

void BM_VerifyAllParallel(benchmark::State& state) {
    const auto& l = ledger();
    for (auto _ : state) benchmark::DoNotOptimize(fano::verify_all_parallel(l.entries, l.path.parent_path()));
}

}  // namespace

BENCHMARK(BM_VerifyAllSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyAllParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
