// Serial reference vs OpenMP kernels on synthetic MNIST-shaped rows.
//
//   ./build/bench/cueball_bench --benchmark_filter=Respond

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "cueball/kernels.hpp"
#include "cueball/memory.hpp"

using namespace cueball;

namespace {

constexpr std::size_t kRecall = 784;

std::vector<double> random_values(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> out(n);
    for (auto& x : out) x = u(rng);
    return out;
}

Pattern random_unit_pattern(std::mt19937_64& rng) {
    std::vector<std::uint8_t> img(kRecall, 0);
    std::uniform_int_distribution<int> level(0, 255);
    for (std::size_t j = 0; j < kRecall; j += 3) img[j] = static_cast<std::uint8_t>(level(rng) | 1);
    return normalize(img);
}

template <bool Parallel>
void BM_Respond(benchmark::State& state) {
    const auto rows = static_cast<std::size_t>(state.range(0));
    const Precision precision = state.range(1) ? Precision::F32 : Precision::F64;
    const auto data = random_values(rows * kRecall, 1);
    const auto probe = random_values(kRecall, 2);
    const kernels::RowBlock block{data, rows, kRecall};
    std::vector<double> out(rows);
    for (auto _ : state) {
        if constexpr (Parallel)
            kernels::respond_parallel(block, probe, out, precision);
        else
            kernels::respond_serial(block, probe, out, precision);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(rows * kRecall));
}

template <bool Batched>
void BM_Learn(benchmark::State& state) {
    const auto count = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(3);
    std::vector<Pattern> patterns;
    std::vector<std::size_t> ids;
    for (std::size_t p = 0; p < count; ++p) {
        patterns.push_back(random_unit_pattern(rng));
        ids.push_back(p);
    }
    for (auto _ : state) {
        MemoryStore store(kRecall, count);
        if constexpr (Batched) {
            store.learn_batch(patterns, ids);
        } else {
            for (std::size_t p = 0; p < count; ++p) store.learn(patterns[p], p);
        }
        benchmark::DoNotOptimize(store.learned_count());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(count));
}

}  // namespace

BENCHMARK(BM_Respond<false>)->Name("Respond/serial")->ArgsProduct({{1000, 10000, 60000}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Respond<true>)->Name("Respond/parallel")->ArgsProduct({{1000, 10000, 60000}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Learn<false>)->Name("Learn/sequential")->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Learn<true>)->Name("Learn/batch")->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
