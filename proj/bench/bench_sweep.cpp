// Serial reference kernels against their OpenMP counterparts.

#include "painleve/sweep.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace painleve;

namespace {

Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-40, 40), den(1, 12), kind(0, 2);
    switch (kind(rng)) {
        case 0: return Rational(num(rng));
        case 1: {
            Rational q(2 * num(rng) + 1, 2);
            q.canonicalize();
            return q;
        }
        default: {
            Rational q(num(rng), den(rng));
            q.canonicalize();
            return q;
        }
    }
}

std::vector<ParamVector> p6_batch(std::size_t n) {
    std::mt19937_64 rng(1);
    std::vector<ParamVector> out(n);
    for (auto& v : out)
        for (int k = 0; k < 4; ++k) v.emplace_back(random_rational(rng));
    return out;
}

std::vector<ParamVector> p4_batch(std::size_t n) {
    std::mt19937_64 rng(2);
    std::vector<ParamVector> out(n);
    for (auto& v : out) {
        ComplexRational a(random_rational(rng)), b(random_rational(rng));
        v = {a, b, -(a + b)};
    }
    return out;
}

std::vector<std::string> sweep_lines(std::size_t n) {
    static const char* families[] = {"p2", "p3", "p6"};
    std::mt19937_64 rng(3);
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) {
        const int f = static_cast<int>(i % 3);
        const int dim = f == 0 ? 1 : f == 1 ? 2 : 4;
        std::string line = std::string(families[f]) + " ";
        for (int k = 0; k < dim; ++k) line += (k ? "," : "") + random_rational(rng).get_str();
        out.push_back(line);
    }
    return out;
}

void BM_p6_serial(benchmark::State& state) {
    const auto batch = p6_batch(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(p6_stratum_batch_serial(batch));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_p6_parallel(benchmark::State& state) {
    const auto batch = p6_batch(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(p6_stratum_batch_parallel(batch));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_sweep_serial(benchmark::State& state) {
    const auto lines = sweep_lines(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(sweep_serial(lines));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_sweep_parallel(benchmark::State& state) {
    const auto lines = sweep_lines(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(sweep_parallel(lines));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_invariance_serial(benchmark::State& state) {
    const auto batch = p4_batch(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(invariance_violations_serial(Family::PIV, batch, 6));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_invariance_parallel(benchmark::State& state) {
    const auto batch = p4_batch(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(invariance_violations_parallel(Family::PIV, batch, 6));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_p6_serial)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_p6_parallel)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_sweep_serial)->Arg(3000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_sweep_parallel)->Arg(3000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_invariance_serial)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_invariance_parallel)->Arg(200)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
