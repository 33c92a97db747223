#include <benchmark/benchmark.h>

#include "typrank/binary_form.hpp"
#include "typrank/error.hpp"
#include "typrank/cubic.hpp"
#include "typrank/monte_carlo.hpp"
#include "typrank/segre.hpp"
#include "typrank/solvers.hpp"

using namespace typrank;

static void BM_BinaryFormRoots(benchmark::State& state) {
    const int degree = static_cast<int>(state.range(0));
    SeededRng rng(1, 0);
    std::vector<BinaryForm> forms;
    for (int i = 0; i < 64; ++i) {
        std::vector<double> c(static_cast<std::size_t>(degree + 1));
        for (double& v : c) v = rng.normal();
        forms.emplace_back(c);
    }
    std::size_t i = 0;
    for (auto _ : state) {
        try {
            benchmark::DoNotOptimize(real_roots_binary_form(forms[i++ % forms.size()]).count);
        } catch (const Error&) {
        }
    }
}
BENCHMARK(BM_BinaryFormRoots)->Arg(2)->Arg(6)->Arg(12);

static void BM_PencilCount(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    SeededRng rng(2, 0);
    const MatrixSubspace l = uniform_subspace(n, 2, n, rng);
    for (auto _ : state) benchmark::DoNotOptimize(pencil_intersection_count(l).real_count);
}
BENCHMARK(BM_PencilCount)->Arg(2)->Arg(3)->Arg(6);

static void BM_ThreeByThreeCount(benchmark::State& state) {
    SeededRng rng(3, 0);
    const MatrixSubspace l = uniform_subspace(5, 3, 3, rng);
    for (auto _ : state) benchmark::DoNotOptimize(three_by_three_intersection_count(l, rng).real_count);
}
BENCHMARK(BM_ThreeByThreeCount);

static void BM_PlaneCubicWitness(benchmark::State& state) {
    SeededRng rng(4, 0);
    const MatrixSubspace l = uniform_subspace(6, 3, 3, rng);
    for (auto _ : state) benchmark::DoNotOptimize(rank_one_witness_search(l, rng).has_value());
}
BENCHMARK(BM_PlaneCubicWitness);

static void BM_CubicLineCount(benchmark::State& state) {
    SeededRng rng(5, 0);
    const CubicSurface s = random_cubic(rng);
    for (auto _ : state) benchmark::DoNotOptimize(count_real_lines(s, rng).real_lines);
}
BENCHMARK(BM_CubicLineCount);

static void BM_MonteCarloTwoByTwoByTwo(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(monte_carlo_rank(Format(2, 2, 2), 1000, 7).rejected);
}
BENCHMARK(BM_MonteCarloTwoByTwoByTwo)->Unit(benchmark::kMillisecond);

static void BM_ExpectedIntersections(benchmark::State& state) {
    int n = 2;
    for (auto _ : state) benchmark::DoNotOptimize(expected_intersections(5, 2 + (n++ % 500)));
}
BENCHMARK(BM_ExpectedIntersections);

BENCHMARK_MAIN();
