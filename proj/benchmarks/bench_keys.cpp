#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "tabkey/census.hpp"
#include "tabkey/demazure.hpp"
#include "tabkey/enumerate.hpp"
#include "tabkey/jdt.hpp"
#include "tabkey/scanning.hpp"
#include "tabkey/text_io.hpp"

using namespace tabkey;

namespace {

const Tableau& example() {
    static const Tableau t = parse_tableau("1 1 3 4 6\n2 3 5 7 9\n4 5 6 8\n5 7 9\n7\n8\n");
    return t;
}

// A fixed sample of tableaux of the given staircase-like shape.
std::vector<Tableau> sample(int rows, int n, std::size_t count) {
    std::vector<int> row_lengths;
    for (int r = rows; r >= 1; --r) row_lengths.push_back(r);
    std::vector<Tableau> all = enumerate_tableaux(Shape::from_rows(row_lengths), n);
    std::mt19937_64 rng(12345);
    std::vector<Tableau> out;
    for (std::size_t i = 0; i < count && !all.empty(); ++i) {
        out.push_back(all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)]);
    }
    return out;
}

void BM_ScanningExample(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(scanning_tableau(example()));
}
BENCHMARK(BM_ScanningExample);

void BM_OracleExample(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(right_key_oracle(example()));
}
BENCHMARK(BM_OracleExample);

void BM_LeftKeyExample(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(left_key(example()));
}
BENCHMARK(BM_LeftKeyExample);

void BM_LeftKeyOracleExample(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(left_key_oracle(example()));
}
BENCHMARK(BM_LeftKeyOracleExample);

void BM_ScanningStaircase(benchmark::State& state) {
    const auto tableaux = sample(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)) + 1, 64);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(scanning_tableau(tableaux[i++ % tableaux.size()]));
    }
}
BENCHMARK(BM_ScanningStaircase)->DenseRange(2, 4);

void BM_OracleStaircase(benchmark::State& state) {
    const auto tableaux = sample(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)) + 1, 64);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(right_key_oracle(tableaux[i++ % tableaux.size()]));
    }
}
BENCHMARK(BM_OracleStaircase)->DenseRange(2, 4);

void BM_DemazureCharacter(benchmark::State& state) {
    const std::vector<int> mu = {3, 2, 1};
    for (auto _ : state) {
        benchmark::DoNotOptimize(demazure_character(mu, {4, 2, 3, 1}, 4));
    }
}
BENCHMARK(BM_DemazureCharacter)->Unit(benchmark::kMillisecond);

void BM_DemazureRecursion(benchmark::State& state) {
    const std::vector<int> mu = {3, 2, 1};
    for (auto _ : state) {
        benchmark::DoNotOptimize(demazure_operator_recursion(mu, {4, 2, 3, 1}, 4));
    }
}
BENCHMARK(BM_DemazureRecursion)->Unit(benchmark::kMillisecond);

void BM_Census(benchmark::State& state) {
    CensusOptions options;
    options.max_boxes = static_cast<int>(state.range(0));
    options.max_entry = 4;
    for (auto _ : state) benchmark::DoNotOptimize(run_census(options));
}
BENCHMARK(BM_Census)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
