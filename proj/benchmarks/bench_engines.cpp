#include "symtutte/families.hpp"
#include "symtutte/fq_engine.hpp"
#include "symtutte/interpolation.hpp"
#include "symtutte/subset_engine.hpp"
#include "symtutte/symmetric_engine.hpp"

#include <benchmark/benchmark.h>

#include <string>
#include <vector>

using namespace symtutte;

namespace {

const std::vector<std::string> kFamilies{"weyl-a", "catalan", "shi-threshold", "i-arrangement"};

// Arg 0 indexes kFamilies, arg 1 is n.
Arrangement fixture(const benchmark::State& state) {
    return family_by_name(kFamilies.at(state.range(0))).build(static_cast<std::size_t>(state.range(1)));
}

void label(benchmark::State& state, const Arrangement& a) {
    state.SetLabel(kFamilies.at(state.range(0)) + " n=" + std::to_string(state.range(1)) +
                   " |A|=" + std::to_string(a.size()));
}

}  // namespace

static void BM_SubsetNaive(benchmark::State& state) {
    const auto a = fixture(state);
    SubsetOptions o;
    o.strategy = SubsetStrategy::Naive;
    for (auto _ : state) benchmark::DoNotOptimize(count_central_subsets(a, o));
    label(state, a);
}
BENCHMARK(BM_SubsetNaive)->Args({1, 3})->Args({2, 3})->Args({3, 3})->Unit(benchmark::kMillisecond);

static void BM_SubsetIncremental(benchmark::State& state) {
    const auto a = fixture(state);
    for (auto _ : state) benchmark::DoNotOptimize(count_central_subsets(a));
    label(state, a);
}
BENCHMARK(BM_SubsetIncremental)
    ->Args({1, 3})->Args({2, 3})->Args({3, 3})
    ->Args({0, 6})->Args({2, 4})->Args({1, 4})
    ->Unit(benchmark::kMillisecond);

// Point counting only; the certification walk is cached and measured separately.
static void BM_FiniteField(benchmark::State& state) {
    const auto a = fixture(state);
    const auto q = static_cast<std::uint32_t>(state.range(2));
    for (auto _ : state) benchmark::DoNotOptimize(coboundary_at_prime(a, q, FqOptions{1, false}));
    label(state, a);
    state.counters["q"] = static_cast<double>(q);
}
BENCHMARK(BM_FiniteField)
    ->Args({1, 3, 11})->Args({1, 4, 11})->Args({1, 5, 11})->Args({3, 4, 13})
    ->Unit(benchmark::kMillisecond);

static void BM_ClosedForm(benchmark::State& state) {
    const auto a = fixture(state);
    const auto q = static_cast<std::uint32_t>(state.range(2));
    for (auto _ : state) benchmark::DoNotOptimize(coboundary_closed_form(a, q, ClosedFormOptions{1, false}));
    label(state, a);
    state.counters["q"] = static_cast<double>(q);
}
BENCHMARK(BM_ClosedForm)
    ->Args({1, 3, 11})->Args({1, 4, 11})->Args({1, 5, 11})->Args({1, 6, 11})->Args({1, 8, 11})
    ->Args({3, 6, 13})
    ->Unit(benchmark::kMillisecond);

// Results are cached per (arrangement, prime), so each case runs once on a
// prime small enough to need the full independence walk.
static void BM_Certify(benchmark::State& state) {
    const auto a = fixture(state);
    const auto q = static_cast<std::uint32_t>(state.range(2));
    for (auto _ : state) benchmark::DoNotOptimize(certify(a, q));
    label(state, a);
    state.counters["q"] = static_cast<double>(q);
}
BENCHMARK(BM_Certify)
    ->Args({1, 4, 7})->Args({3, 4, 7})->Args({1, 5, 7})->Args({1, 6, 7})
    ->Iterations(1)->Unit(benchmark::kMillisecond);

static void BM_RecoverSymbolic(benchmark::State& state) {
    const auto a = fixture(state);
    InterpolationOptions o;
    o.engine = PointEngine::ClosedForm;
    for (auto _ : state) benchmark::DoNotOptimize(recover_coboundary(a, o));
    label(state, a);
}
BENCHMARK(BM_RecoverSymbolic)->Args({1, 4})->Args({2, 5})->Unit(benchmark::kMillisecond)->Iterations(3);

BENCHMARK_MAIN();
