#include <benchmark/benchmark.h>

#include "pnc/codes.hpp"
#include "pnc/ideal.hpp"
#include "pnc/invariants.hpp"
#include "pnc/oracle.hpp"

using namespace pnc;

namespace {

const Variety& x224() {
    static const Variety x(validate_sequence(2, {2, 2, 4}));
    return x;
}

}  // namespace

// Exhaustive search over the projective message classes of C_X(d) on (2,2,4).
static void BM_MinDistance(benchmark::State& state) {
    const auto code = build_code(x224(), static_cast<std::uint64_t>(state.range(0)));
    const SearchOptions opts{kDefaultSearchCap, static_cast<unsigned>(state.range(1))};
    std::uint64_t classes = 0;
    for (auto _ : state) {
        const auto r = min_distance(code, opts);
        classes += r.classes;
        benchmark::DoNotOptimize(r.distance);
    }
    state.counters["classes/s"] = benchmark::Counter(static_cast<double>(classes), benchmark::Counter::kIsRate);
}
BENCHMARK(BM_MinDistance)->Args({3, 1})->Args({4, 1})->Args({4, 4})->UseRealTime()->Unit(benchmark::kMillisecond);

// Normal form of the closed-form indicator of every unit point.
static void BM_NormalForm(benchmark::State& state) {
    static const Variety x(validate_sequence(3, {3, 3, 3, 3, 9, 81}));
    const GroebnerBasis gb(x);
    const auto j = static_cast<std::size_t>(state.range(0));
    const auto raw = indicator_raw(x, x.unit_point(j));
    for (auto _ : state) benchmark::DoNotOptimize(gb.normal_form(raw));
    state.counters["terms"] = static_cast<double>(raw.terms().size());
}
BENCHMARK(BM_NormalForm)->DenseRange(0, 5)->Unit(benchmark::kMicrosecond);

static void BM_HilbertFunction(benchmark::State& state) {
    const auto seq = validate_sequence(2, {2, 2, 4, 16, 256, 256});
    for (auto _ : state)
        for (std::uint64_t d = 0; d <= reg_hilbert(seq); d += 7) benchmark::DoNotOptimize(hilbert_function(seq, d));
}
BENCHMARK(BM_HilbertFunction)->Unit(benchmark::kMicrosecond);

static void BM_InvariantReport(benchmark::State& state) {
    const auto seq = validate_sequence(2, {2, 2, 4, 16, 256, 256});
    for (auto _ : state) benchmark::DoNotOptimize(invariant_report(seq));
}
BENCHMARK(BM_InvariantReport);

// Rank oracle for every point of a 469-point variety.
static void BM_VPointOracleAll(benchmark::State& state) {
    static const Variety x(validate_sequence(2, {2, 2, 2, 4, 4, 4}));
    const auto threads = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(v_point_oracle_all(x, kOracleCap, threads));
}
BENCHMARK(BM_VPointOracleAll)->Arg(1)->Arg(4)->UseRealTime()->Unit(benchmark::kMillisecond);

static void BM_HilbertOracle(benchmark::State& state) {
    static const Variety x(validate_sequence(3, {3, 3, 9}));
    const auto d = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(hilbert_oracle(x, d));
}
BENCHMARK(BM_HilbertOracle)->Arg(4)->Arg(10)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
