#include <benchmark/benchmark.h>

#include "cliffordix/oracle.hpp"

namespace {

using namespace cliffordix;

void BM_OracleMinGamma(benchmark::State& state) {
    const Int g = state.range(0);
    const Int n = state.range(1);
    Curve curve = build_curve(CurveSpec::general(g));
    for (auto _ : state) {
        auto v = oracle_min_gamma(curve, n, n + 1);
        benchmark::DoNotOptimize(v->gamma);
    }
}
BENCHMARK(BM_OracleMinGamma)->Args({30, 8})->Args({30, 12})->Args({60, 12});

void BM_OracleSweep(benchmark::State& state) {
    Curve curve = build_curve(CurveSpec::bielliptic(20));
    for (auto _ : state) {
        for (Int n = 1; n <= 12; ++n) {
            auto cmp = oracle_cross_check(curve, n);
            benchmark::DoNotOptimize(cmp.relation);
        }
    }
}
BENCHMARK(BM_OracleSweep);

} // namespace
