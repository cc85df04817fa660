#include <benchmark/benchmark.h>

#include "cliffordix/curve_data.hpp"

namespace {

using namespace cliffordix;

void BM_BuildGeneralCurve(benchmark::State& state) {
    const Int g = state.range(0);
    for (auto _ : state) {
        Curve curve = build_curve(CurveSpec::general(g));
        benchmark::DoNotOptimize(curve.seq.at(curve.seq.r_max()).lo);
    }
}
BENCHMARK(BM_BuildGeneralCurve)->Arg(50)->Arg(200)->Arg(1000);

void BM_PropagateFromGonalityOnly(benchmark::State& state) {
    const Int g = state.range(0);
    for (auto _ : state) {
        CurveSpec spec = CurveSpec::custom(g, std::nullopt, {{1, 4}});
        Curve curve = build_curve(spec);
        benchmark::DoNotOptimize(curve.gamma1.lo);
    }
}
BENCHMARK(BM_PropagateFromGonalityOnly)->Arg(50)->Arg(200);

void BM_ValidateSequence(benchmark::State& state) {
    const Int g = state.range(0);
    Curve curve = build_curve(CurveSpec::bielliptic(g));
    for (auto _ : state) {
        auto violations = sequence_violations(curve.seq);
        benchmark::DoNotOptimize(violations.size());
    }
}
BENCHMARK(BM_ValidateSequence)->Arg(50)->Arg(200);

} // namespace
