#include <benchmark/benchmark.h>

#include "cliffordix/report.hpp"

namespace {

using namespace cliffordix;

void BM_ComputeReport(benchmark::State& state) {
    const Int g = state.range(0);
    Curve curve = build_curve(CurveSpec::general(g));
    for (auto _ : state) {
        ComputeReport report = compute_report(curve, RankRange{1, 12});
        benchmark::DoNotOptimize(report.rows.back().gamma.hi);
    }
}
BENCHMARK(BM_ComputeReport)->Arg(20)->Arg(60)->Arg(200);

void BM_RenderJson(benchmark::State& state) {
    Curve curve = build_curve(CurveSpec::smooth_plane(12));
    ComputeReport report = compute_report(curve, RankRange{1, 12});
    for (auto _ : state) {
        std::string text = render_json(report);
        benchmark::DoNotOptimize(text.size());
    }
}
BENCHMARK(BM_RenderJson);

} // namespace
