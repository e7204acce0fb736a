#include <benchmark/benchmark.h>

#include <vector>

#include "lgrowth/kernels.hpp"
#include "lgrowth/maps.hpp"
#include "lgrowth/verify.hpp"

using namespace lgrowth;

namespace {

const MapFamily& two_petal() {
    static const MapFamily f = MapFamily::two_petal(kPi / 8, kPi / 16);
    return f;
}

std::vector<cplx> lemniscate_points(std::size_t n) {
    return boundary_trace(MapFamily::one_petal(kPi / 4), TimeState{}, n).points();
}

void BM_trace(benchmark::State& st) {
    const auto n = static_cast<std::size_t>(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(boundary_trace(two_petal(), TimeState{}, n));
    st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_trace_serial(benchmark::State& st) {
    const auto n = static_cast<std::size_t>(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(boundary_trace_serial(two_petal(), TimeState{}, n));
    st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_cauchy(benchmark::State& st) {
    const auto pts = lemniscate_points(static_cast<std::size_t>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(cauchy_polyline(pts, cplx(0, 0.8)));
    st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_cauchy_serial(benchmark::State& st) {
    const auto pts = lemniscate_points(static_cast<std::size_t>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(cauchy_polyline_serial(pts, cplx(0, 0.8)));
    st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_moment(benchmark::State& st) {
    const auto pts = half_disk_trace(static_cast<std::size_t>(st.range(0))).points();
    for (auto _ : st) benchmark::DoNotOptimize(moment_polyline(pts, 5));
    st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_moment_serial(benchmark::State& st) {
    const auto pts = half_disk_trace(static_cast<std::size_t>(st.range(0))).points();
    for (auto _ : st) benchmark::DoNotOptimize(moment_polyline_serial(pts, 5));
    st.SetItemsProcessed(st.iterations() * st.range(0));
}

std::vector<double> grid(int n) {
    std::vector<double> g;
    for (int k = 1; k <= n; ++k) g.push_back(k * kPi / (2 * (n + 1)));
    return g;
}

void BM_sweep(benchmark::State& st) {
    const auto g = grid(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(sweep(g, g));
}

void BM_sweep_serial(benchmark::State& st) {
    const auto g = grid(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(sweep_serial(g, g));
}

}  // namespace

BENCHMARK(BM_trace)->Arg(1 << 12)->Arg(1 << 16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_trace_serial)->Arg(1 << 12)->Arg(1 << 16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_cauchy)->Arg(1 << 14)->Arg(1 << 18);
BENCHMARK(BM_cauchy_serial)->Arg(1 << 14)->Arg(1 << 18);
BENCHMARK(BM_moment)->Arg(1 << 14)->Arg(1 << 18);
BENCHMARK(BM_moment_serial)->Arg(1 << 14)->Arg(1 << 18);
BENCHMARK(BM_sweep)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_sweep_serial)->Arg(5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
