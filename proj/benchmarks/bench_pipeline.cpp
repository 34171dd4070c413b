// Microbenchmarks for the hot paths: functional evaluation, both fit
// methods, the singular value decomposition, the conditioning search, and
// hull enumeration.  Run with --benchmark_filter=... to narrow.

#include <cstddef>
#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "tolfit/conditioning.hpp"
#include "tolfit/dataset.hpp"
#include "tolfit/maximize.hpp"
#include "tolfit/solution_set.hpp"
#include "tolfit/tol.hpp"

namespace {

using namespace tolfit;

IntervalSystem measured_system() {
    IntervalMatrix a(3, 2);
    a.at(0, 0) = Interval(98, 100);
    a.at(0, 1) = Interval(99, 101);
    a.at(1, 0) = Interval(97, 99);
    a.at(1, 1) = Interval(98, 100);
    a.at(2, 0) = Interval(96, 98);
    a.at(2, 1) = Interval(97, 99);
    return IntervalSystem(
        std::move(a),
        {Interval(190, 210), Interval(200, 220), Interval(190, 210)});
}

IntervalSystem wide_system() {
    IntervalMatrix a(2, 3);
    a.at(0, 0) = Interval(98, 100);
    a.at(0, 1) = Interval(97, 99);
    a.at(0, 2) = Interval(96, 98);
    a.at(1, 0) = Interval(99, 101);
    a.at(1, 1) = Interval(98, 100);
    a.at(1, 2) = Interval(97, 99);
    return IntervalSystem(std::move(a),
                          {Interval(190, 210), Interval(200, 220)});
}

Matrix random_square(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-5.0, 5.0);
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = dist(rng);
    return m;
}

void BM_TolEval(benchmark::State& state) {
    const IntervalSystem sys = measured_system();
    const std::vector<double> x = {0.5, 2.0};
    for (auto _ : state) benchmark::DoNotOptimize(tol(sys, x).value);
}
BENCHMARK(BM_TolEval);

void BM_Supergradient(benchmark::State& state) {
    const IntervalSystem sys = measured_system();
    const std::vector<double> x = {0.5, 2.0};
    for (auto _ : state) benchmark::DoNotOptimize(tol_subgradient(sys, x));
}
BENCHMARK(BM_Supergradient);

void BM_AscentFit(benchmark::State& state) {
    const IntervalSystem sys = measured_system();
    for (auto _ : state) benchmark::DoNotOptimize(maximize_tol(sys).max_tol);
}
BENCHMARK(BM_AscentFit);

void BM_ExactFit(benchmark::State& state) {
    const IntervalSystem sys = wide_system();
    for (auto _ : state)
        benchmark::DoNotOptimize(maximize_tol_exact(sys).max_tol);
}
BENCHMARK(BM_ExactFit);

void BM_SingularValues(benchmark::State& state) {
    const Matrix m =
        random_square(static_cast<std::size_t>(state.range(0)), 99);
    for (auto _ : state) benchmark::DoNotOptimize(singular_values(m));
}
BENCHMARK(BM_SingularValues)->Arg(4)->Arg(10);

void BM_MinCondShort(benchmark::State& state) {
    const IntervalSystem sys = measured_system();
    AnnealConfig cfg;
    cfg.restarts = 2;
    cfg.steps = 200;
    cfg.vertex_probes = 16;
    cfg.interior_probes = 16;
    for (auto _ : state)
        benchmark::DoNotOptimize(min_cond(sys.A, cfg).min_cond);
}
BENCHMARK(BM_MinCondShort);

void BM_Hull(benchmark::State& state) {
    const IntervalSystem sys = measured_system();
    for (auto _ : state) benchmark::DoNotOptimize(tss_hull(sys));
}
BENCHMARK(BM_Hull);

void BM_DiagonalHull(benchmark::State& state) {
    const IntervalSystem sys = diagonal_benchmark_system(
        static_cast<std::size_t>(state.range(0)), 10.0, 6.0);
    for (auto _ : state) benchmark::DoNotOptimize(tss_hull(sys));
}
BENCHMARK(BM_DiagonalHull)->Arg(5);

}  // namespace

int main(int argc, char** argv) {
    benchmark::Initialize(&argc, argv);
    if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
    benchmark::RunSpecifiedBenchmarks();
    return 0;
}
