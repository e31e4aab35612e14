#include <benchmark/benchmark.h>

#include <levyspde/chaos.hpp>
#include <levyspde/kernels.hpp>
#include <levyspde/linear.hpp>
#include <levyspde/prm.hpp>

using namespace levyspde;

static void BM_DalangIntegral(benchmark::State& state) {
    const auto k = ColorationKernel::bessel(1.5, 3);
    for (auto _ : state) benchmark::DoNotOptimize(dalang_integral(k));
}
BENCHMARK(BM_DalangIntegral);

static void BM_WeightEval(benchmark::State& state) {
    const auto op = GreenOperator::wave(1);
    const auto k = ColorationKernel::bessel(2.0, 1);
    double y = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(weight_eval(op, k, 1.0, 0.0, y));
        y += 0.01;
        if (y > 5.0) y = 0.0;
    }
}
BENCHMARK(BM_WeightEval);

static void BM_SamplePrm(benchmark::State& state) {
    const Box1D box{-20.0, 20.0};
    const auto nu = symmetric_two_point(1.0);
    RandomStream rs(1, 0);
    for (auto _ : state) benchmark::DoNotOptimize(sample_prm(box, nu, rs));
}
BENCHMARK(BM_SamplePrm);

static void BM_JnEstimateOrder2(benchmark::State& state) {
    const auto op = GreenOperator::heat(2);
    const auto k = ColorationKernel::heat(1.0, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(jn_estimate(op, k, 1.0, 2, 2000, 7, 1));
    }
}
BENCHMARK(BM_JnEstimateOrder2);

static void BM_ExactSecondMoment(benchmark::State& state) {
    const auto op = GreenOperator::wave(2);
    const auto k = ColorationKernel::heat(1.0, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(exact_second_moment(op, k, 1.0, 1.0));
    }
}
BENCHMARK(BM_ExactSecondMoment);

BENCHMARK_MAIN();
