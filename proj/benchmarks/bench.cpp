#include "pvi/certificate.hpp"
#include "pvi/parse.hpp"

#include <benchmark/benchmark.h>

using namespace pvi;

static void BM_PolynomialGcd(benchmark::State &state)
{
    const Polynomial f = parse("(a*b+c-1)^3*(b^2-a*c+2)^2").numerator();
    const Polynomial g = parse("(a*b+c-1)^2*(b-3*a+c)^3").numerator();
    for (auto _ : state) benchmark::DoNotOptimize(gcd(f, g));
}
BENCHMARK(BM_PolynomialGcd);

static void BM_RationalFunctionArithmetic(benchmark::State &state)
{
    const RationalFunction f = parse("(b^3+b^2+3*b+3)/(b^3+b^2-5*b+3)");
    const RationalFunction g = parse("(a+2*c-2)/(4*b*(a+c-2))");
    for (auto _ : state) benchmark::DoNotOptimize((f + g) * (f - g) / (f * g + 1));
}
BENCHMARK(BM_RationalFunctionArithmetic);

static void BM_Residual(benchmark::State &state)
{
    const int row = static_cast<int>(state.range(0));
    const Table1Row r = table1(row);
    for (auto _ : state) benchmark::DoNotOptimize(verify_solution(r));
}
BENCHMARK(BM_Residual)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);

static void BM_Row3Pipeline(benchmark::State &state)
{
    for (auto _ : state) benchmark::DoNotOptimize(run_pipeline(2));
}
BENCHMARK(BM_Row3Pipeline)->Unit(benchmark::kMillisecond);

static void BM_DihedralConvolution(benchmark::State &state)
{
    const RationalFunction mu = parse("-c");
    for (auto _ : state) benchmark::DoNotOptimize(convolve_row(3, mu));
}
BENCHMARK(BM_DihedralConvolution)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
