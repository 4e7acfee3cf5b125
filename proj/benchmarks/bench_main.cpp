#include <benchmark/benchmark.h>

#include "bo/closed_forms.hpp"
#include "bo/false_theta.hpp"
#include "bo/fock.hpp"
#include "bo/number_series.hpp"

using namespace bo;

static void qseries_multiply(benchmark::State& st)
{
    const Exp8 N = Exp8::integer(st.range(0));
    const QSeries a = partition_series(N);
    const QSeries b = euler_pochhammer(N);
    for (auto _ : st)
        benchmark::DoNotOptimize(a * a * b);
}
BENCHMARK(qseries_multiply)->Arg(200)->Arg(1000);

static void multisum_table(benchmark::State& st)
{
    for (auto _ : st)
        benchmark::DoNotOptimize(forms::f_multisum({5, 4, 3, 2}, Exp8::integer(st.range(0))));
}
BENCHMARK(multisum_table)->Arg(900)->Arg(4000);

static void multisum_mixed(benchmark::State& st)
{
    const forms::CoeffQuery q{{6, 3, 0}, {5, 1}};
    for (auto _ : st)
        benchmark::DoNotOptimize(forms::g_multisum(q, Exp8::integer(st.range(0))));
}
BENCHMARK(multisum_mixed)->Arg(300);

static void fock_trace(benchmark::State& st)
{
    const int pos[2] = {3, 1};
    const int neg[2] = {2, 0};
    const fock::ExponentSpec spec = fock::make_spec(pos, neg);
    for (auto _ : st)
        benchmark::DoNotOptimize(fock::raw_trace(spec, Exp8::integer(st.range(0)), static_cast<int>(st.range(1))));
}
BENCHMARK(fock_trace)->Args({24, 1})->Args({24, 4})->Args({32, 4});

static void decompose_grid_corner(benchmark::State& st)
{
    const forms::CoeffQuery q{{6, 4}, {5, 3}};
    for (auto _ : st)
        benchmark::DoNotOptimize(ft::decompose(q));
}
BENCHMARK(decompose_grid_corner);
BENCHMARK_MAIN();
