#include "algden/genset.hpp"
#include "algden/verify.hpp"

#include <benchmark/benchmark.h>

using namespace algden;

namespace {

void BM_build_field_quadratic(benchmark::State& state)
{
    IntPoly g({Integer(5), Integer(0), Integer(1)});
    for (auto _ : state)
        benchmark::DoNotOptimize(NumberField::create(g));
}
BENCHMARK(BM_build_field_quadratic);

void BM_build_field_cyclotomic8(benchmark::State& state)
{
    IntPoly g({Integer(1), Integer(0), Integer(0), Integer(0), Integer(1)});
    for (auto _ : state)
        benchmark::DoNotOptimize(NumberField::create(g));
}
BENCHMARK(BM_build_field_cyclotomic8);

void BM_factor_prime_split(benchmark::State& state)
{
    FieldPtr Qi = NumberField::create(IntPoly({Integer(1), Integer(0), Integer(1)}));
    for (auto _ : state)
        benchmark::DoNotOptimize(factor_prime(Qi, 5));
}
BENCHMARK(BM_factor_prime_split);

void BM_xy_worked_example(benchmark::State& state)
{
    FieldPtr Qi = NumberField::create(IntPoly({Integer(1), Integer(0), Integer(1)}));
    ElementContext ctx =
        make_context(inverse(Qi->element({Rational(60), Rational(15)})));
    Subfield l = whole_subfield(Qi);
    for (auto _ : state)
        benchmark::DoNotOptimize(compute_xy(ctx, l));
}
BENCHMARK(BM_xy_worked_example);

void BM_generating_set(benchmark::State& state)
{
    FieldPtr Qi = NumberField::create(IntPoly({Integer(1), Integer(0), Integer(1)}));
    ElementContext ctx =
        make_context(inverse(Qi->element({Rational(60), Rational(15)})));
    for (auto _ : state)
        benchmark::DoNotOptimize(generating_set(ctx));
}
BENCHMARK(BM_generating_set);

void BM_class_group_sqrt_minus5(benchmark::State& state)
{
    FieldPtr K = NumberField::create(IntPoly({Integer(5), Integer(0), Integer(1)}));
    for (auto _ : state)
        benchmark::DoNotOptimize(class_group(K));
}
BENCHMARK(BM_class_group_sqrt_minus5);

} // namespace
