#include "algden/invariants.hpp"
#include "algden/primes.hpp"

#include <benchmark/benchmark.h>

using namespace algden;

namespace {

void BM_factorize_small(benchmark::State& state)
{
    Integer n("3825");
    for (auto _ : state)
        benchmark::DoNotOptimize(factorize(n));
}
BENCHMARK(BM_factorize_small);

void BM_factorize_semiprime(benchmark::State& state)
{
    Integer n = Integer("1000003") * Integer("1000033");
    for (auto _ : state)
        benchmark::DoNotOptimize(factorize(n));
}
BENCHMARK(BM_factorize_semiprime);

void BM_is_prime_64(benchmark::State& state)
{
    Integer n("9223372036854775783");
    for (auto _ : state)
        benchmark::DoNotOptimize(is_prime(n));
}
BENCHMARK(BM_is_prime_64);

void BM_invariants(benchmark::State& state)
{
    MinimalPolynomial f = MinimalPolynomial::from_integer(
        IntPoly({Integer(1), Integer(-120), Integer(3825)}));
    for (auto _ : state)
        benchmark::DoNotOptimize(invariants(f));
}
BENCHMARK(BM_invariants);

void BM_irreducibility_quartic(benchmark::State& state)
{
    IntPoly f({Integer(7), Integer(12), Integer(-3), Integer(5), Integer(11)});
    for (auto _ : state)
        benchmark::DoNotOptimize(is_irreducible_over_q(f));
}
BENCHMARK(BM_irreducibility_quartic);

} // namespace

BENCHMARK_MAIN();
