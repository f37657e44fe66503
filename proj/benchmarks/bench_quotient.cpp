#include <gtalg/gtrel.hpp>
#include <gtalg/quotient.hpp>

#include <benchmark/benchmark.h>

using namespace gtalg;

namespace {

void BuildT4(benchmark::State &state)
{
	int n = static_cast<int>(state.range(0));
	for (auto _ : state)
		benchmark::DoNotOptimize(pentagon_quotient(n));
}
BENCHMARK(BuildT4)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void ReduceInT4(benchmark::State &state)
{
	int n = static_cast<int>(state.range(0));
	auto t4 = pentagon_quotient(n);
	auto f = exp(Series::generator(Alphabet::xy(), n, 0)) * exp(Series::generator(Alphabet::xy(), n, 1));
	for (auto _ : state)
		benchmark::DoNotOptimize(pentagon_residual(f, t4));
}
BENCHMARK(ReduceInT4)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

} // namespace
