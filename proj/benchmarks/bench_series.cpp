#include <gtalg/gtrel.hpp>
#include <gtalg/hgt.hpp>
#include <gtalg/lie.hpp>
#include <gtalg/series.hpp>

#include <benchmark/benchmark.h>

using namespace gtalg;

namespace {

/// A dense group-like series: exp of a Lie element with every Lyndon coordinate set.
Series dense_grouplike(int n, int shift)
{
	auto a = Alphabet::xy();
	LieElement::Coordinates coords;
	long k = shift;
	for (int d = 1; d <= n; ++d)
		for (auto const &w : lyndon_basis(a, d))
			coords[w] = Scalar(k++ % 5 - 2, d);
	return exp(embed_lie(LieElement::from_coordinates(a, n, coords)));
}

void SeriesMultiply(benchmark::State &state)
{
	int n = static_cast<int>(state.range(0));
	auto f = dense_grouplike(n, 0), g = dense_grouplike(n, 1);
	for (auto _ : state)
		benchmark::DoNotOptimize(f * g);
}
BENCHMARK(SeriesMultiply)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

void SeriesLog(benchmark::State &state)
{
	int n = static_cast<int>(state.range(0));
	auto f = dense_grouplike(n, 0);
	for (auto _ : state)
		benchmark::DoNotOptimize(log(f));
}
BENCHMARK(SeriesLog)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

void SolveB4(benchmark::State &state)
{
	int n = static_cast<int>(state.range(0));
	auto f = dense_grouplike(n, 3);
	for (auto _ : state)
		benchmark::DoNotOptimize(solve_b4(f, n));
}
BENCHMARK(SolveB4)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void SolveRelations(benchmark::State &state)
{
	int n = static_cast<int>(state.range(0));
	for (auto _ : state)
		benchmark::DoNotOptimize(solve_relations(1, n));
}
BENCHMARK(SolveRelations)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

} // namespace
