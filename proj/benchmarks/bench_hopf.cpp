#include <gtalg/hopf.hpp>
#include <gtalg/io.hpp>
#include <gtalg/trialgebra.hpp>

#include <benchmark/benchmark.h>

#include <string>

using namespace gtalg;

namespace {

HopfData corpus_hopf(std::string const &name)
{
	auto doc = io::load_file(std::string(GTALG_CORPUS_DIR) + "/" + name + ".json");
	return io::expect<io::HopfDocument>(doc, "hopf").algebra;
}

void CheckHopf(benchmark::State &state, std::string const &name)
{
	auto h = corpus_hopf(name);
	for (auto _ : state)
		benchmark::DoNotOptimize(check_hopf(h));
}
BENCHMARK_CAPTURE(CheckHopf, s3, std::string("s3_group_algebra"))->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(CheckHopf, sweedler, std::string("sweedler_h4"))->Unit(benchmark::kMillisecond);

void BuildDouble(benchmark::State &state, std::string const &name)
{
	auto h = corpus_hopf(name);
	for (auto _ : state)
		benchmark::DoNotOptimize(drinfeld_double(h));
}
BENCHMARK_CAPTURE(BuildDouble, z3, std::string("z3_group_algebra"))->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BuildDouble, sweedler, std::string("sweedler_h4"))->Unit(benchmark::kMillisecond);

void CheckDouble(benchmark::State &state, std::string const &name)
{
	auto d = drinfeld_double(corpus_hopf(name));
	for (auto _ : state)
	{
		benchmark::DoNotOptimize(check_hopf(d.algebra));
		benchmark::DoNotOptimize(check_quasitriangular(d.algebra, d.r));
	}
}
BENCHMARK_CAPTURE(CheckDouble, z3, std::string("z3_group_algebra"))->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(CheckDouble, sweedler, std::string("sweedler_h4"))->Unit(benchmark::kMillisecond);

void CheckS3Trialgebra(benchmark::State &state)
{
	auto h = corpus_hopf("s3_group_algebra");
	TrialgebraData t{h.labels, h.mult, {}, h.unit, h.mult, h.unit, h.comult, h.counit};
	for (auto _ : state)
		benchmark::DoNotOptimize(check_trialgebra(t));
}
BENCHMARK(CheckS3Trialgebra)->Unit(benchmark::kMillisecond);

} // namespace
