#include "builders.hpp"

#include <gtalg/io.hpp>

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace gtalg;
using namespace gtalg::testing;
namespace fs = std::filesystem;

namespace {

fs::path const corpus_dir = GTALG_CORPUS_DIR;

std::string slurp(fs::path const &p)
{
	std::ifstream in(p, std::ios::binary);
	std::stringstream ss;
	ss << in.rdbuf();
	return ss.str();
}

io::AlgebraDocument corpus(std::string const &name)
{
	return io::load_file((corpus_dir / (name + ".json")).string());
}

Series expX(int n) { return exp(Series::generator(Alphabet::xy(), n, 0)); }
Series expY(int n) { return exp(Series::generator(Alphabet::xy(), n, 1)); }

io::ParseError parse_error(std::string const &text)
{
	try
	{
		io::parse(text);
	}
	catch (io::ParseError const &e)
	{
		return e;
	}
	ADD_FAILURE() << "no ParseError for:\n" << text;
	return io::ParseError(io::ParseError::Category::syntax, "", 0, 0, "");
}

std::string const z2 = R"({
  "format": 1,
  "kind": "hopf",
  "basis": ["e", "g"],
  "mult": [[["1", "0"], ["0", "1"]], [["0", "1"], ["1", "0"]]],
  "unit": ["1", "0"],
  "comult": [[["1", "0"], ["0", "0"]], [["0", "0"], ["0", "1"]]],
  "counit": ["1", "1"]
}
)";

std::string replaced(std::string s, std::string const &from, std::string const &to)
{
	auto pos = s.find(from);
	EXPECT_NE(pos, std::string::npos);
	return s.replace(pos, from.size(), to);
}

} // namespace

TEST(IO, CorpusRoundTripsByteForByte)
{
	std::size_t files = 0;
	for (auto const &entry : fs::directory_iterator(corpus_dir))
	{
		if (entry.path().extension() != ".json")
			continue;
		++files;
		auto text = slurp(entry.path());
		auto doc = io::parse(text);
		EXPECT_EQ(io::print(doc), text) << entry.path();
		EXPECT_EQ(io::parse(io::print(doc)), doc) << entry.path();
	}
	EXPECT_GE(files, 20u);
}

TEST(IO, CorpusMatchesBuilders)
{
	auto z2 = cyclic(2);
	EXPECT_EQ(io::expect<io::HopfDocument>(corpus("z2_group_algebra"), "hopf").algebra, z2);
	EXPECT_EQ(io::expect<io::HopfDocument>(corpus("z3_group_algebra"), "hopf").algebra, cyclic(3));
	EXPECT_EQ(io::expect<io::HopfDocument>(corpus("s3_group_algebra"), "hopf").algebra, s3());

	auto h4 = sweedler();
	h4.antipode = sweedler_antipode();
	EXPECT_EQ(io::expect<io::HopfDocument>(corpus("sweedler_h4"), "hopf").algebra, h4);

	auto tri = io::expect<io::HopfDocument>(corpus("z2_triangular"), "hopf");
	EXPECT_EQ(tri.r_matrix, z2_triangular_r());
	EXPECT_EQ(tri.pairing, z2_fourier());

	EXPECT_EQ(io::expect<io::TrialgebraDocument>(corpus("s3_diagonal"), "trialgebra").algebra,
	          diagonal(s3()));
	EXPECT_EQ(io::expect<io::QuadraalgebraDocument>(corpus("z2_quadraalgebra"), "quadraalgebra").algebra,
	          doubled(z2));
	EXPECT_EQ(io::expect<io::QuadraalgebraDocument>(corpus("z3_quadraalgebra"), "quadraalgebra").algebra,
	          doubled(cyclic(3)));

	EXPECT_EQ(io::expect<MetrizedLieAlgebra>(corpus("sl2"), "lie-metrized"), sl2());
	EXPECT_EQ(io::expect<MetrizedLieAlgebra>(corpus("so3"), "lie-metrized"), so3());

	EXPECT_EQ(io::expect<Series>(corpus("f_expX"), "series"), expX(5));
	EXPECT_EQ(io::expect<Series>(corpus("f_expX_expY"), "series"), expX(5) * expY(5));
	EXPECT_EQ(io::expect<GTElement>(corpus("gt_identity"), "gt-element"), GTElement::identity(5));
	EXPECT_EQ(io::expect<HGTPair>(corpus("hgt_diagonal"), "hgt-pair"),
	          HGTPair(expX(5) * expY(5), expX(5) * expY(5)));
	EXPECT_EQ(io::expect<BraidWord>(corpus("braid_s1s2s1"), "braid"), BraidWord({1, 2, 1}));
	EXPECT_EQ(io::expect<BraidWord>(corpus("braid_s2s1s2"), "braid"), BraidWord({2, 1, 2}));
}

TEST(IO, CorpusSolutionSatisfiesRelations)
{
	auto e = io::expect<GTElement>(corpus("gt_solution_n4"), "gt-element");
	EXPECT_TRUE(check_duality(e).holds);
	EXPECT_TRUE(check_hexagon(e).holds);
	EXPECT_TRUE(check_pentagon(e).holds);
}

TEST(IO, KindTagFollowsPayload)
{
	EXPECT_EQ(corpus("sl2").kind(), "lie-metrized");
	EXPECT_EQ(corpus("hgt_offdiagonal").kind(), "hgt-pair");
	EXPECT_EQ(corpus("z3_partial_star").kind(), "trialgebra");
	try
	{
		io::expect<io::HopfDocument>(corpus("sl2"), "hopf");
		FAIL();
	}
	catch (io::ParseError const &e)
	{
		EXPECT_EQ(e.path(), "$.kind");
		EXPECT_NE(e.reason().find("lie-metrized"), std::string::npos);
	}
}

TEST(IO, DescriptionIsOptionalAndPreserved)
{
	auto doc = io::parse(z2);
	EXPECT_FALSE(doc.description);
	EXPECT_EQ(io::expect<io::HopfDocument>(doc, "hopf").algebra, cyclic(2));
	doc.description = "two";
	EXPECT_EQ(io::parse(io::print(doc)).description, "two");
}

TEST(IO, SaveAndLoad)
{
	auto dir = fs::temp_directory_path() / "gtalg_io_test";
	fs::create_directories(dir);
	auto path = (dir / "sl2.json").string();
	auto doc = corpus("sl2");
	io::save_file(path, doc);
	EXPECT_EQ(io::load_file(path), doc);
	EXPECT_EQ(slurp(path), slurp(corpus_dir / "sl2.json"));
	fs::remove_all(dir);
	EXPECT_THROW(io::load_file((dir / "missing.json").string()), Error);
}

TEST(IO, RationalsMustBeInLowestTerms)
{
	auto e = parse_error(replaced(z2, R"("counit": ["1", "1"])", R"("counit": ["2/2", "1"])"));
	EXPECT_EQ(e.category(), io::ParseError::Category::semantic);
	EXPECT_EQ(e.path(), "$.counit[0]");
	EXPECT_NE(e.reason().find("not in lowest terms"), std::string::npos);

	auto n = parse_error(replaced(z2, R"("unit": ["1", "0"])", R"("unit": [1, "0"])"));
	EXPECT_EQ(n.path(), "$.unit[0]");
}

TEST(IO, WrongArityIsSemanticWithPath)
{
	auto e = parse_error(replaced(z2, R"([["0", "1"], ["1", "0"]]],)", R"([["0", "1"], ["1"]]],)"));
	EXPECT_EQ(e.category(), io::ParseError::Category::semantic);
	EXPECT_EQ(e.path(), "$.mult[1][1]");
	EXPECT_EQ(e.line(), 0u);
	EXPECT_NE(std::string(e.what()).find("$.mult[1][1]"), std::string::npos);
}

TEST(IO, SyntaxErrorsCarryLineAndColumn)
{
	auto e = parse_error("{\n  \"format\": 1,\n  \"kind\": ,\n}\n");
	EXPECT_EQ(e.category(), io::ParseError::Category::syntax);
	EXPECT_EQ(e.line(), 3u);
	EXPECT_GE(e.column(), 10u);
	EXPECT_EQ(std::string(e.what()).rfind("line 3, column ", 0), 0u);
}

TEST(IO, UnknownFieldsAndKindsAreRejected)
{
	auto e = parse_error(replaced(z2, R"("unit")", R"("colour": "blue", "unit")"));
	EXPECT_EQ(e.path(), "$.colour");
	EXPECT_EQ(e.reason(), "unknown field");
	EXPECT_EQ(parse_error(replaced(z2, R"("hopf")", R"("monoid")")).path(), "$.kind");
	EXPECT_EQ(parse_error(replaced(z2, R"("format": 1)", R"("format": 2)")).path(), "$.format");
	EXPECT_EQ(parse_error(replaced(z2, R"("format": 1,)", "")).reason(), "missing field 'format'");
	EXPECT_EQ(parse_error(replaced(z2, R"("basis": ["e", "g"])", R"("basis": ["e", "e"])")).path(),
	          "$.basis[1]");
}

TEST(IO, SeriesFieldsAreValidated)
{
	auto text = slurp(corpus_dir / "lie_xy.json");
	EXPECT_EQ(parse_error(replaced(text, R"(["Y.X", "-1"])", R"(["Y.X", "0"])")).path(),
	          "$.series.terms[1][1]");
	EXPECT_EQ(parse_error(replaced(text, R"(["Y.X", "-1"])", R"(["X.Y", "-1"])")).path(),
	          "$.series.terms[1][0]");
	EXPECT_EQ(parse_error(replaced(text, R"("truncation": 5)", R"("truncation": 1)")).path(),
	          "$.series.terms[0][0]");
	EXPECT_EQ(parse_error(replaced(text, R"(["Y.X", "-1"])", R"(["Y.Z", "-1"])")).path(),
	          "$.series.terms[1][0]");

	auto gt = slurp(corpus_dir / "gt_identity.json");
	auto bad = parse_error(replaced(gt, R"(["1", "1"])", R"(["1", "1"], ["X", "1"], ["Y.X", "1"])"));
	EXPECT_EQ(bad.path(), "$.f");
}

TEST(IO, HopfTensorsMustSatisfyNothingButShape)
{
	// Parsing is structural: a non-associative product loads, checking rejects it later.
	auto doc = io::parse(replaced(z2, R"([["0", "1"], ["1", "0"]]],)", R"([["0", "1"], ["1", "1"]]],)"));
	EXPECT_EQ(io::expect<io::HopfDocument>(doc, "hopf").algebra.mult(1, 1, 1), 1);
}
