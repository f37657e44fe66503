#include <json.hpp>

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>
#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

std::string const corpus = GTALG_CORPUS_DIR;

struct Run
{
	int status;
	std::string out;
};

/// Runs the CLI through the shell with stderr folded into stdout.
Run run(std::string const &args)
{
	std::string cmd = std::string("'") + GTALG_CLI + "' " + args + " 2>&1";
	FILE *pipe = popen(cmd.c_str(), "r");
	if (!pipe)
		return {-1, ""};
	std::string out;
	std::array<char, 4096> buf;
	while (auto n = fread(buf.data(), 1, buf.size(), pipe))
		out.append(buf.data(), n);
	int raw = pclose(pipe);
	return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string file(std::string const &name) { return "'" + corpus + "/" + name + ".json'"; }

bool contains(std::string const &s, std::string const &needle) { return s.find(needle) != std::string::npos; }

} // namespace

TEST(CLI, PassingCheckExitsZero)
{
	auto r = run("check hopf " + file("z2_group_algebra"));
	EXPECT_EQ(r.status, 0) << r.out;
	EXPECT_TRUE(contains(r.out, "PASS  associativity"));
	EXPECT_TRUE(contains(r.out, "status: 0"));
	EXPECT_FALSE(contains(r.out, "FAIL"));
}

TEST(CLI, FailingCheckReportsWitness)
{
	auto r = run("check trialgebra " + file("s3_diagonal"));
	EXPECT_EQ(r.status, 1);
	EXPECT_TRUE(contains(r.out, "FAIL  interchange")) << r.out;
	EXPECT_TRUE(contains(r.out, "witness: (012, 021, 102, 012)")) << r.out;
}

TEST(CLI, DoubleIsWrittenAndChecks)
{
	auto out = fs::temp_directory_path() / "gtalg_cli_double.json";
	auto r = run("double " + file("z2_group_algebra") + " -o '" + out.string() + "'");
	EXPECT_EQ(r.status, 0) << r.out;
	ASSERT_TRUE(fs::exists(out));
	auto c = run("check hopf '" + out.string() + "'");
	EXPECT_EQ(c.status, 0) << c.out;
	EXPECT_TRUE(contains(c.out, "PASS  R: R Delta = Delta^op R"));
	fs::remove(out);
}

TEST(CLI, SolveB4ReportsUniqueSolution)
{
	for (auto name : {"f_expX", "f_expX_expY", "gt_identity", "hgt_diagonal"})
	{
		auto r = run("hgt solve-b4 " + file(name));
		EXPECT_EQ(r.status, 0) << name << "\n" << r.out;
		EXPECT_TRUE(contains(r.out, "result: unique solution; equals f")) << name;
	}
}

TEST(CLI, HgtAndGtChecks)
{
	EXPECT_EQ(run("hgt check-b4 " + file("hgt_diagonal")).status, 0);
	EXPECT_EQ(run("hgt check-b4 " + file("hgt_offdiagonal")).status, 1);
	EXPECT_EQ(run("gt check " + file("gt_identity")).status, 0);
	EXPECT_EQ(run("gt check " + file("gt_solution_n4")).status, 0);
	auto r = run("gt check " + file("gt_expX"));
	EXPECT_EQ(r.status, 1);
	EXPECT_TRUE(contains(r.out, "FAIL  duality"));
}

TEST(CLI, BraidEquality)
{
	EXPECT_EQ(run("braid eq " + file("braid_s1s2s1") + " " + file("braid_s2s1s2")).status, 0);
	EXPECT_EQ(run("braid eq 's1 s2' 's2 s1'").status, 1);
	EXPECT_EQ(run("braid eq 's1 s1i s2' 's2i s2 s2'").status, 0);
}

TEST(CLI, IharaCommands)
{
	EXPECT_EQ(run("ihara b5 " + file("lie_x") + " " + file("lie_y")).status, 0);
	EXPECT_EQ(run("ihara b5 --plain-bracket " + file("lie_x") + " " + file("lie_y")).status, 1);
	auto r = run("ihara bracket " + file("lie_y") + " " + file("lie_xy"));
	EXPECT_EQ(r.status, 0) << r.out;
}

TEST(CLI, UsageAndInputErrorsExitTwo)
{
	EXPECT_EQ(run("").status, 2);
	EXPECT_EQ(run("frobnicate").status, 2);
	EXPECT_EQ(run("check hopf /nonexistent/file.json").status, 2);
	EXPECT_EQ(run("check hopf " + file("sl2")).status, 2);
	EXPECT_EQ(run("gt solve --lambda 2/4").status, 2);
	EXPECT_EQ(run("gt solve --lambda 1 --degree 99").status, 2);
	EXPECT_EQ(run("--report yaml check hopf " + file("z2_group_algebra")).status, 2);
	auto r = run("check hopf " + file("sl2"));
	EXPECT_TRUE(contains(r.out, "lie-metrized")) << r.out;
}

TEST(CLI, JsonReportMatchesText)
{
	for (auto args : {"check trialgebra " + file("s3_diagonal"), "check hopf " + file("sweedler_h4"),
	                  "hgt check-b4 " + file("hgt_offdiagonal")})
	{
		auto text = run(args);
		auto js = run("--report json " + args);
		EXPECT_EQ(text.status, js.status);
		auto doc = nlohmann::json::parse(js.out);
		EXPECT_EQ(doc.at("status").get<int>(), js.status);
		for (auto const &c : doc.at("checks"))
		{
			auto verdict = c.at("verdict").get<std::string>();
			auto tag = verdict == "fails" ? "FAIL  " : verdict == "holds" ? "PASS  " : "";
			if (*tag)
				EXPECT_TRUE(contains(text.out, tag + c.at("name").get<std::string>())) << c.dump();
		}
	}
}

TEST(CLI, OutputIsDeterministic)
{
	auto a = run("--seed 11 gt solve --lambda 1 --degree 4");
	auto b = run("--seed 11 gt solve --lambda 1 --degree 4");
	EXPECT_EQ(a.status, 0) << a.out;
	EXPECT_EQ(a.out, b.out);
	auto c = run("check hopf " + file("sweedler_h4_double"));
	EXPECT_EQ(c.out, run("check hopf " + file("sweedler_h4_double")).out);
	EXPECT_FALSE(contains(c.out, "elapsed"));
	EXPECT_TRUE(contains(run("--timing check hopf " + file("z2_group_algebra")).out, "elapsed"));
}
