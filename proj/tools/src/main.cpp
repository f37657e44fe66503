#include "run_report.hpp"

#include <gtalg/braid.hpp>
#include <gtalg/errors.hpp>
#include <gtalg/gtrel.hpp>
#include <gtalg/hgt.hpp>
#include <gtalg/hopf.hpp>
#include <gtalg/ihara.hpp>
#include <gtalg/io.hpp>
#include <gtalg/lie.hpp>
#include <gtalg/scalar.hpp>
#include <gtalg/trialgebra.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <iostream>
#include <random>
#include <sstream>

using namespace gtalg;
using gtalg::cli::Format;
using gtalg::cli::RunReport;

namespace {

/// Malformed input or arguments; exit status 2.
struct InputError : Error
{
	using Error::Error;
};

struct Options
{
	std::string report = "text";
	int max_degree = 5;
	std::optional<std::uint64_t> seed;
	bool timing = false;

	std::string file, file2, out;
	std::optional<int> degree;
	std::string lambda;
	bool plain_bracket = false;
};

int checked_degree(Options const &o, int fallback)
{
	int d = o.degree.value_or(fallback);
	if (d < 0)
		throw InputError("--degree must be non-negative");
	if (d > o.max_degree)
		throw InputError("--degree " + std::to_string(d) + " exceeds --max-degree " +
		                 std::to_string(o.max_degree));
	return d;
}

Series truncated(Series const &s, int degree, std::string const &what)
{
	if (degree > s.truncation())
		throw InputError(what + ": --degree " + std::to_string(degree) +
		                 " exceeds the truncation " + std::to_string(s.truncation()) + " of the file");
	return s.restricted(degree);
}

/// The group-like series carried by a series, gt-element or hgt-pair file.
Series series_from(io::AlgebraDocument const &doc)
{
	if (auto const *s = std::get_if<Series>(&doc.payload))
		return *s;
	if (auto const *e = std::get_if<GTElement>(&doc.payload))
		return e->f();
	if (auto const *p = std::get_if<HGTPair>(&doc.payload))
		return p->f();
	throw InputError("expected a series, gt-element or hgt-pair document, got '" + doc.kind() + "'");
}

std::string format_lie(LieElement const &a)
{
	if (a.is_zero())
		return "0";
	std::string out;
	for (auto const &[w, c] : a.coordinates())
		out += to_string(c) + " * [" + format_monomial(a.alphabet(), w) + "]\n";
	return out;
}

std::string format_matrix(LaurentMatrix const &m)
{
	return "[[" + format_laurent(m(0, 0)) + ", " + format_laurent(m(0, 1)) + "], [" +
	       format_laurent(m(1, 0)) + ", " + format_laurent(m(1, 1)) + "]]";
}

std::string trimmed(std::string s)
{
	while (!s.empty() && s.back() == '\n')
		s.pop_back();
	return s;
}

void add_relation(RunReport &rep, RelationReport const &r)
{
	std::string detail;
	if (!r.holds)
		detail = "first failing degree " + std::to_string(*r.first_failing_degree);
	rep.add(r.relation, r.holds, detail);
	if (!r.holds)
		rep.value(r.relation + " residual", trimmed(format_series(r.residual)));
}

// ---------------------------------------------------------------- commands

void check_hopf_cmd(Options const &o, RunReport &rep)
{
	auto doc = io::load_file(o.file);
	auto const &d = io::expect<io::HopfDocument>(doc, "hopf");
	auto const &h = d.algebra;
	rep.add(check_hopf(h), h.labels);
	if (!h.antipode)
		if (auto s = solve_antipode(h))
		{
			std::ostringstream os;
			for (std::size_t i = 0; i < h.dim(); ++i)
			{
				os << "S(" << h.labels[i] << ") =";
				bool any = false;
				for (std::size_t j = 0; j < h.dim(); ++j)
					if (sgn((*s)(i, j)) != 0)
					{
						os << (any ? " + " : " ") << to_string((*s)(i, j)) << " " << h.labels[j];
						any = true;
					}
				os << (any ? "" : " 0") << "\n";
			}
			rep.value("antipode", trimmed(os.str()));
		}
	if (d.r_matrix)
		rep.add(check_quasitriangular(h, *d.r_matrix), h.labels, "R: ");
	if (d.coquasi_form)
		rep.add(check_coquasitriangular(h, *d.coquasi_form), h.labels, "r: ");
	if (d.pairing)
		rep.add(check_hopf_pairing(h, *d.pairing), h.labels, "pairing: ");
}

void check_trialgebra_cmd(Options const &o, RunReport &rep)
{
	auto doc = io::load_file(o.file);
	auto const &d = io::expect<io::TrialgebraDocument>(doc, "trialgebra");
	auto const &t = d.algebra;
	rep.add(check_trialgebra(t), t.labels);
	if (d.r_dot && d.r_star && d.pairing)
		rep.add(check_biquasitriangular(t, *d.r_dot, *d.r_star, *d.pairing), t.labels,
		        "biquasitriangular: ");
	else if (d.r_dot || d.r_star || d.pairing)
		rep.value("biquasitriangular", "skipped; needs r_dot, r_star and pairing together");
}

void check_quadraalgebra_cmd(Options const &o, RunReport &rep)
{
	auto doc = io::load_file(o.file);
	auto const &q = io::expect<io::QuadraalgebraDocument>(doc, "quadraalgebra").algebra;
	auto r = check_quadraalgebra(q);
	rep.add(r, q.labels);
	if (r.passed() && q.unit1 && q.unit2)
	{
		auto eh = eckmann_hilton(q.mult1, q.mult2, *q.unit1, *q.unit2);
		rep.add("eckmann-hilton: units coincide", eh.units_equal);
		rep.add("eckmann-hilton: products coincide", eh.products_equal);
		rep.add("eckmann-hilton: product commutative", eh.commutative);
	}
}

void double_cmd(Options const &o, RunReport &rep)
{
	auto doc = io::load_file(o.file);
	auto const &h = io::expect<io::HopfDocument>(doc, "hopf").algebra;
	auto dd = drinfeld_double(h);
	rep.add(check_hopf(dd.algebra), dd.algebra.labels, "double: ");
	rep.add(check_quasitriangular(dd.algebra, dd.r), dd.algebra.labels, "double R: ");
	rep.value("dimension", std::to_string(dd.algebra.dim()));

	io::AlgebraDocument out;
	out.description = "Drinfeld double of " +
	                  doc.description.value_or(std::filesystem::path(o.file).filename().string());
	out.payload = io::HopfDocument{dd.algebra, dd.r, std::nullopt, std::nullopt};
	io::save_file(o.out, out);
	rep.value("written", o.out);
}

void gt_check_cmd(Options const &o, RunReport &rep)
{
	auto doc = io::load_file(o.file);
	auto const &e = io::expect<GTElement>(doc, "gt-element");
	int n = checked_degree(o, e.truncation());
	GTElement r(e.lambda(), truncated(e.f(), n, "gt check"));
	add_relation(rep, check_duality(r));
	add_relation(rep, check_hexagon(r));
	add_relation(rep, check_pentagon(r));
}

void gt_solve_cmd(Options const &o, RunReport &rep)
{
	Scalar lambda;
	try
	{
		lambda = parse_scalar(o.lambda);
	}
	catch (std::invalid_argument const &e)
	{
		throw InputError(std::string("--lambda: ") + e.what());
	}
	int n = checked_degree(o, o.max_degree);
	SolveOptions opts;
	opts.max_degree = o.max_degree;
	std::mt19937_64 rng(o.seed.value_or(0));
	if (o.seed)
		opts.choose = [&rng](int, std::size_t dim) {
			Vector v(dim);
			for (auto &c : v)
				c = random_small_scalar(rng, 3);
			return v;
		};
	auto sol = solve_relations(lambda, n, opts);
	std::ostringstream dims;
	for (auto const &d : sol.degrees)
	{
		dims << "degree " << d.degree << ": ";
		if (d.feasible())
			dims << "solution space of dimension " << d.homogeneous.size() << "\n";
		else
			dims << "infeasible\n";
	}
	rep.value("degrees", trimmed(dims.str()));
	rep.add("solvable", sol.feasible(),
	        sol.feasible() ? "" : "infeasible at degree " + std::to_string(*sol.infeasible_degree));
	if (!sol.feasible())
		return;
	rep.value("f", trimmed(format_series(sol.f)));
	GTElement e(lambda, sol.f);
	add_relation(rep, check_duality(e));
	add_relation(rep, check_hexagon(e));
	add_relation(rep, check_pentagon(e));
}

void hgt_check_b4_cmd(Options const &o, RunReport &rep)
{
	auto doc = io::load_file(o.file);
	auto const &p = io::expect<HGTPair>(doc, "hgt-pair");
	bool holds = check_b4(p);
	rep.add("B4", holds);
	rep.add("B4 on the swapped pair", check_b4(swap(p)));
	if (!holds)
		rep.value("B4 residual", trimmed(format_series(b4_residual(p.f(), p.g()))));
}

void hgt_solve_b4_cmd(Options const &o, RunReport &rep)
{
	auto doc = io::load_file(o.file);
	auto full = series_from(doc);
	int n = checked_degree(o, full.truncation());
	auto f = truncated(full, n, "hgt solve-b4");
	if (!is_grouplike(f))
		throw InputError("hgt solve-b4: f is not group-like");
	auto sol = solve_b4(f, n);
	std::ostringstream dims;
	for (auto const &d : sol.degrees)
		dims << "degree " << d.degree << ": " << d.lyndon_words.size() << " unknowns, "
		     << (d.particular ? "solution space of dimension " + std::to_string(d.homogeneous.size())
		                      : std::string("infeasible"))
		     << "\n";
	rep.value("degrees", trimmed(dims.str()));
	rep.add("solvable", sol.feasible());
	if (!sol.feasible())
		return;
	rep.add("solution unique", sol.unique());
	bool equals = sol.g == f;
	rep.add("solution equals f", equals);
	if (sol.unique() && equals)
		rep.value("result", "unique solution; equals f");
	else
	{
		rep.value("result", sol.unique() ? "unique solution; differs from f" : "solution not unique");
		rep.value("g", trimmed(format_series(sol.g)));
	}
}

void hgt_chi_cmd(Options const &o, RunReport &rep)
{
	auto phi = series_from(io::load_file(o.file));
	auto psi = series_from(io::load_file(o.file2));
	auto c = chi(phi, psi);
	rep.add("B1", check_b1(phi, psi));
	rep.add("chi is an involution", is_involution(c));
	rep.value("chi", trimmed(format_series(c)));
}

LieElement lie_from_file(std::string const &path, int degree)
{
	auto s = series_from(io::load_file(path));
	s = truncated(s, degree, path);
	if (!is_primitive(s))
		throw InputError(path + ": series is not primitive");
	return project_lie(s);
}

void ihara_bracket_cmd(Options const &o, RunReport &rep)
{
	int n = checked_degree(o, o.max_degree);
	auto f = lie_from_file(o.file, n);
	auto g = lie_from_file(o.file2, n);
	auto b = ihara_bracket(f, g);
	rep.value("bracket (Lyndon coordinates)", trimmed(format_lie(b)));
	rep.value("bracket (series)", trimmed(format_series(embed_lie(b))));
}

void ihara_b5_cmd(Options const &o, RunReport &rep)
{
	auto f_series = series_from(io::load_file(o.file));
	auto g_series = series_from(io::load_file(o.file2));
	int n = checked_degree(o, std::min(f_series.truncation(), g_series.truncation()));
	auto f = lie_from_file(o.file, n);
	auto g = lie_from_file(o.file2, n);
	auto kind = o.plain_bracket ? B5Bracket::plain : B5Bracket::ihara;
	auto b = o.plain_bracket ? lie_bracket(f, g) : ihara_bracket(f, g);
	rep.add(o.plain_bracket ? "B5 (plain bracket)" : "B5 (Ihara bracket)", check_b5(f, g, kind));
	rep.value("bracket", trimmed(format_lie(b)));
}

BraidWord braid_from(std::string const &arg)
{
	std::error_code ec;
	if (std::filesystem::is_regular_file(arg, ec))
		return io::expect<BraidWord>(io::load_file(arg), "braid");
	try
	{
		return parse_braid_word(arg);
	}
	catch (std::invalid_argument const &e)
	{
		throw InputError("'" + arg + "' is neither a file nor a braid word: " + e.what());
	}
}

void braid_eq_cmd(Options const &o, RunReport &rep)
{
	auto u = braid_from(o.file);
	auto v = braid_from(o.file2);
	rep.add("braids equal", equal_braids(u, v));
	rep.value("W1", format_braid_word(u));
	rep.value("W2", format_braid_word(v));
	rep.value("burau(W1)", format_matrix(burau(u)));
	rep.value("burau(W2)", format_matrix(burau(v)));
}

} // namespace

int main(int argc, char **argv)
{
	CLI::App app{"Exact checks for Grothendieck-Teichmueller data and Hopf-type algebras",
	             "gtalg"};
	app.fallthrough();
	app.require_subcommand(1);
	Options o;
	app.add_option("--report", o.report, "Report format")
	    ->check(CLI::IsMember({"text", "json"}))
	    ->capture_default_str();
	app.add_option("--max-degree", o.max_degree, "Largest accepted --degree")
	    ->check(CLI::Range(0, 12))
	    ->capture_default_str();
	app.add_option("--seed", o.seed, "Seed for randomized choices");
	app.add_flag("--timing", o.timing, "Include elapsed time in the report");

	std::function<void(Options const &, RunReport &)> run;
	auto bind = [&](CLI::App *sub, auto fn) { sub->callback([&run, fn] { run = fn; }); };

	auto *check = app.add_subcommand("check", "Verify the axioms of a structure file");
	check->require_subcommand(1);
	for (auto const &[name, fn] :
	     std::initializer_list<std::pair<char const *, void (*)(Options const &, RunReport &)>>{
	         {"hopf", check_hopf_cmd},
	         {"trialgebra", check_trialgebra_cmd},
	         {"quadraalgebra", check_quadraalgebra_cmd}})
	{
		auto *sub = check->add_subcommand(name, std::string("Check a ") + name + " file");
		sub->add_option("FILE", o.file)->required();
		bind(sub, fn);
	}

	auto *dbl = app.add_subcommand("double", "Write the Drinfeld double of a Hopf algebra");
	dbl->add_option("FILE", o.file)->required();
	dbl->add_option("-o,--output", o.out, "Output file")->required();
	bind(dbl, double_cmd);

	auto *gt = app.add_subcommand("gt", "GT relations");
	gt->require_subcommand(1);
	auto *gt_check = gt->add_subcommand("check", "Check duality, hexagon and pentagon");
	gt_check->add_option("FILE", o.file)->required();
	gt_check->add_option("--degree", o.degree, "Truncation degree");
	bind(gt_check, gt_check_cmd);
	auto *gt_solve = gt->add_subcommand("solve", "Solve the relations degree by degree");
	gt_solve->add_option("--lambda", o.lambda, "lambda as p/q")->required();
	gt_solve->add_option("--degree", o.degree, "Truncation degree");
	bind(gt_solve, gt_solve_cmd);

	auto *hgt = app.add_subcommand("hgt", "The (f, g) pair conditions");
	hgt->require_subcommand(1);
	auto *b4 = hgt->add_subcommand("check-b4", "Check g^-1 f = f^-1 g");
	b4->add_option("FILE", o.file)->required();
	bind(b4, hgt_check_b4_cmd);
	auto *solve_b4_sub = hgt->add_subcommand("solve-b4", "Solve for every g with (f, g) satisfying B4");
	solve_b4_sub->add_option("FILE", o.file)->required();
	solve_b4_sub->add_option("--degree", o.degree, "Truncation degree");
	bind(solve_b4_sub, hgt_solve_b4_cmd);
	auto *chi_sub = hgt->add_subcommand("chi", "chi = psi^-1 phi and the B1 condition");
	chi_sub->add_option("PHI", o.file)->required();
	chi_sub->add_option("PSI", o.file2)->required();
	bind(chi_sub, hgt_chi_cmd);

	auto *ihara = app.add_subcommand("ihara", "Ihara bracket on the free Lie algebra");
	ihara->require_subcommand(1);
	auto *bracket = ihara->add_subcommand("bracket", "Compute {F, G}");
	bracket->add_option("F", o.file)->required();
	bracket->add_option("G", o.file2)->required();
	bracket->add_option("--degree", o.degree, "Truncation degree");
	bind(bracket, ihara_bracket_cmd);
	auto *b5 = ihara->add_subcommand("b5", "Check that F and G commute");
	b5->add_option("F", o.file)->required();
	b5->add_option("G", o.file2)->required();
	b5->add_option("--degree", o.degree, "Truncation degree");
	b5->add_flag("--plain-bracket", o.plain_bracket, "Use the free Lie bracket");
	bind(b5, ihara_b5_cmd);

	auto *braid = app.add_subcommand("braid", "Words in B3");
	braid->require_subcommand(1);
	auto *eq = braid->add_subcommand("eq", "Decide equality of two braid words");
	eq->add_option("W1", o.file, "Braid file or quoted word such as 's1 s2 s1'")->required();
	eq->add_option("W2", o.file2)->required();
	bind(eq, braid_eq_cmd);

	try
	{
		app.parse(argc, argv);
	}
	catch (CLI::CallForHelp const &)
	{
		std::cout << app.help();
		return 0;
	}
	catch (CLI::CallForAllHelp const &)
	{
		std::cout << app.help("", CLI::AppFormatMode::All);
		return 0;
	}
	catch (CLI::ParseError const &e)
	{
		std::cerr << "error: " << e.what() << "\n\n" << app.help("", CLI::AppFormatMode::All);
		return 2;
	}

	RunReport rep;
	rep.command.assign(argv, argv + argc);
	rep.command.front() = "gtalg";
	auto start = std::chrono::steady_clock::now();
	try
	{
		run(o, rep);
	}
	catch (Error const &e)
	{
		std::cerr << "error: " << e.what() << "\n";
		return 2;
	}
	catch (std::invalid_argument const &e)
	{
		std::cerr << "error: " << e.what() << "\n";
		return 2;
	}
	if (o.timing)
		rep.elapsed_ms =
		    std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
	std::cout << rep.render(o.report == "json" ? Format::json : Format::text);
	return rep.exit_status();
}
