// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include "builders.hpp"
#include "eh_inputs.hpp"
#include "gt_space.hpp"
#include "oracles.hpp"
#include "random.hpp"

#include <gtalg/braid.hpp>
#include <gtalg/errors.hpp>
#include <gtalg/gtrel.hpp>
#include <gtalg/hgt.hpp>
#include <gtalg/hopf.hpp>
#include <gtalg/ihara.hpp>
#include <gtalg/io.hpp>
#include <gtalg/lie.hpp>
#include <gtalg/quotient.hpp>
#include <gtalg/trialgebra.hpp>

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace gtalg;
using namespace gtalg::testing;
namespace fs = std::filesystem;

namespace {

Alphabet const xy = Alphabet::xy();

/// Collects the first failure of a criterion as a one-line note.
class Check
{
public:
	void require(bool ok, std::string const &what)
	{
		if (!ok && note_.empty())
			note_ = what;
	}
	bool ok() const { return note_.empty(); }
	std::string const &note() const { return note_; }

private:
	std::string note_;
};

using Criterion = std::function<std::string(Check &)>;

std::string str(std::size_t n) { return std::to_string(n); }

std::string bch(Check &c)
{
	int n = 4;
	auto X = Series::generator(xy, n, 0), Y = Series::generator(xy, n, 1);
	auto z = log(exp(X) * exp(Y));
	auto nx = oracle::letter(n, 0), ny = oracle::letter(n, 1);
	auto oz = oracle::log(oracle::exp(nx) * oracle::exp(ny));
	c.require(oracle::from_series(z) == oz, "log(exp X exp Y) differs from the naive oracle");
	c.require(z.homogeneous(2) == Scalar(1, 2) * commutator(X, Y), "degree 2 is not [X, Y]/2");
	c.require(z.homogeneous(1) == X + Y, "degree 1 is not X + Y");
	return "log(exp X exp Y) to degree 4 matches naive convolution";
}

std::string witt(Check &c)
{
	std::vector<long> expected{2, 1, 2, 3, 6, 9, 18, 30};
	for (int d = 1; d <= 8; ++d)
	{
		auto size = static_cast<long>(lyndon_basis(xy, d).size());
		c.require(size == oracle::witt_dimension(2, d), "Lyndon count differs from necklace count at degree " +
		                                                    std::to_string(d));
		c.require(size == expected[static_cast<std::size_t>(d - 1)], "unexpected dimension at degree " +
		                                                                 std::to_string(d));
	}
	return "Lyndon basis sizes 2 1 2 3 6 9 18 30";
}

std::string t3(Check &c)
{
	int n = 4;
	auto q = build_quotient(drinfeld_kohno_alphabet(3), drinfeld_kohno_relators(3, n), n);
	// PBW: t3 = (central t12 + t13 + t23) + free Lie on two generators, so
	// the Hilbert series is prod_d (1 - t^d)^-c_d with c_1 = 3, c_d = witt(2, d).
	std::vector<oracle::Q> hilbert(static_cast<std::size_t>(n + 1));
	hilbert[0] = 1;
	for (int d = 1; d <= n; ++d)
	{
		long cd = oracle::witt_dimension(2, d) + (d == 1 ? 1 : 0);
		for (long k = 0; k < cd; ++k)
			for (int e = d; e <= n; ++e)
				hilbert[static_cast<std::size_t>(e)] += hilbert[static_cast<std::size_t>(e - d)];
	}
	std::vector<std::size_t> expected{1, 3, 7, 15, 31};
	std::string dims;
	for (int d = 0; d <= n; ++d)
	{
		auto dim = q.graded_dimension(d);
		dims += (d ? " " : "") + str(dim);
		c.require(oracle::Q(static_cast<long>(dim)) == hilbert[static_cast<std::size_t>(d)],
		          "degree " + std::to_string(d) + " differs from the PBW count");
		c.require(dim == expected[static_cast<std::size_t>(d)], "unexpected dimension in degree " +
		                                                            std::to_string(d));
	}
	return "U(t3) graded dimensions " + dims;
}

std::string gt_solver(Check &c)
{
	auto t4 = pentagon_quotient(3);
	auto o = oracle::degree_space(1, Series::one(xy, 3), 1, t4);
	c.require(o.x && o.kernel_dim == 0, "oracle degree-1 space is not a point");
	if (o.x)
		for (auto const &v : *o.x)
			c.require(v == 0, "oracle degree-1 point is not 0");
	auto base = solve_relations(1, 3);
	c.require(base.feasible() && base.degrees[0].homogeneous.empty(), "solver degree-1 space not a point");
	if (base.degrees.at(0).particular)
		for (auto const &v : *base.degrees[0].particular)
			c.require(v == 0, "solver degree-1 point is not 0");

	std::size_t outputs = 0;
	for (int n = 1; n <= 3; ++n)
		for (Scalar pick : {Scalar(0), Scalar(1), Scalar(-3, 2)})
		{
			SolveOptions opt;
			opt.max_degree = n;
			opt.choose = [&](int, std::size_t dim) { return Vector(dim, pick); };
			auto sol = solve_relations(1, n, opt);
			c.require(sol.feasible(), "infeasible at N = " + std::to_string(n));
			GTElement e(1, sol.f);
			c.require(check_duality(e).holds && check_hexagon(e).holds && check_pentagon(e).holds,
			          "solver output fails a relation at N = " + std::to_string(n));
			++outputs;
		}
	auto id = GTElement::identity(5);
	c.require(check_duality(id).holds && check_hexagon(id).holds && check_pentagon(id).holds,
	          "(1, 1) fails at N = 5");
	return "degree-1 space {0}; " + str(outputs) + " solver outputs re-checked; (1, 1) passes at N = 5";
}

std::string braids(Check &c)
{
	c.require(equal_braids(BraidWord({1, 2, 1}), BraidWord({2, 1, 2})), "s1 s2 s1 != s2 s1 s2");
	c.require(!equal_braids(BraidWord({1, 2}), BraidWord({2, 1})), "s1 s2 == s2 s1");
	auto twist = BraidWord({1, 2}).pow(3);
	c.require(twist == full_twist(), "full twist is not (s1 s2)^3");
	Rng rng(5);
	for (int i = 0; i < 50; ++i)
	{
		auto w = random_braid(rng, 12);
		c.require(equal_braids(twist * w, w * twist), "full twist fails to commute with a random word");
		c.require(burau(w) * burau(w.inverse()) == LaurentMatrix::identity(),
		          "word times inverse is not the identity");
	}
	return "braid relation, centrality of (s1 s2)^3 on 50 words, inverses";
}

std::string b_conditions(Check &c)
{
	Rng rng(6);
	int n = 4;
	for (int i = 0; i < 50; ++i)
	{
		auto phi = random_grouplike(rng, n);
		auto psi = i % 2 ? phi : random_grouplike(rng, n);
		c.require(check_b1(phi, psi) == is_involution(chi(phi, psi)), "B1 differs from chi^2 = 1");
		auto one = Series::one(xy, n);
		c.require(check_b3(phi, psi, one) == check_b4(HGTPair(phi, psi)), "B3 at chi = 1 differs from B4");
		c.require(check_b4(HGTPair(phi, psi)) == check_b4(swap(HGTPair(phi, psi))), "B4 not swap invariant");
	}
	return "B1 <=> chi^2 = 1, B3 at chi = 1 <=> B4, B4 swap invariant on 50 pairs";
}

std::string b4_solver(Check &c)
{
	Rng rng(7);
	for (int i = 0; i < 20; ++i)
	{
		auto f = random_grouplike(rng, 5);
		auto sol = solve_b4(f, 5);
		c.require(sol.unique() && sol.g == f, "solve_b4 does not return exactly {f}");
		auto o = oracle::solve_b4(oracle::from_series(f));
		c.require(o.g && o.kernel == 0 && *o.g == oracle::from_series(f), "oracle does not return exactly {f}");
	}
	return "20 random f at N = 5: solution set {f}";
}

std::string hopf_corpus(Check &c)
{
	std::vector<std::pair<std::string, HopfData>> algebras{{"k[Z2]", cyclic(2)}, {"k[Z3]", cyclic(3)}, {"H4", sweedler()}};
	for (auto const &[name, h] : algebras)
	{
		c.require(check_hopf(h).passed(), name + " fails a Hopf check");
		c.require(check_hopf(dual_hopf(h)).passed(), name + "* fails a Hopf check");
	}
	for (std::size_t n : {2u, 3u})
	{
		auto h = cyclic(n);
		auto d = drinfeld_double(h);
		c.require(d.algebra.dim() == n * n, "D(k[Z" + str(n) + "]) has the wrong dimension");
		c.require(check_hopf(d.algebra).passed(), "D(k[Z" + str(n) + "]) fails a Hopf check");
		c.require(check_quasitriangular(d.algebra, d.r).passed(), "D(k[Z" + str(n) + "]) not quasitriangular");
		c.require(oracle::intertwines_coproduct(d.algebra, d.r), "canonical R fails the dense oracle");
	}
	return "k[Z2], k[Z3], H4 and duals are Hopf; D(k[Z2]), D(k[Z3]) quasitriangular of dim 4, 9";
}

std::string interchange(Check &c)
{
	for (std::size_t n : {2u, 3u})
		c.require(check_trialgebra(diagonal(cyclic(n))).passed(), "diagonal k[Z" + str(n) + "] fails");
	auto t = diagonal(s3());
	auto r = check_trialgebra(t);
	auto const *ic = r.find("interchange");
	c.require(ic && ic->verdict == Verdict::fails && ic->witness.size() == 4, "S3 interchange not refuted");
	c.require(oracle::interchange_witness(t.star_mult, t.dot_mult).has_value(), "oracle finds no S3 witness");
	std::string w;
	if (ic && ic->witness.size() == 4)
	{
		auto e = [&](std::size_t i) { return oracle::unit_vector(6, i); };
		auto const &q = ic->witness;
		auto &m = t.star_mult;
		auto lhs = oracle::product(m, oracle::product(m, e(q[0]), e(q[1])), oracle::product(m, e(q[2]), e(q[3])));
		auto rhs = oracle::product(m, oracle::product(m, e(q[0]), e(q[2])), oracle::product(m, e(q[1]), e(q[3])));
		c.require(lhs != rhs, "reported witness does not violate interchange");
		for (auto i : q)
			w += (w.empty() ? "" : ", ") + t.labels[i];
	}
	return "diagonal k[Z2], k[Z3] pass; k[S3] fails at (" + w + ")";
}

std::string eckmann_hilton_criterion(Check &c)
{
	auto inputs = eckmann_hilton_inputs(10, 4);
	std::size_t satisfying = 0;
	for (auto const &in : inputs)
	{
		bool hyp = eh_hypotheses_hold(in);
		try
		{
			auto r = eckmann_hilton(in.first.mult, in.second.mult, in.first.unit, in.second.unit);
			c.require(hyp, "prover accepted an input violating the hypotheses");
			c.require(r.collapsed(), "counterexample: hypotheses hold but a conclusion fails");
			++satisfying;
		}
		catch (HypothesisError const &)
		{
			c.require(!hyp, "prover rejected an input satisfying the hypotheses");
		}
	}
	c.require(satisfying > 0, "no input satisfies the hypotheses");
	return str(satisfying) + " of " + str(inputs.size()) + " inputs satisfy the hypotheses; 0 counterexamples";
}

std::string ihara_kirillov(Check &c)
{
	Rng rng(11);
	for (int i = 0; i < 30; ++i)
	{
		auto f = random_lie(rng, 6, 1, 3), g = random_lie(rng, 6, 1, 3), h = random_lie(rng, 6, 1, 3);
		c.require(ihara_bracket(f, g) == -ihara_bracket(g, f), "Ihara bracket not antisymmetric");
		auto j = ihara_bracket(f, ihara_bracket(g, h)) + ihara_bracket(g, ihara_bracket(h, f)) +
		         ihara_bracket(h, ihara_bracket(f, g));
		c.require(j.is_zero(), "Ihara bracket fails Jacobi");
	}
	auto lie = sl2();
	auto const &s = lie.structure();
	for (std::size_t a = 0; a < 3; ++a)
	{
		auto xa = PolyFunction::coordinate(3, a);
		for (std::size_t b = 0; b < 3; ++b)
		{
			PolyFunction expected(3);
			for (std::size_t k = 0; k < 3; ++k)
				expected += s(a, b, k) * PolyFunction::coordinate(3, k);
			c.require(kirillov_bracket(xa, PolyFunction::coordinate(3, b), lie) == expected,
			          "Lie-Poisson bracket of coordinates differs from the structure constants");
		}
		c.require(kirillov_bracket(casimir(lie), xa, lie).is_zero(), "Casimir not central");
	}
	return "antisymmetry and Jacobi on 30 triples; sl2 Lie-Poisson and Casimir";
}

std::string round_trip(Check &c)
{
	std::size_t files = 0;
	for (auto const &entry : fs::directory_iterator(GTALG_CORPUS_DIR))
	{
		if (entry.path().extension() != ".json")
			continue;
		std::ifstream in(entry.path(), std::ios::binary);
		std::stringstream ss;
		ss << in.rdbuf();
		c.require(io::print(io::parse(ss.str())) == ss.str(), entry.path().filename().string() + " changes");
		++files;
	}
	c.require(files > 0, "empty corpus");
	return str(files) + " corpus files reprint byte-for-byte";
}

} // namespace

int main()
{
	std::vector<std::pair<char const *, Criterion>> criteria{
	    {"BCH", bch},
	    {"free Lie dimensions", witt},
	    {"t3 quotient", t3},
	    {"GT solver", gt_solver},
	    {"braid oracle", braids},
	    {"B1-B4", b_conditions},
	    {"solve_b4", b4_solver},
	    {"Hopf corpus", hopf_corpus},
	    {"trialgebra interchange", interchange},
	    {"Eckmann-Hilton", eckmann_hilton_criterion},
	    {"Ihara/Kirillov", ihara_kirillov},
	    {"io round-trip", round_trip},
	};
	int failed = 0;
	int index = 0;
	for (auto const &[name, run] : criteria)
	{
		++index;
		Check c;
		std::string summary;
		try
		{
			summary = run(c);
		}
		catch (std::exception const &e)
		{
			c.require(false, std::string("exception: ") + e.what());
		}
		if (!c.ok())
			++failed;
		std::cout << (c.ok() ? "PASS" : "FAIL") << "  " << index << ". " << name << ": "
		          << (c.ok() ? summary : c.note()) << '\n';
	}
	std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " passed\n";
	return failed ? 1 : 0;
}
