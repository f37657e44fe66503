#include "oracles.hpp"
#include "random.hpp"

#include <gtalg/errors.hpp>
#include <gtalg/gtrel.hpp>
#include <gtalg/hgt.hpp>

#include <gtest/gtest.h>

#include <algorithm>

using namespace gtalg;
using namespace gtalg::testing;

namespace {

Alphabet const xy = Alphabet::xy();

Series X(int n) { return Series::generator(xy, n, 0); }
Series Y(int n) { return Series::generator(xy, n, 1); }
Series one(int n) { return Series::one(xy, n); }

bool same_combination(FirstComponents const &a, FirstComponents const &b)
{
	if (a.size() != b.size())
		return false;
	return std::all_of(a.begin(), a.end(), [&](auto const &t) {
		return std::find(b.begin(), b.end(), t) != b.end();
	});
}

/// Half the pairs equal, half independent.
std::pair<Series, Series> random_pair(Rng &rng, int n, int trial)
{
	auto f = random_grouplike(rng, n);
	return {f, trial % 2 ? f : random_grouplike(rng, n)};
}

} // namespace

TEST(HGT, Chi)
{
	Rng rng(1);
	auto phi = random_grouplike(rng, 4), psi = random_grouplike(rng, 4);
	EXPECT_EQ(chi(phi, phi), one(4));
	EXPECT_EQ(chi(phi, one(4)), phi);
	auto c = chi(phi, psi);
	EXPECT_EQ(oracle::from_series(psi) * oracle::from_series(c), oracle::from_series(phi));
	EXPECT_THROW(chi(X(4), psi), DomainError);
}

TEST(HGT, B1IffChiInvolution)
{
	Rng rng(2);
	for (int trial = 0; trial < 50; ++trial)
	{
		auto [phi, psi] = random_pair(rng, 4, trial);
		EXPECT_EQ(check_b1(phi, psi), is_involution(chi(phi, psi)));
	}
	EXPECT_TRUE(check_b1(exp(X(3)), exp(X(3))));
	EXPECT_FALSE(check_b1(exp(X(3)), one(3)));
	EXPECT_FALSE(is_involution(exp(X(3))));
	EXPECT_TRUE(is_involution(one(3)));
}

TEST(HGT, B3WithTrivialChiIsB4)
{
	Rng rng(3);
	EXPECT_TRUE(check_b3(exp(X(3)), exp(X(3)), one(3)));
	EXPECT_FALSE(check_b3(one(3), exp(X(3)), one(3)));
	for (int trial = 0; trial < 50; ++trial)
	{
		auto [f, g] = random_pair(rng, 4, trial);
		EXPECT_EQ(check_b3(f, g, one(4)), check_b4(HGTPair(f, g)));
	}
}

TEST(HGT, B4AndSwap)
{
	EXPECT_TRUE(check_b4(HGTPair(exp(X(3)), exp(X(3)))));
	EXPECT_FALSE(check_b4(HGTPair(one(3), exp(X(3)))));
	Rng rng(4);
	for (int trial = 0; trial < 50; ++trial)
	{
		auto [f, g] = random_pair(rng, 4, trial);
		HGTPair p(f, g);
		EXPECT_EQ(check_b4(p), check_b4(swap(p)));
		EXPECT_EQ(swap(swap(p)), p);
		auto nf = oracle::from_series(f), ng = oracle::from_series(g);
		EXPECT_EQ(check_b4(p), oracle::inverse(ng) * nf == oracle::inverse(nf) * ng);
	}
	HGTPair diag(exp(Y(3)), exp(Y(3)));
	EXPECT_EQ(swap(diag), diag);
}

TEST(HGT, PairValidation)
{
	EXPECT_THROW(HGTPair(one(3) + X(3), one(3)), DomainError);
	EXPECT_THROW(HGTPair(one(3), one(4)), StructuralError);
}

TEST(HGT, SolveB4Trivial)
{
	auto sol = solve_b4(one(5), 5);
	EXPECT_TRUE(sol.unique());
	EXPECT_EQ(sol.g, one(5));
	auto e = solve_b4(exp(X(5)), 5);
	EXPECT_TRUE(e.unique());
	EXPECT_EQ(e.g, exp(X(5)));
	EXPECT_TRUE(check_b4(HGTPair(exp(X(5)), e.g)));
}

TEST(HGT, SolveB4UniqueAndEqualToF)
{
	Rng rng(5);
	for (int trial = 0; trial < 6; ++trial)
	{
		auto f = random_grouplike(rng, 5);
		auto sol = solve_b4(f, 5);
		ASSERT_TRUE(sol.feasible());
		EXPECT_TRUE(sol.unique());
		EXPECT_EQ(sol.g, f);
		auto o = oracle::solve_b4(oracle::from_series(f));
		ASSERT_TRUE(o.g);
		EXPECT_EQ(o.kernel, 0u);
		EXPECT_EQ(*o.g, oracle::from_series(f));
	}
}

TEST(HGT, SolveB4AtLowerTruncation)
{
	Rng rng(6);
	auto f = random_grouplike(rng, 5);
	auto sol = solve_b4(f, 3);
	EXPECT_TRUE(sol.unique());
	EXPECT_EQ(sol.g, f.restricted(3));
	EXPECT_THROW(solve_b4(f.restricted(3), 4), StructuralError);
}

TEST(HGT, CompositionWithIdentity)
{
	Rng rng(7);
	auto f = random_grouplike(rng, 3), g = random_grouplike(rng, 3);
	HGTPair p(f, g), id(one(3), one(3));
	EXPECT_EQ(compose_pair(p, id), p);
	EXPECT_EQ(compose_pair(id, p), p);
}

TEST(HGT, DiagonalCompositionAndClosure)
{
	Rng rng(8);
	auto f = random_grouplike(rng, 3), h = random_grouplike(rng, 3);
	auto ff = compose_pair(HGTPair(f, f), HGTPair(f, f));
	EXPECT_EQ(ff.f(), ff.g());
	EXPECT_EQ(ff.f(), compose_f(f, f));

	auto fh = compose_pair(HGTPair(f, f), HGTPair(h, h));
	EXPECT_EQ(fh.f(), compose_f(f, h));
	EXPECT_EQ(fh.g(), compose_f(h, f));

	HGTCombination a(1, HGTPair(f, f)), b(1, HGTPair(h, h));
	auto c = compose(a, b);
	bool diagonal = compose_f(f, h) == compose_f(h, f);
	EXPECT_EQ(c.violations.empty(), diagonal);
	if (!diagonal)
	{
		ASSERT_EQ(c.violations.size(), 1u);
		EXPECT_EQ(c.violations[0].residual, b4_residual(fh.f(), fh.g()));
	}
}

TEST(HGT, CombinationsAreBilinear)
{
	Rng rng(9);
	auto f = random_grouplike(rng, 3), h = random_grouplike(rng, 3);
	HGTPair p(f, f), q(h, h);
	HGTCombination a;
	a.add(2, p);
	a.add(3, q);
	a.add(-2, p);
	ASSERT_EQ(a.terms().size(), 1u);
	EXPECT_EQ(a.terms()[0].first, 3);

	HGTCombination b(Scalar(1, 2), p);
	b.add(5, q);
	auto c = compose(a, b).result;
	HGTCombination expect;
	expect.add(Scalar(3, 2), compose_pair(q, p));
	expect.add(15, compose_pair(q, q));
	ASSERT_EQ(c.terms().size(), expect.terms().size());
	for (auto const &t : expect.terms())
		EXPECT_NE(std::find(c.terms().begin(), c.terms().end(), t), c.terms().end());
}

TEST(HGT, ProjectionIsMultiplicative)
{
	Rng rng(10);
	for (int trial = 0; trial < 5; ++trial)
	{
		HGTCombination a, b;
		for (int i = 0; i < 2; ++i)
		{
			auto f = random_grouplike(rng, 3), g = random_grouplike(rng, 3);
			a.add(Scalar(long(rng() % 5) + 1), HGTPair(f, g));
			auto h = random_grouplike(rng, 3), k = random_grouplike(rng, 3);
			b.add(Scalar(-long(rng() % 5) - 1), HGTPair(h, k));
		}
		EXPECT_TRUE(same_combination(project_first(compose(a, b).result),
		                             compose_first(project_first(a), project_first(b))));
	}
	auto f = random_grouplike(rng, 3);
	auto single = project_first(HGTCombination(1, HGTPair(f, one(3))));
	ASSERT_EQ(single.size(), 1u);
	EXPECT_EQ(single[0], (std::pair<Scalar, Series>{1, f}));
}
