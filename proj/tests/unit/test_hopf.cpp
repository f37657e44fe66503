#include "builders.hpp"
#include "oracles.hpp"
#include "random.hpp"

#include <gtalg/errors.hpp>
#include <gtalg/hopf.hpp>

#include <gtest/gtest.h>

using namespace gtalg;
using namespace gtalg::testing;

namespace {

// m(S (x) id) Delta and m(id (x) S) Delta on e_a, densely.
bool antipode_identities(HopfData const &h, Matrix const &s)
{
	std::size_t n = h.dim();
	for (std::size_t a = 0; a < n; ++a)
	{
		std::vector<oracle::Q> left(n), right(n), expect(n);
		for (std::size_t k = 0; k < n; ++k)
			expect[k] = h.counit[a] * h.unit[k];
		for (std::size_t j = 0; j < n; ++j)
			for (std::size_t k = 0; k < n; ++k)
				if (h.comult(a, j, k) != 0)
					for (std::size_t t = 0; t < n; ++t)
						for (std::size_t o = 0; o < n; ++o)
						{
							left[o] += h.comult(a, j, k) * s(j, t) * h.mult(t, k, o);
							right[o] += h.comult(a, j, k) * s(k, t) * h.mult(j, t, o);
						}
		if (left != expect || right != expect)
			return false;
	}
	return true;
}

Matrix filled(std::size_t n, Scalar const &v)
{
	Matrix m(n, n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			m(i, j) = v;
	return m;
}

std::vector<HopfData> corpus_algebras()
{
	auto sw = sweedler();
	return {cyclic(1), cyclic(2), cyclic(3), s3(), sw};
}

} // namespace

TEST(Hopf, GroupAlgebrasAndSweedlerPass)
{
	for (auto const &h : corpus_algebras())
	{
		auto r = check_hopf(h);
		EXPECT_TRUE(r.passed()) << h.labels.back() << ": " << r.first_failure()->detail;
		EXPECT_TRUE(check_bialgebra(h).passed());
	}
}

TEST(Hopf, PerturbedProductFailsAssociativityWithWitness)
{
	auto h = cyclic(3);
	h.mult(1, 2, 0) = 0;
	auto expect = oracle::associativity_witness(h.mult);
	ASSERT_TRUE(expect);
	auto r = check_bialgebra(h);
	auto const *c = r.find("associativity");
	ASSERT_NE(c, nullptr);
	EXPECT_EQ(c->verdict, Verdict::fails);
	EXPECT_EQ(c->witness, *expect);
}

TEST(Hopf, Antipodes)
{
	auto s2 = solve_antipode(cyclic(2));
	ASSERT_TRUE(s2);
	EXPECT_EQ(*s2, Matrix::identity(2));

	auto s3m = solve_antipode(cyclic(3));
	ASSERT_TRUE(s3m);
	Matrix inv(3, 3);
	inv(0, 0) = inv(1, 2) = inv(2, 1) = 1;
	EXPECT_EQ(*s3m, inv);

	auto sw = solve_antipode(sweedler());
	ASSERT_TRUE(sw);
	EXPECT_EQ(*sw, sweedler_antipode());
	EXPECT_TRUE(antipode_identities(sweedler(), *sw));
	EXPECT_TRUE(check_antipode(sweedler(), *sw).passed());
	EXPECT_FALSE(check_antipode(sweedler(), Matrix::identity(4)).passed());
}

TEST(Hopf, MonoidBialgebraHasNoAntipode)
{
	// k{1, z} with z z = z and both elements group-like
	HopfData h;
	h.labels = {"1", "z"};
	h.mult = Tensor3(2, 2, 2);
	h.comult = Tensor3(2, 2, 2);
	h.mult(0, 0, 0) = h.mult(0, 1, 1) = h.mult(1, 0, 1) = h.mult(1, 1, 1) = 1;
	h.comult(0, 0, 0) = h.comult(1, 1, 1) = 1;
	h.unit = {1, 0};
	h.counit = {1, 1};
	EXPECT_TRUE(check_bialgebra(h).passed());
	EXPECT_FALSE(solve_antipode(h));
	EXPECT_FALSE(check_hopf(h).passed());
	EXPECT_THROW(drinfeld_double(h), DomainError);
}

TEST(Hopf, ShapeMismatchIsStructuralError)
{
	auto h = cyclic(2);
	h.counit = {1};
	EXPECT_THROW(check_bialgebra(h), StructuralError);
}

TEST(Hopf, QuasitriangularStructures)
{
	for (std::size_t n : {2u, 3u})
	{
		Matrix trivial(n, n);
		trivial(0, 0) = 1;
		EXPECT_TRUE(check_quasitriangular(cyclic(n), trivial).passed());
	}
	auto r = z2_triangular_r();
	EXPECT_TRUE(check_quasitriangular(cyclic(2), r).passed());
	EXPECT_TRUE(oracle::intertwines_coproduct(cyclic(2), r));
	// triangular: R21 R = 1
	EXPECT_EQ(tensor_multiply(cyclic(2), r.transposed(), r), [] {
		Matrix one(2, 2);
		one(0, 0) = 1;
		return one;
	}());
}

TEST(Hopf, RandomRMatrixFails)
{
	Rng rng(19);
	auto h = sweedler();
	for (int trial = 0; trial < 5; ++trial)
	{
		Matrix r(4, 4);
		for (std::size_t i = 0; i < 4; ++i)
			for (std::size_t j = 0; j < 4; ++j)
				r(i, j) = random_small_scalar(rng, 3);
		auto rep = check_quasitriangular(h, r);
		EXPECT_FALSE(rep.passed());
		ASSERT_NE(rep.first_failure(), nullptr);
		EXPECT_FALSE(rep.first_failure()->detail.empty());
		if (auto const *c = rep.find("R Delta = Delta^op R"); c && c->verdict != Verdict::vacuous)
			EXPECT_EQ(c->verdict == Verdict::holds, oracle::intertwines_coproduct(h, r));
	}
}

TEST(Hopf, DualIsInvolutionAndPasses)
{
	for (auto const &h : corpus_algebras())
	{
		auto d = dual_hopf(h);
		EXPECT_TRUE(check_hopf(d).passed()) << h.labels.back();
		EXPECT_EQ(dual_hopf(d), h);
	}
	// the dual of k[Z/2] is the algebra of functions: orthogonal idempotents
	auto f = dual_hopf(cyclic(2));
	for (std::size_t i = 0; i < 2; ++i)
		for (std::size_t j = 0; j < 2; ++j)
			for (std::size_t k = 0; k < 2; ++k)
				EXPECT_EQ(f.mult(i, j, k), i == j && j == k ? 1 : 0);
	EXPECT_EQ(f.unit, (Vector{1, 1}));
	EXPECT_EQ(f.labels, (std::vector<std::string>{"e*", "g*"}));
}

TEST(Hopf, DrinfeldDoubles)
{
	for (auto const &h : corpus_algebras())
	{
		auto dd = drinfeld_double(h);
		EXPECT_EQ(dd.algebra.dim(), h.dim() * h.dim());
		EXPECT_TRUE(check_hopf(dd.algebra).passed()) << h.labels.back();
		EXPECT_TRUE(check_quasitriangular(dd.algebra, dd.r).passed()) << h.labels.back();
		EXPECT_TRUE(oracle::intertwines_coproduct(dd.algebra, dd.r)) << h.labels.back();
		EXPECT_TRUE(check_coquasitriangular(dual_hopf(dd.algebra), dd.r).passed());
	}
	auto k = drinfeld_double(cyclic(1));
	EXPECT_EQ(k.algebra.dim(), 1u);
	EXPECT_EQ(k.r, Matrix::identity(1));
}

TEST(Hopf, SweedlerDoubleIsNoncommutativeAndNoncocommutative)
{
	auto d = drinfeld_double(sweedler()).algebra;
	bool commutative = true, cocommutative = true;
	for (std::size_t i = 0; i < d.dim(); ++i)
		for (std::size_t j = 0; j < d.dim(); ++j)
			for (std::size_t k = 0; k < d.dim(); ++k)
			{
				commutative = commutative && d.mult(i, j, k) == d.mult(j, i, k);
				cocommutative = cocommutative && d.comult(k, i, j) == d.comult(k, j, i);
			}
	EXPECT_FALSE(commutative);
	EXPECT_FALSE(cocommutative);
}

TEST(Hopf, Coquasitriangular)
{
	auto trivial = filled(2, 1);
	EXPECT_TRUE(check_coquasitriangular(cyclic(2), trivial).passed());
	EXPECT_TRUE(check_coquasitriangular(cyclic(2), z2_fourier()).passed());
	Matrix bad(2, 2);
	bad(0, 0) = 1;
	bad(1, 1) = 2;
	EXPECT_FALSE(check_coquasitriangular(cyclic(2), bad).passed());
}

TEST(Hopf, SelfDuality)
{
	EXPECT_TRUE(check_selfdual(cyclic(2), z2_fourier()));
	EXPECT_FALSE(check_selfdual(cyclic(2), Matrix(2, 2)));
	// Over Q the only character of Z/3 is trivial; the resulting pairing is
	// a Hopf pairing but degenerate.
	auto ones = filled(3, 1);
	auto r = check_hopf_pairing(cyclic(3), ones);
	EXPECT_FALSE(r.passed());
	EXPECT_EQ(r.first_failure()->axiom, "pairing nondegenerate");
	EXPECT_EQ(std::count_if(r.checks.begin(), r.checks.end(),
	                        [](AxiomCheck const &c) { return c.verdict == Verdict::fails; }),
	          1);
}
