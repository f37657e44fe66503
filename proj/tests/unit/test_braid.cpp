#include "random.hpp"

#include <gtalg/braid.hpp>

#include <gtest/gtest.h>

using namespace gtalg;
using namespace gtalg::testing;

namespace {

// Reduced Burau images written out by hand, multiplied with an independent
// 2x2 Laurent product.
using Poly = std::map<long, long>;
using M2 = std::array<Poly, 4>;

Poly mul(Poly const &a, Poly const &b)
{
	Poly out;
	for (auto [e, c] : a)
		for (auto [f, d] : b)
			out[e + f] += c * d;
	std::erase_if(out, [](auto const &kv) { return kv.second == 0; });
	return out;
}

Poly add(Poly a, Poly const &b)
{
	for (auto [e, c] : b)
		a[e] += c;
	std::erase_if(a, [](auto const &kv) { return kv.second == 0; });
	return a;
}

M2 mul(M2 const &a, M2 const &b)
{
	return {add(mul(a[0], b[0]), mul(a[1], b[2])), add(mul(a[0], b[1]), mul(a[1], b[3])),
	        add(mul(a[2], b[0]), mul(a[3], b[2])), add(mul(a[2], b[1]), mul(a[3], b[3]))};
}

M2 const s1{Poly{{1, -1}}, Poly{{0, 1}}, Poly{}, Poly{{0, 1}}};
M2 const s2{Poly{{0, 1}}, Poly{}, Poly{{1, 1}}, Poly{{1, -1}}};

bool same(LaurentMatrix const &m, M2 const &o)
{
	for (int i = 0; i < 4; ++i)
	{
		Poly p;
		for (auto const &[e, c] : m.entry[static_cast<std::size_t>(i)].terms())
			p[e] = c.get_si();
		if (p != o[static_cast<std::size_t>(i)])
			return false;
	}
	return true;
}

} // namespace

TEST(Braid, EmptyAndCancellingWords)
{
	EXPECT_EQ(burau(BraidWord()), LaurentMatrix::identity());
	EXPECT_TRUE(BraidWord({1, -1}).empty());
	EXPECT_EQ(burau(parse_braid_word("s1 s1i")), LaurentMatrix::identity());
}

TEST(Braid, BraidRelationAgainstHandProduct)
{
	auto u = parse_braid_word("s1 s2 s1"), v = parse_braid_word("s2 s1 s2");
	EXPECT_TRUE(same(burau(u), mul(mul(s1, s2), s1)));
	EXPECT_TRUE(same(burau(v), mul(mul(s2, s1), s2)));
	EXPECT_EQ(burau(u), burau(v));
	EXPECT_TRUE(equal_braids(u, v));
	EXPECT_FALSE(equal_braids(parse_braid_word("s1"), parse_braid_word("s2")));
}

TEST(Braid, HomomorphismAndCentrality)
{
	Rng rng(13);
	auto twist = full_twist();
	for (int trial = 0; trial < 50; ++trial)
	{
		auto u = random_braid(rng, 8), v = random_braid(rng, 8);
		EXPECT_EQ(burau(u * v), burau(u) * burau(v));
		EXPECT_TRUE(equal_braids(u, u));
		EXPECT_TRUE(equal_braids(twist * u, u * twist));
		EXPECT_EQ(burau(u * u.inverse()), LaurentMatrix::identity());
	}
}

TEST(Braid, AutomorphismWords)
{
	EXPECT_TRUE(gt_automorphism_word(FreeWord(), 0).empty());
	EXPECT_EQ(format_braid_word(gt_automorphism_word(parse_free_word("x"), 0)), "s1 s1");
	EXPECT_EQ(format_braid_word(gt_automorphism_word(parse_free_word("x y xi yi"), 1)),
	          "s1 s1 s2 s2 s1i s1i s2i s2i s1 s2 s1 s2 s1 s2");
	Rng rng(2);
	for (int trial = 0; trial < 20; ++trial)
	{
		auto f = random_free_word(rng, 5), g = random_free_word(rng, 5);
		EXPECT_EQ(gt_automorphism_word(f * g, 0),
		          gt_automorphism_word(f, 0) * gt_automorphism_word(g, 0));
	}
}

TEST(Braid, TokenFormat)
{
	auto w = parse_braid_word("s1 s2i s2 s1i s2");
	EXPECT_EQ(format_braid_word(w), "s2");
	EXPECT_THROW(parse_braid_word("s3"), std::invalid_argument);
}
