#include "gtalg/hgt.hpp"

#include "gtalg/errors.hpp"
#include "gtalg/gtrel.hpp"
#include "gtalg/lie.hpp"

#include <algorithm>

namespace gtalg {

namespace {

void require_unit_constant(Series const &s, char const *what)
{
	if (s.constant_term() != 1)
		throw DomainError(std::string(what) + ": constant term must be 1");
}

void require_same_shape(Series const &a, Series const &b, char const *what)
{
	if (!(a.alphabet() == b.alphabet()) || a.truncation() != b.truncation())
		throw StructuralError(std::string(what) + ": alphabet or truncation mismatch");
}

void merge(FirstComponents &out, Scalar const &c, Series const &f)
{
	auto it = std::find_if(out.begin(), out.end(), [&](auto const &t) { return t.second == f; });
	if (it == out.end())
	{
		if (sgn(c) != 0)
			out.emplace_back(c, f);
		return;
	}
	it->first += c;
	if (sgn(it->first) == 0)
		out.erase(it);
}

} // namespace

HGTPair::HGTPair(Series f, Series g) : f_(std::move(f)), g_(std::move(g))
{
	if (!(f_.alphabet() == Alphabet::xy()) || !(g_.alphabet() == Alphabet::xy()))
		throw StructuralError("HGT pair: series must be over the alphabet {X, Y}");
	require_same_shape(f_, g_, "HGT pair");
	if (!is_grouplike(f_) || !is_grouplike(g_))
		throw DomainError("HGT pair: both components must be group-like");
}

Series chi(Series const &phi, Series const &psi)
{
	require_same_shape(phi, psi, "chi");
	require_unit_constant(phi, "chi");
	require_unit_constant(psi, "chi");
	return inverse(psi) * phi;
}

bool check_b1(Series const &phi, Series const &psi)
{
	require_same_shape(phi, psi, "B1");
	return inverse(psi) * phi == inverse(phi) * psi;
}

bool is_involution(Series const &c)
{
	return c * c == Series::one(c.alphabet(), c.truncation());
}

bool check_b3(Series const &f, Series const &g, Series const &c)
{
	require_same_shape(f, g, "B3");
	require_same_shape(f, c, "B3");
	return inverse(g) * c * f == inverse(f) * inverse(c) * g;
}

Series b4_residual(Series const &f, Series const &g)
{
	require_same_shape(f, g, "B4");
	return inverse(g) * f - inverse(f) * g;
}

bool check_b4(HGTPair const &p) { return b4_residual(p.f(), p.g()).is_zero(); }

HGTPair swap(HGTPair const &p) { return HGTPair(p.g(), p.f()); }

bool B4Solution::unique() const
{
	if (!feasible())
		return false;
	return std::all_of(degrees.begin(), degrees.end(),
	                   [](B4Degree const &d) { return d.homogeneous.empty(); });
}

B4Solution solve_b4(Series const &f, int truncation)
{
	if (!(f.alphabet() == Alphabet::xy()))
		throw StructuralError("solve_b4: series must be over the alphabet {X, Y}");
	if (truncation > f.truncation())
		throw StructuralError("solve_b4: truncation exceeds that of f");
	if (!is_grouplike(f))
		throw DomainError("solve_b4: f must be group-like");
	auto const alpha = Alphabet::xy();

	B4Solution sol{{}, std::nullopt, Series::one(alpha, truncation)};
	Series log_g(alpha, truncation);
	for (int d = 1; d <= truncation; ++d)
	{
		B4Degree deg;
		deg.degree = d;
		deg.lyndon_words = lyndon_basis(alpha, d);
		auto fd = f.restricted(d);
		auto lower = log_g.restricted(d);
		auto base = b4_residual(fd, exp(lower)).homogeneous(d);

		auto words = words_of_degree(alpha, d);
		Matrix a(words.size(), deg.lyndon_words.size());
		Vector b(words.size());
		for (std::size_t r = 0; r < words.size(); ++r)
			b[r] = -base.coefficient(words[r]);
		for (std::size_t j = 0; j < deg.lyndon_words.size(); ++j)
		{
			auto v = lyndon_bracket_expansion(alpha, d, deg.lyndon_words[j]);
			// the degree-d residual is affine in v, so this difference is exact
			auto col = b4_residual(fd, exp(lower + v)).homogeneous(d) - base;
			for (std::size_t r = 0; r < words.size(); ++r)
				a(r, j) = col.coefficient(words[r]);
		}
		auto solved = solve_affine(a, b);
		deg.particular = solved.particular;
		deg.homogeneous = solved.kernel;
		bool feasible = solved.feasible();
		if (feasible)
		{
			Series step(alpha, truncation);
			for (std::size_t j = 0; j < deg.lyndon_words.size(); ++j)
				step += (*solved.particular)[j] *
				        lyndon_bracket_expansion(alpha, truncation, deg.lyndon_words[j]);
			log_g += step;
		}
		sol.degrees.push_back(std::move(deg));
		if (!feasible)
		{
			sol.infeasible_degree = d;
			return sol;
		}
	}
	sol.g = exp(log_g);
	return sol;
}

HGTCombination::HGTCombination(Scalar c, HGTPair p) { add(c, p); }

void HGTCombination::add(Scalar const &c, HGTPair const &p)
{
	if (!terms_.empty() && terms_.front().second.truncation() != p.truncation())
		throw StructuralError("HGT combination: truncation mismatch");
	auto it = std::find_if(terms_.begin(), terms_.end(), [&](auto const &t) { return t.second == p; });
	if (it == terms_.end())
	{
		if (sgn(c) != 0)
			terms_.emplace_back(c, p);
		return;
	}
	it->first += c;
	if (sgn(it->first) == 0)
		terms_.erase(it);
}

HGTPair compose_pair(HGTPair const &a, HGTPair const &b)
{
	return HGTPair(compose_f(a.f(), b.f()), compose_f(b.g(), a.g()));
}

HGTComposition compose(HGTCombination const &a, HGTCombination const &b)
{
	HGTComposition out;
	for (std::size_t i = 0; i < a.terms().size(); ++i)
		for (std::size_t j = 0; j < b.terms().size(); ++j)
		{
			auto const &[ca, pa] = a.terms()[i];
			auto const &[cb, pb] = b.terms()[j];
			auto p = compose_pair(pa, pb);
			auto residual = b4_residual(p.f(), p.g());
			if (!residual.is_zero())
				out.violations.push_back({i, j, residual});
			out.result.add(ca * cb, p);
		}
	return out;
}

FirstComponents project_first(HGTCombination const &c)
{
	FirstComponents out;
	for (auto const &[coeff, p] : c.terms())
		merge(out, coeff, p.f());
	return out;
}

FirstComponents compose_first(FirstComponents const &a, FirstComponents const &b)
{
	FirstComponents out;
	for (auto const &[ca, fa] : a)
		for (auto const &[cb, fb] : b)
			merge(out, ca * cb, compose_f(fa, fb));
	return out;
}

} // namespace gtalg
