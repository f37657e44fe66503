#pragma once

#include "oracles.hpp"

#include <gtalg/gtrel.hpp>

namespace gtalg::oracle {

/// Affine solution space of the degree-d coefficients of f, found from the
/// public residual functions by finite differences over all 2^d words and a
/// separate elimination.
inline Solve degree_space(Scalar const &lambda, Series const &lower, int d, QuotientAlgebra const &t4)
{
	auto ws = words_of_degree(Alphabet::xy(), d);
	auto residuals = [&](Series const &f) {
		std::vector<Series> r{grouplike_defect(f).homogeneous(d), duality_residual(f).homogeneous(d),
		                      hexagon_residual(lambda, f).homogeneous(d),
		                      pentagon_residual(f, t4).homogeneous(d)};
		return r;
	};
	auto base = residuals(lower);
	std::vector<std::vector<Q>> cols;
	for (auto const &w : ws)
	{
		auto r = residuals(lower + Series::monomial(Alphabet::xy(), lower.truncation(), w));
		std::vector<Q> col;
		for (std::size_t i = 0; i < r.size(); ++i)
		{
			auto diff = r[i] - base[i];
			for (auto const &m : words_of_degree(diff.alphabet(), d))
				col.push_back(diff.coefficient(m));
		}
		cols.push_back(col);
	}
	std::vector<Q> b;
	for (auto const &s : base)
		for (auto const &m : words_of_degree(s.alphabet(), d))
			b.push_back(-s.coefficient(m));
	Rows a(b.size(), std::vector<Q>(ws.size()));
	for (std::size_t j = 0; j < ws.size(); ++j)
		for (std::size_t i = 0; i < b.size(); ++i)
			a[i][j] = cols[j][i];
	return solve(a, b);
}

} // namespace gtalg::oracle
