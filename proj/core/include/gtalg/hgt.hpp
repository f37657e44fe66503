#pragma once

#include "gtalg/linalg.hpp"
#include "gtalg/series.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace gtalg {

/// A pair (f, g^) of group-like series in X, Y at one truncation. The second
/// component is always read as the dualized element; only the composition
/// law below distinguishes it from the first.
class HGTPair
{
public:
	/// Throws StructuralError on a foreign alphabet or a truncation mismatch,
	/// DomainError unless both are group-like.
	HGTPair(Series f, Series g);

	Series const &f() const { return f_; }
	Series const &g() const { return g_; }
	int truncation() const { return f_.truncation(); }

	friend bool operator==(HGTPair const &, HGTPair const &) = default;

private:
	Series f_;
	Series g_;
};

/// psi^-1 phi. DomainError when a constant term differs from 1.
Series chi(Series const &phi, Series const &psi);
/// psi^-1 phi = phi^-1 psi.
bool check_b1(Series const &phi, Series const &psi);
/// chi^2 = 1 at the truncation.
bool is_involution(Series const &chi);
/// g^-1 chi f = f^-1 chi^-1 g.
bool check_b3(Series const &f, Series const &g, Series const &chi);
/// g^-1 f = f^-1 g.
bool check_b4(HGTPair const &p);
/// g^-1 f - f^-1 g.
Series b4_residual(Series const &f, Series const &g);
HGTPair swap(HGTPair const &p);

/// Affine solution space for the degree-d Lyndon coordinates of log g.
struct B4Degree
{
	int degree = 0;
	std::vector<Monomial> lyndon_words;
	std::optional<Vector> particular;
	std::vector<Vector> homogeneous;
};

struct B4Solution
{
	std::vector<B4Degree> degrees;
	std::optional<int> infeasible_degree;
	/// The solution assembled from the particular solutions (free directions
	/// set to zero); meaningful when feasible.
	Series g;

	bool feasible() const { return !infeasible_degree.has_value(); }
	/// Feasible with no free direction in any degree.
	bool unique() const;
};

/// All g with g^-1 f = f^-1 g at truncation N (N <= f's truncation), solved
/// degree by degree for log g in Lyndon coordinates. The degree-d equation is
/// affine once lower degrees are fixed; its linear part is read off from the
/// exact residual change under each basis perturbation.
B4Solution solve_b4(Series const &f, int truncation);

/// Formal linear combination of pairs. Equal pairs are merged and zero
/// coefficients dropped, so the term list is canonical up to order.
class HGTCombination
{
public:
	HGTCombination() = default;
	HGTCombination(Scalar c, HGTPair p);

	std::vector<std::pair<Scalar, HGTPair>> const &terms() const { return terms_; }
	void add(Scalar const &c, HGTPair const &p);

private:
	std::vector<std::pair<Scalar, HGTPair>> terms_;
};

/// (f1, g1) (f2, g2) = (f1 o f2, g2 o g1), with o the GT composition at
/// lambda = 1: the second component uses the opposite law.
HGTPair compose_pair(HGTPair const &a, HGTPair const &b);

struct ClosureViolation
{
	std::size_t left;
	std::size_t right;
	Series residual;
};

struct HGTComposition
{
	HGTCombination result;
	/// Term-index pairs whose composite fails (B4).
	std::vector<ClosureViolation> violations;
};

/// Bilinear extension of compose_pair; every composite is re-checked for (B4).
HGTComposition compose(HGTCombination const &a, HGTCombination const &b);

/// Formal combination of first components.
using FirstComponents = std::vector<std::pair<Scalar, Series>>;

/// Drops the second components; merges equal first components.
FirstComponents project_first(HGTCombination const &c);
/// Product of formal combinations under the GT composition at lambda = 1.
FirstComponents compose_first(FirstComponents const &a, FirstComponents const &b);

} // namespace gtalg
