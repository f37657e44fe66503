#pragma once

#include "gtalg/lie.hpp"
#include "gtalg/linalg.hpp"

#include <map>
#include <string>
#include <vector>

namespace gtalg {

/// The derivation D_f of the free Lie algebra on x, y with D_f(x) = 0, D_f(y) = [y, f].
LieElement ihara_derivation(LieElement const &f, LieElement const &a);

/// {f, g} = D_f(g) - D_g(f) + [f, g], truncated at N. Both arguments must live
/// on the same two-letter alphabet (first letter x, second y) and truncation.
LieElement ihara_bracket(LieElement const &f, LieElement const &g);

enum class B5Bracket
{
	ihara,
	plain,
};

/// {f, h} = 0 (or [f, h] = 0 with B5Bracket::plain) at the truncation.
bool check_b5(LieElement const &f, LieElement const &h, B5Bracket bracket = B5Bracket::ihara);

/// Polynomial in the coordinate functions xi_0..xi_{m-1} on the dual of a Lie
/// algebra. Keys are exponent vectors; no zero coefficients are stored.
class PolyFunction
{
public:
	using Exponents = std::vector<unsigned>;
	using Terms = std::map<Exponents, Scalar>;

	explicit PolyFunction(std::size_t variables);
	static PolyFunction constant(std::size_t variables, Scalar c);
	static PolyFunction coordinate(std::size_t variables, std::size_t i);

	std::size_t variables() const { return variables_; }
	Terms const &terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }
	/// Highest total degree; 0 for constants and the zero polynomial.
	unsigned degree() const;

	void add_term(Exponents const &e, Scalar const &c);
	PolyFunction derivative(std::size_t i) const;

	PolyFunction &operator+=(PolyFunction const &other);
	PolyFunction &operator-=(PolyFunction const &other);
	PolyFunction &operator*=(Scalar const &c);

	friend PolyFunction operator+(PolyFunction a, PolyFunction const &b) { return a += b; }
	friend PolyFunction operator-(PolyFunction a, PolyFunction const &b) { return a -= b; }
	friend PolyFunction operator*(Scalar const &c, PolyFunction a) { return a *= c; }
	friend PolyFunction operator*(PolyFunction const &a, PolyFunction const &b);
	friend bool operator==(PolyFunction const &, PolyFunction const &) = default;

private:
	void check_compatible(PolyFunction const &other) const;

	std::size_t variables_;
	Terms terms_;
};

/// `3/2 * h^2 + 2 * e*f`, variables named by `names`; `0` for zero.
std::string format_poly(PolyFunction const &p, std::vector<std::string> const &names);

/// Lie algebra [e_i, e_j] = sum_k c(i, j, k) e_k with an invariant symmetric
/// nondegenerate form. Construction verifies antisymmetry, Jacobi, symmetry,
/// nondegeneracy and invariance <[a, b], c> = <a, [b, c]> on all basis
/// tuples, throwing DomainError with the failing axiom otherwise.
class MetrizedLieAlgebra
{
public:
	MetrizedLieAlgebra(std::vector<std::string> labels, Tensor3 structure, Matrix metric);

	std::size_t dim() const { return labels_.size(); }
	std::vector<std::string> const &labels() const { return labels_; }
	Tensor3 const &structure() const { return c_; }
	Matrix const &metric() const { return metric_; }

	/// [a, b] for elements with polynomial coordinates.
	std::vector<PolyFunction> bracket(std::vector<PolyFunction> const &a,
	                                  std::vector<PolyFunction> const &b) const;

	friend bool operator==(MetrizedLieAlgebra const &, MetrizedLieAlgebra const &) = default;

private:
	std::vector<std::string> labels_;
	Tensor3 c_;
	Matrix metric_;
};

/// Lie-Poisson bracket {F, G}(xi) = sum c(i, j, k) xi_k dF/dxi_i dG/dxi_j.
PolyFunction kirillov_bracket(PolyFunction const &f, PolyFunction const &g,
                              MetrizedLieAlgebra const &lie);

/// sum (metric^-1)_{ij} xi_i xi_j, Poisson-central.
PolyFunction casimir(MetrizedLieAlgebra const &lie);

/// A map from the dual space into g: the element sum_k a[k](xi) e_k.
using Assignment = std::vector<PolyFunction>;

/// xi -> sum_k xi_k e_k.
Assignment coordinate_assignment(MetrizedLieAlgebra const &lie);
/// xi -> the element metric-dual to xi, sum_{j,k} (metric^-1)_{jk} xi_j e_k.
Assignment metric_dual_assignment(MetrizedLieAlgebra const &lie);
/// xi -> the constant element e_i.
Assignment constant_assignment(MetrizedLieAlgebra const &lie, std::size_t i);

/// f_g(xi) = <xi, f(a(xi), b(xi))>: substitutes x -> a, y -> b into the
/// bracketed Lyndon expansion of f using the bracket of g, then applies xi,
/// i.e. sum_k xi_k f(a, b)_k.
PolyFunction evaluate_on_g(LieElement const &f, MetrizedLieAlgebra const &lie, Assignment const &a,
                           Assignment const &b);

/// {f_g, h_g} = 0.
bool check_b5_evaluated(LieElement const &f, LieElement const &h, MetrizedLieAlgebra const &lie,
                        Assignment const &a, Assignment const &b);

} // namespace gtalg
