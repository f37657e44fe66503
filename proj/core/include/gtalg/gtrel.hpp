#pragma once

#include "gtalg/linalg.hpp"
#include "gtalg/quotient.hpp"
#include "gtalg/series.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace gtalg {

/// A pair (lambda, f) with f a group-like series in X, Y at truncation N.
///
/// f is read as an element of the pro-unipotent completion of the free
/// group on x = exp(X), y = exp(Y); evaluating f at group elements u, v
/// substitutes X -> log u, Y -> log v.
class GTElement
{
public:
	/// Throws DomainError unless f is group-like over the alphabet {X, Y}.
	GTElement(Scalar lambda, Series f);

	static GTElement identity(int truncation);

	Scalar const &lambda() const { return lambda_; }
	Series const &f() const { return f_; }
	int truncation() const { return f_.truncation(); }

	friend bool operator==(GTElement const &, GTElement const &) = default;

private:
	Scalar lambda_;
	Series f_;
};

/// Verdict on one defining relation. `residual` is the exact defect
/// (reduced in the Drinfeld-Kohno quotient for the pentagon).
struct RelationReport
{
	std::string relation;
	int truncation = 0;
	bool holds = false;
	std::optional<int> first_failing_degree;
	Series residual;
};

RelationReport make_relation_report(std::string relation, Series residual);

/// f(X, Y) f(Y, X) - 1.
Series duality_residual(Series const &f);

/// f(x3, x1) x3^m f(x2, x3) x2^m f(x1, x2) x1^m - 1 with x1 = exp(X),
/// x2 = exp(Y), x3 = (x1 x2)^-1 and m = (lambda - 1) / 2.
Series hexagon_residual(Scalar const &lambda, Series const &f);

/// The quotient U(t4) at truncation N that hosts the pentagon.
QuotientAlgebra pentagon_quotient(int truncation);

/// f(t12, t23 + t24) f(t13 + t23, t34)
///   - f(t23, t34) f(t12 + t13, t24 + t34) f(t12, t23), reduced in U(t4).
Series pentagon_residual(Series const &f, QuotientAlgebra const &t4);

RelationReport check_duality(GTElement const &e);
RelationReport check_hexagon(GTElement const &e);
RelationReport check_pentagon(GTElement const &e);
RelationReport check_pentagon(GTElement const &e, QuotientAlgebra const &t4);

/// f1(f2 x^lambda2 f2^-1, y^lambda2) f2, the second component of the
/// composite (lambda1, f1) o (lambda2, f2).
Series compose_f(Series const &f1, Series const &f2, Scalar const &lambda2 = 1);

/// (lambda1 lambda2, compose_f(f1, f2, lambda2)).
GTElement gt_compose(GTElement const &a, GTElement const &b);

/// Affine solution space of the degree-d coefficients of f, in the
/// coordinates `words` (all words of degree d in X, Y).
struct DegreeSolution
{
	int degree = 0;
	std::vector<Monomial> words;
	std::optional<Vector> particular;
	std::vector<Vector> homogeneous;
	/// Coefficient vector used to extend f (particular + chosen combination).
	Vector chosen;

	bool feasible() const { return particular.has_value(); }
};

struct SolveOptions
{
	int max_degree = 5;
	/// Coefficients of the homogeneous basis used to extend f at each degree
	/// (argument: degree, kernel dimension). Defaults to all zeros.
	std::function<Vector(int degree, std::size_t dim)> choose;
};

struct RelationSolution
{
	Scalar lambda;
	int truncation = 0;
	std::vector<DegreeSolution> degrees;
	std::optional<int> infeasible_degree;
	/// The extension assembled from the chosen coefficients; valid modulo
	/// the degree after the last feasible one.
	Series f;

	bool feasible() const { return !infeasible_degree.has_value(); }
};

/// Degree-by-degree solve of group-likeness, duality, hexagon and pentagon.
/// At degree d the unknowns are the 2^d coefficients of f in degree d; every
/// relation is affine in them once the lower-degree part is fixed.
/// An infeasible degree ends the solve with an empty affine space.
RelationSolution solve_relations(Scalar const &lambda, int truncation,
                                 SolveOptions const &options = {});

/// Degree-d part of the linearization of each relation at a homogeneous
/// degree-d perturbation v (constant terms of the factors are 1).
Series grouplike_linear_part(Series const &v);
Series duality_linear_part(Series const &v);
Series hexagon_linear_part(Series const &v);
Series pentagon_linear_part(Series const &v, QuotientAlgebra const &t4);

} // namespace gtalg
