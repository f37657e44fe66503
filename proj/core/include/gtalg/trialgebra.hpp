#pragma once

#include "gtalg/hopf.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gtalg {

/// Two products sharing one coproduct. The star product is defined only on
/// the basis pairs marked in `star_defined` (empty mask = total) and extends
/// bilinearly: a product of two vectors is defined when every basis product
/// in its expansion is.
struct TrialgebraData
{
	std::vector<std::string> labels;
	Tensor3 star_mult;
	std::vector<std::vector<bool>> star_defined;
	std::optional<Vector> star_unit;
	Tensor3 dot_mult;
	std::optional<Vector> dot_unit;
	Tensor3 comult;
	Vector counit;

	std::size_t dim() const { return labels.size(); }
	bool star_total() const;
	void validate() const;

	friend bool operator==(TrialgebraData const &, TrialgebraData const &) = default;
};

/// Two total products and two coproducts. mult1 pairs with comult1 in the
/// co-interchange law the way the star product pairs with the dot product.
struct QuadraalgebraData
{
	std::vector<std::string> labels;
	Tensor3 mult1;
	std::optional<Vector> unit1;
	Tensor3 mult2;
	std::optional<Vector> unit2;
	Tensor3 comult1;
	Vector counit1;
	Tensor3 comult2;
	Vector counit2;

	std::size_t dim() const { return labels.size(); }
	void validate() const;

	friend bool operator==(QuadraalgebraData const &, QuadraalgebraData const &) = default;
};

/// (A, *, Delta) and (A, ., Delta) bialgebras, star axioms on defined
/// instances only, and the interchange law (a * b) . (c * d) = (a . c) * (b . d)
/// on every basis quadruple where both sides are defined. An axiom with no
/// defined instance is reported as vacuous.
Report check_trialgebra(TrialgebraData const &t);

/// The interchange law alone for total products p_star, p_dot.
AxiomCheck check_interchange(Tensor3 const &star, Tensor3 const &dot,
                             std::vector<std::string> const &labels);

/// (A, ., Delta) quasitriangular with r_dot, (A, *, Delta) coquasitriangular
/// with r_star, and [r_dot, R^] = 0 in (A (x) A, . (x) .), where R^ is r_star
/// carried into A (x) A through the pairing: R^ = P^-T r_star P^-1.
/// Throws DomainError for a degenerate pairing or a partial star product.
Report check_biquasitriangular(TrialgebraData const &t, RMatrix const &r_dot,
                               CoquasiForm const &r_star, Matrix const &pairing);

/// The lift R^ used by check_biquasitriangular.
RMatrix lift_form(CoquasiForm const &r_star, Matrix const &pairing);

/// Trialgebra checks for both coproducts with both product orders, and the
/// co-interchange (Delta1 (x) Delta1) Delta2 = (id (x) tau (x) id)(Delta2 (x) Delta2) Delta1.
Report check_quadraalgebra(QuadraalgebraData const &q);

/// The trialgebra obtained from q by choosing a coproduct (1 or 2) and
/// which product plays the star role (1 or 2).
TrialgebraData quadra_component(QuadraalgebraData const &q, int coproduct, int star);

struct EckmannHiltonReport
{
	bool units_equal = false;
	bool products_equal = false;
	bool commutative = false;
	/// First failing basis index tuple for each conclusion, empty when it holds.
	std::vector<std::size_t> unit_witness;
	std::vector<std::size_t> product_witness;
	std::vector<std::size_t> commutativity_witness;

	bool collapsed() const { return units_equal && products_equal && commutative; }
};

/// Verifies the interchange law for (p1, p2) and that u1, u2 are two-sided
/// units (HypothesisError otherwise), then checks the Eckmann-Hilton
/// conclusions u1 = u2, p1 = p2 and commutativity, exhaustively.
EckmannHiltonReport eckmann_hilton(Tensor3 const &p1, Tensor3 const &p2, Vector const &u1,
                                   Vector const &u2);

} // namespace gtalg
