#pragma once

#include "gtalg/linalg.hpp"
#include "gtalg/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gtalg {

/// Finite-dimensional bialgebra given by structure constants in a basis e_0..e_{n-1}:
///   e_i e_j = sum_k mult(i, j, k) e_k,   1 = sum_i unit[i] e_i,
///   Delta(e_i) = sum_{j,k} comult(i, j, k) e_j (x) e_k,   eps(e_i) = counit[i],
///   S(e_i) = sum_j antipode(i, j) e_j.
struct HopfData
{
	std::vector<std::string> labels;
	Tensor3 mult;
	Vector unit;
	Tensor3 comult;
	Vector counit;
	std::optional<Matrix> antipode;

	std::size_t dim() const { return labels.size(); }
	/// Throws StructuralError when a tensor does not match the basis size.
	void validate() const;

	friend bool operator==(HopfData const &, HopfData const &) = default;
};

/// Element sum R(a, b) e_a (x) e_b of H (x) H.
using RMatrix = Matrix;
/// Bilinear form r(e_a, e_b) = r(a, b) on H.
using CoquasiForm = Matrix;

/// Associativity, unit, coassociativity, counit, and Delta, eps being algebra maps.
Report check_bialgebra(HopfData const &h);
/// The two antipode equations m (S (x) id) Delta = eta eps = m (id (x) S) Delta.
Report check_antipode(HopfData const &h, Matrix const &s);
/// check_bialgebra plus the antipode equations for the supplied antipode, or
/// an "antipode exists" entry when none is supplied.
Report check_hopf(HopfData const &h);

/// The convolution inverse of the identity, or nullopt if the bialgebra is not Hopf.
std::optional<Matrix> solve_antipode(HopfData const &h);

/// Product in H (x) H.
RMatrix tensor_multiply(HopfData const &h, RMatrix const &a, RMatrix const &b);
/// Inverse in H (x) H, or nullopt.
std::optional<RMatrix> tensor_inverse(HopfData const &h, RMatrix const &r);

/// R invertible, R Delta(a) = Delta^op(a) R, (Delta (x) id) R = R13 R23,
/// (id (x) Delta) R = R13 R12.
Report check_quasitriangular(HopfData const &h, RMatrix const &r);
/// r convolution invertible, r(a1, b1) a2 b2 = b1 a1 r(a2, b2),
/// r(ab, c) = r(a, c1) r(b, c2), r(a, bc) = r(a1, c) r(a2, b).
Report check_coquasitriangular(HopfData const &h, CoquasiForm const &r);

/// H* in the dual basis: products and coproducts transpose into each other,
/// unit and counit swap, the antipode is transposed. A label gains a
/// trailing `*`, or loses it, so dual_hopf is an involution.
HopfData dual_hopf(HopfData const &h);

struct DrinfeldDouble
{
	HopfData algebra;
	/// sum_i (eps # e_i) (x) (e^i # 1).
	RMatrix r;
};

/// D(H) on H*^cop (x) H with basis e^a # e_b at index a * n + b and product
///   (f # h)(f' # h') = f f'(S^-1(h3) - h1) # h2 h'.
/// Throws DomainError if H has no invertible antipode.
DrinfeldDouble drinfeld_double(HopfData const &h);

/// Hopf pairing p(a, b) = <e_a, e_b> between H and itself: nondegenerate,
/// <ab, c> = <a, c1><b, c2>, <a, bc> = <a1, b><a2, c>, <1, c> = eps(c), <a, 1> = eps(a).
Report check_hopf_pairing(HopfData const &h, Matrix const &pairing);
bool check_selfdual(HopfData const &h, Matrix const &pairing);

} // namespace gtalg
