#pragma once

// Sparse contraction machinery shared by the Hopf and trialgebra checkers.
// An element of H^(x r) is a map from index tuples to nonzero scalars.

#include "gtalg/linalg.hpp"
#include "gtalg/report.hpp"

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace gtalg::detail {

using Key = std::vector<std::size_t>;
using Poly = std::map<Key, Scalar>;

void accumulate(Poly &p, Key const &k, Scalar const &c);
Poly basis(std::size_t i);
Poly scaled(Poly p, Scalar const &c);
Poly difference(Poly const &a, Poly const &b);
Poly from_vector(Vector const &v);
Poly from_matrix(Matrix const &m);
Matrix to_matrix(Poly const &p, std::size_t n);

/// Basis-pair mask for a partial product; empty means total.
using Mask = std::vector<std::vector<bool>>;

class ProductView
{
public:
	ProductView(Tensor3 const &mult, Mask mask = {});

	std::size_t dim() const { return n_; }
	bool defined(std::size_t i, std::size_t j) const { return mask_.empty() || mask_[i][j]; }
	bool total() const;
	std::vector<std::pair<std::size_t, Scalar>> const &product(std::size_t i, std::size_t j) const
	{
		return nz_[i * n_ + j];
	}

	/// Componentwise product in H^(x r); nullopt if a needed basis product is undefined.
	std::optional<Poly> mul(Poly const &a, Poly const &b) const;
	/// Same as mul, for a product known to be total.
	Poly mul_total(Poly const &a, Poly const &b) const;

private:
	std::size_t n_;
	Mask mask_;
	std::vector<std::vector<std::pair<std::size_t, Scalar>>> nz_;
};

class CoproductView
{
public:
	explicit CoproductView(Tensor3 const &comult);

	std::size_t dim() const { return n_; }
	std::vector<std::tuple<std::size_t, std::size_t, Scalar>> const &of(std::size_t i) const
	{
		return nz_[i];
	}
	/// Applies the coproduct to tensor slot `slot` of p (p in H^(x r) -> H^(x r+1)).
	Poly apply(Poly const &p, std::size_t slot) const;

private:
	std::size_t n_;
	std::vector<std::vector<std::tuple<std::size_t, std::size_t, Scalar>>> nz_;
};

/// Swaps slots a and b of every key.
Poly permuted(Poly const &p, std::vector<std::size_t> const &order);
/// Scalar value of a linear functional (vector) on slot `slot`, contracting it away.
Poly contract(Poly const &p, std::size_t slot, Vector const &functional);

std::string describe(Poly const &diff, std::vector<std::string> const &labels);

AxiomCheck associativity(ProductView const &m, std::vector<std::string> const &labels);
AxiomCheck unit_law(ProductView const &m, Vector const &unit, std::vector<std::string> const &labels);
AxiomCheck coassociativity(CoproductView const &d, std::vector<std::string> const &labels);
AxiomCheck counit_law(CoproductView const &d, Vector const &counit,
                      std::vector<std::string> const &labels);
AxiomCheck comult_multiplicative(ProductView const &m, CoproductView const &d,
                                 std::vector<std::string> const &labels);
AxiomCheck counit_multiplicative(ProductView const &m, Vector const &counit,
                                 std::vector<std::string> const &labels);
AxiomCheck comult_unital(CoproductView const &d, Vector const &unit,
                         std::vector<std::string> const &labels);
AxiomCheck counit_unital(Vector const &counit, Vector const &unit);

/// Bialgebra axioms for a (possibly partial) product with a total coproduct.
/// The unit axioms are skipped when `unit` is null.
Report bialgebra_axioms(ProductView const &m, Vector const *unit, CoproductView const &d,
                        Vector const &counit, std::vector<std::string> const &labels);

} // namespace gtalg::detail
