#pragma once

#include "gtalg/series.hpp"

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace gtalg {

/// Truncated quotient of the free associative algebra by the two-sided
/// ideal generated by homogeneous relators.
///
/// Each degree component of the ideal is held as a reduced echelon basis
/// over the words of that degree (pivot = lexicographically largest word),
/// so the normal form of a series is the unique representative supported
/// on non-pivot words.
class QuotientAlgebra
{
public:
	Alphabet const &alphabet() const { return alphabet_; }
	int truncation() const { return truncation_; }
	std::vector<Series> const &relators() const { return relators_; }

	/// Normal form of a modulo the ideal. Linear, idempotent, kills the ideal.
	/// The ideal is graded, so a series truncated at M <= N reduces exactly;
	/// the result keeps the input's truncation.
	Series reduce(Series const &a) const;

	/// Number of words of degree d.
	std::size_t free_dimension(int d) const;
	/// Dimension of the degree-d part of the ideal.
	std::size_t ideal_dimension(int d) const;
	/// Dimension of the degree-d part of the quotient.
	std::size_t graded_dimension(int d) const;
	/// The reduced echelon basis of the ideal in degree d.
	std::vector<Series> ideal_basis(int d) const;

	friend QuotientAlgebra build_quotient(Alphabet alphabet, std::vector<Series> relators,
	                                      int truncation);

private:
	using SparseRow = std::vector<std::pair<std::uint32_t, Scalar>>;

	struct Component
	{
		std::vector<Monomial> words;
		std::map<Monomial, std::uint32_t> column;
		std::vector<SparseRow> rows;
		std::map<std::uint32_t, std::size_t> pivot_row;

		void reduce(std::map<std::uint32_t, Scalar> &work) const;
		bool insert(std::map<std::uint32_t, Scalar> work);
		void interreduce();
	};

	QuotientAlgebra(Alphabet alphabet, std::vector<Series> relators, int truncation);

	Alphabet alphabet_;
	int truncation_;
	std::vector<Series> relators_;
	std::vector<Component> components_;
};

/// Builds the quotient by brute-force spanning and row reduction per
/// degree: the degree-d part of the ideal is spanned by the degree-d
/// relators together with g * b and b * g for generators g and basis
/// elements b of the lower-degree ideal components. Inhomogeneous relators
/// are a StructuralError.
QuotientAlgebra build_quotient(Alphabet alphabet, std::vector<Series> relators, int truncation);

/// Generators t_ij (1 <= i < j <= n) of the Drinfeld-Kohno algebra, in
/// lexicographic order of (i, j).
Alphabet drinfeld_kohno_alphabet(int n);
/// Infinitesimal braid relators: [t_ij, t_kl] for disjoint pairs, and for
/// each triple i < j < k the three relators [t_ij, t_ik + t_jk],
/// [t_ik, t_ij + t_jk], [t_jk, t_ij + t_ik].
std::vector<Series> drinfeld_kohno_relators(int n, int truncation);
/// Generator t_ij (order of i, j irrelevant).
Series drinfeld_kohno_generator(int n, int truncation, int i, int j);

} // namespace gtalg
