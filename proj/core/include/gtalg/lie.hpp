#pragma once

#include "gtalg/series.hpp"

#include <map>
#include <utility>
#include <vector>

namespace gtalg {

/// Lyndon words of exact degree d, in lexicographic order.
std::vector<Monomial> lyndon_basis(Alphabet const &alphabet, int d);

bool is_lyndon(Monomial const &w);

/// w = uv with v the longest proper Lyndon suffix (u is then Lyndon too).
std::pair<Monomial, Monomial> standard_factorization(Alphabet const &alphabet, Monomial const &w);

/// Expansion of the standard bracketing of a Lyndon word w = uv, where v is
/// the longest proper Lyndon suffix: P(w) = [P(u), P(v)]. The expansion has
/// leading word w with coefficient 1; all other words are lexicographically
/// larger.
Series lyndon_bracket_expansion(Alphabet const &alphabet, int truncation, Monomial const &w);

/// Element of the free Lie algebra in Lyndon coordinates, truncated at
/// degree N. Keys are Lyndon words, ordered by (degree, lexicographic).
class LieElement
{
public:
	using Coordinates = std::map<Monomial, Scalar>;

	LieElement(Alphabet alphabet, int truncation);
	static LieElement generator(Alphabet alphabet, int truncation, std::size_t i);
	/// Throws StructuralError if a key is not a Lyndon word of degree <= N.
	static LieElement from_coordinates(Alphabet alphabet, int truncation, Coordinates coords);

	Alphabet const &alphabet() const { return alphabet_; }
	int truncation() const { return truncation_; }
	Coordinates const &coordinates() const { return coords_; }
	bool is_zero() const { return coords_.empty(); }
	Scalar coordinate(Monomial const &w) const;

	LieElement &operator+=(LieElement const &other);
	LieElement &operator-=(LieElement const &other);
	LieElement &operator*=(Scalar const &c);

	friend LieElement operator+(LieElement a, LieElement const &b) { return a += b; }
	friend LieElement operator-(LieElement a, LieElement const &b) { return a -= b; }
	friend LieElement operator-(LieElement a) { return a *= Scalar(-1); }
	friend LieElement operator*(Scalar const &c, LieElement a) { return a *= c; }
	friend bool operator==(LieElement const &, LieElement const &) = default;

private:
	void set(Monomial const &w, Scalar const &c);
	void check_compatible(LieElement const &other) const;

	Alphabet alphabet_;
	int truncation_;
	Coordinates coords_;
};

/// The associative series sum c_w P(w).
Series embed_lie(LieElement const &a);
/// Lyndon coordinates of a primitive series; DomainError otherwise.
LieElement project_lie(Series const &a);
/// [a, b] in Lyndon coordinates, truncated at N.
LieElement lie_bracket(LieElement const &a, LieElement const &b);

} // namespace gtalg
