#pragma once

#include "gtalg/scalar.hpp"

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gtalg {

/// Ordered set of generator symbols with positive integer degrees.
class Alphabet
{
public:
	/// Degrees default to 1. Throws StructuralError on an empty or
	/// duplicated name list or a non-positive degree.
	explicit Alphabet(std::vector<std::string> names, std::vector<int> degrees = {});

	/// The alphabet {X, Y} of the free group on two generators.
	static Alphabet xy();

	std::size_t size() const { return names_.size(); }
	std::string const &name(std::size_t i) const { return names_.at(i); }
	int degree(std::size_t i) const { return degrees_.at(i); }
	std::vector<std::string> const &names() const { return names_; }
	std::vector<int> const &degrees() const { return degrees_; }

	std::optional<std::size_t> find(std::string_view name) const;
	/// Like find(), but throws StructuralError for an unknown name.
	std::size_t index(std::string_view name) const;

	friend bool operator==(Alphabet const &, Alphabet const &) = default;

private:
	std::vector<std::string> names_;
	std::vector<int> degrees_;
};

/// A word in the generators of an Alphabet, ordered degree-lexicographically.
///
/// Letters are stored as the bytes of a std::string so that the short words
/// typical at desk-scale truncation stay in the small-string buffer.
class Monomial
{
public:
	Monomial() = default;
	Monomial(Alphabet const &alphabet, std::vector<std::size_t> const &letters);
	Monomial(Alphabet const &alphabet, std::initializer_list<std::size_t> letters);

	int degree() const { return degree_; }
	std::size_t length() const { return letters_.size(); }
	bool empty() const { return letters_.empty(); }
	std::size_t operator[](std::size_t i) const
	{
		return static_cast<unsigned char>(letters_[i]);
	}
	std::vector<std::size_t> letters() const;

	/// Sub-word [pos, pos + len).
	Monomial slice(Alphabet const &alphabet, std::size_t pos, std::size_t len) const;

	friend Monomial operator*(Monomial const &a, Monomial const &b);
	friend auto operator<=>(Monomial const &, Monomial const &) = default;
	friend bool operator==(Monomial const &, Monomial const &) = default;

private:
	int degree_ = 0;
	std::string letters_;
};

/// `X.Y.X`, or `1` for the empty word.
std::string format_monomial(Alphabet const &alphabet, Monomial const &m);
/// Inverse of format_monomial; the empty string is also accepted for the
/// empty word. Throws std::invalid_argument on unknown generators.
Monomial parse_monomial(Alphabet const &alphabet, std::string_view text);

/// All words of exact degree d, in lexicographic order.
std::vector<Monomial> words_of_degree(Alphabet const &alphabet, int d);

/// Noncommutative power series over the rationals, truncated at a fixed
/// degree N: every product discards monomials of degree > N. Mixing
/// alphabets or truncations is a StructuralError, never a silent re-truncation.
class Series
{
public:
	using Terms = std::map<Monomial, Scalar>;

	Series(Alphabet alphabet, int truncation);

	static Series constant(Alphabet alphabet, int truncation, Scalar c);
	static Series one(Alphabet alphabet, int truncation);
	static Series generator(Alphabet alphabet, int truncation, std::size_t i);
	static Series generator(Alphabet alphabet, int truncation, std::string_view name);
	static Series monomial(Alphabet alphabet, int truncation, Monomial m, Scalar c = 1);
	/// Throws StructuralError if a term exceeds the truncation degree.
	static Series from_terms(Alphabet alphabet, int truncation, Terms terms);

	Alphabet const &alphabet() const { return alphabet_; }
	int truncation() const { return truncation_; }
	Terms const &terms() const { return terms_; }

	Scalar coefficient(Monomial const &m) const;
	Scalar constant_term() const;
	bool is_zero() const { return terms_.empty(); }
	std::size_t size() const { return terms_.size(); }

	/// Accumulates c into the coefficient of m; terms above the truncation
	/// degree are dropped.
	void add_term(Monomial const &m, Scalar const &c);

	/// Degree-d component, same truncation.
	Series homogeneous(int d) const;
	/// Lowest degree carrying a nonzero coefficient.
	std::optional<int> min_degree() const;
	/// The same series viewed at a smaller truncation M <= N.
	Series restricted(int truncation) const;

	Series &operator+=(Series const &other);
	Series &operator-=(Series const &other);
	Series &operator*=(Scalar const &c);

	friend Series operator+(Series a, Series const &b) { return a += b; }
	friend Series operator-(Series a, Series const &b) { return a -= b; }
	friend Series operator-(Series a) { return a *= Scalar(-1); }
	friend Series operator*(Series a, Scalar const &c) { return a *= c; }
	friend Series operator*(Scalar const &c, Series a) { return a *= c; }
	friend Series operator*(Series const &a, Series const &b);
	friend bool operator==(Series const &, Series const &) = default;

private:
	void check_compatible(Series const &other, char const *op) const;

	Alphabet alphabet_;
	int truncation_;
	Terms terms_;
};

Series commutator(Series const &a, Series const &b);

/// Truncated exponential; the argument must have zero constant term.
Series exp(Series const &a);
/// Truncated logarithm; the argument must have constant term 1.
Series log(Series const &a);
/// Multiplicative inverse by the geometric series; needs a nonzero constant term.
Series inverse(Series const &a);
/// a^m = exp(m log a) for a series with constant term 1 and rational m.
Series power(Series const &a, Scalar const &m);

/// Homomorphic extension of generator i -> images[i], truncated at the
/// images' common truncation. The images must share one alphabet and
/// truncation; a missing image is a StructuralError.
///
/// The substitution is a plain polynomial evaluation of the truncated f.
/// To evaluate a group-like f at group-like arguments u, v (the group
/// variables of the free group) pass their logarithms, which have zero
/// constant term; see substitute_group().
Series substitute(Series const &f, std::vector<Series> const &images);
Series substitute_named(Series const &f, std::map<std::string, Series> const &assignment);
/// f(u, v, ...) for group-like arguments: substitutes log of each argument.
Series substitute_group(Series const &f, std::vector<Series> const &group_args);

/// The alphabet {g', ..., g''...} hosting H (x) H: a word in the doubled
/// alphabet is kept in the normal form (primed letters)(double-primed letters).
Alphabet doubled(Alphabet const &alphabet);
/// a (x) b as a series over the doubled alphabet.
Series tensor(Series const &a, Series const &b);
/// The algebra map g -> g' + g'' (every generator primitive).
Series coproduct(Series const &f);
/// coproduct(f) - f (x) f.
Series grouplike_defect(Series const &f);
bool is_grouplike(Series const &f);
bool is_primitive(Series const &a);

/// Freely reduced word in a free group. Letters are signed, 1-based
/// generator indices: +k is generator k-1, -k its inverse.
class FreeWord
{
public:
	FreeWord() = default;
	explicit FreeWord(std::vector<int> letters);

	std::vector<int> const &letters() const { return letters_; }
	bool empty() const { return letters_.empty(); }
	FreeWord inverse() const;

	friend FreeWord operator*(FreeWord const &a, FreeWord const &b);
	friend bool operator==(FreeWord const &, FreeWord const &) = default;

private:
	std::vector<int> letters_;
};

/// Tokens `x y xi yi` (generator names in lower case, `i` marks an inverse).
FreeWord parse_free_word(std::string_view text, std::vector<std::string> const &names = {"x", "y"});
std::string format_free_word(FreeWord const &w, std::vector<std::string> const &names = {"x", "y"});

/// Magnus embedding: generator k -> exp(k-th generator of the alphabet).
Series magnus(FreeWord const &w, Alphabet const &alphabet, int truncation);

/// Report serialization: one line per monomial, `coeff * g1.g2.g3`,
/// degree-lex order; `0` for the zero series.
std::string format_series(Series const &s);

} // namespace gtalg
