#include "gtalg/lie.hpp"

#include "gtalg/errors.hpp"

#include <algorithm>

namespace gtalg {

bool is_lyndon(Monomial const &w)
{
	// strictly smaller than every proper rotation
	std::size_t const n = w.length();
	if (n == 0)
		return false;
	auto letters = w.letters();
	for (std::size_t r = 1; r < n; ++r)
	{
		bool smaller_or_equal = false;
		for (std::size_t i = 0; i < n; ++i)
		{
			auto a = letters[i];
			auto b = letters[(i + r) % n];
			if (a != b)
			{
				smaller_or_equal = b < a;
				break;
			}
			if (i + 1 == n)
				smaller_or_equal = true;
		}
		if (smaller_or_equal)
			return false;
	}
	return true;
}

std::vector<Monomial> lyndon_basis(Alphabet const &alphabet, int d)
{
	std::vector<Monomial> out;
	if (d <= 0)
		return out;
	// Duval's generation of all Lyndon words of length <= d, filtered by degree
	std::size_t const k = alphabet.size();
	std::vector<std::size_t> w{0};
	auto const max_len = static_cast<std::size_t>(d);
	while (!w.empty())
	{
		Monomial m(alphabet, w);
		if (m.degree() == d)
			out.push_back(std::move(m));
		std::size_t const n = w.size();
		while (w.size() < max_len)
			w.push_back(w[w.size() - n]);
		while (!w.empty() && w.back() == k - 1)
			w.pop_back();
		if (!w.empty())
			++w.back();
	}
	std::sort(out.begin(), out.end());
	return out;
}

std::pair<Monomial, Monomial> standard_factorization(Alphabet const &alphabet, Monomial const &w)
{
	if (w.length() < 2)
		throw DomainError("standard factorization needs a word of length at least 2");
	std::size_t split = 1;
	while (split < w.length() && !is_lyndon(w.slice(alphabet, split, w.length() - split)))
		++split;
	return {w.slice(alphabet, 0, split), w.slice(alphabet, split, w.length() - split)};
}

Series lyndon_bracket_expansion(Alphabet const &alphabet, int truncation, Monomial const &w)
{
	if (w.length() == 1)
		return Series::monomial(alphabet, truncation, w);
	auto [u, v] = standard_factorization(alphabet, w);
	return commutator(lyndon_bracket_expansion(alphabet, truncation, u),
	                  lyndon_bracket_expansion(alphabet, truncation, v));
}

// -------------------------------------------------------------- LieElement

LieElement::LieElement(Alphabet alphabet, int truncation)
    : alphabet_(std::move(alphabet)), truncation_(truncation)
{
}

LieElement LieElement::generator(Alphabet alphabet, int truncation, std::size_t i)
{
	LieElement e(alphabet, truncation);
	e.set(Monomial(alphabet, {i}), 1);
	return e;
}

LieElement LieElement::from_coordinates(Alphabet alphabet, int truncation, Coordinates coords)
{
	LieElement e(std::move(alphabet), truncation);
	for (auto &[w, c] : coords)
	{
		if (!is_lyndon(w))
			throw StructuralError("Lie coordinate key is not a Lyndon word");
		if (w.degree() > truncation)
			throw StructuralError("Lie coordinate exceeds truncation");
		e.set(w, c);
	}
	return e;
}

Scalar LieElement::coordinate(Monomial const &w) const
{
	auto it = coords_.find(w);
	return it == coords_.end() ? Scalar(0) : it->second;
}

void LieElement::set(Monomial const &w, Scalar const &c)
{
	if (w.degree() > truncation_)
		return;
	auto &slot = coords_[w];
	slot += c;
	if (sgn(slot) == 0)
		coords_.erase(w);
}

void LieElement::check_compatible(LieElement const &other) const
{
	if (!(alphabet_ == other.alphabet_) || truncation_ != other.truncation_)
		throw StructuralError("Lie elements: alphabet or truncation mismatch");
}

LieElement &LieElement::operator+=(LieElement const &other)
{
	check_compatible(other);
	for (auto const &[w, c] : other.coords_)
		set(w, c);
	return *this;
}

LieElement &LieElement::operator-=(LieElement const &other)
{
	check_compatible(other);
	for (auto const &[w, c] : other.coords_)
		set(w, -c);
	return *this;
}

LieElement &LieElement::operator*=(Scalar const &c)
{
	if (sgn(c) == 0)
		coords_.clear();
	for (auto &[w, v] : coords_)
		v *= c;
	return *this;
}

Series embed_lie(LieElement const &a)
{
	Series s(a.alphabet(), a.truncation());
	for (auto const &[w, c] : a.coordinates())
		s += lyndon_bracket_expansion(a.alphabet(), a.truncation(), w) * c;
	return s;
}

LieElement project_lie(Series const &a)
{
	if (!is_primitive(a))
		throw DomainError("project_lie: series is not primitive");
	LieElement out(a.alphabet(), a.truncation());
	auto rest = a;
	// P(w) = w + (larger words), so peel off Lyndon words in increasing order
	for (int d = 1; d <= a.truncation(); ++d)
	{
		for (auto const &w : lyndon_basis(a.alphabet(), d))
		{
			Scalar c = rest.coefficient(w);
			if (sgn(c) == 0)
				continue;
			rest -= lyndon_bracket_expansion(a.alphabet(), a.truncation(), w) * c;
			out += LieElement::from_coordinates(a.alphabet(), a.truncation(), {{w, c}});
		}
	}
	if (!rest.is_zero())
		throw DomainError("project_lie: residual after Lyndon elimination is nonzero");
	return out;
}

LieElement lie_bracket(LieElement const &a, LieElement const &b)
{
	if (!(a.alphabet() == b.alphabet()) || a.truncation() != b.truncation())
		throw StructuralError("lie_bracket: alphabet or truncation mismatch");
	return project_lie(commutator(embed_lie(a), embed_lie(b)));
}

} // namespace gtalg
