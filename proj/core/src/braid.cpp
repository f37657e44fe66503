#include "gtalg/braid.hpp"

#include "gtalg/errors.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace gtalg {

BraidWord::BraidWord(std::vector<int> letters)
{
	for (int l : letters)
	{
		if (l != 1 && l != -1 && l != 2 && l != -2)
			throw StructuralError("braid letters are +-1 and +-2");
		if (!letters_.empty() && letters_.back() == -l)
			letters_.pop_back();
		else
			letters_.push_back(l);
	}
}

BraidWord BraidWord::inverse() const
{
	std::vector<int> inv(letters_.rbegin(), letters_.rend());
	for (int &l : inv)
		l = -l;
	return BraidWord(std::move(inv));
}

BraidWord BraidWord::pow(long n) const
{
	BraidWord base = n < 0 ? inverse() : *this;
	BraidWord out;
	for (long i = 0; i < std::labs(n); ++i)
		out = out * base;
	return out;
}

BraidWord operator*(BraidWord const &a, BraidWord const &b)
{
	auto letters = a.letters_;
	letters.insert(letters.end(), b.letters_.begin(), b.letters_.end());
	return BraidWord(std::move(letters));
}

BraidWord parse_braid_word(std::string_view text)
{
	std::vector<int> letters;
	std::istringstream in{std::string(text)};
	std::string tok;
	while (in >> tok)
	{
		if (tok == "s1")
			letters.push_back(1);
		else if (tok == "s1i")
			letters.push_back(-1);
		else if (tok == "s2")
			letters.push_back(2);
		else if (tok == "s2i")
			letters.push_back(-2);
		else
			throw std::invalid_argument("unknown braid token '" + tok + "'");
	}
	return BraidWord(std::move(letters));
}

std::string format_braid_word(BraidWord const &w)
{
	std::string out;
	for (int l : w.letters())
	{
		if (!out.empty())
			out += ' ';
		out += l > 0 ? "s" + std::to_string(l) : "s" + std::to_string(-l) + "i";
	}
	return out;
}

// ------------------------------------------------------------------ Laurent

Laurent Laurent::monomial(long exponent, mpz_class coeff)
{
	Laurent p;
	p.add(exponent, coeff);
	return p;
}

void Laurent::add(long exponent, mpz_class const &c)
{
	if (c == 0)
		return;
	auto &slot = terms_[exponent];
	slot += c;
	if (slot == 0)
		terms_.erase(exponent);
}

Laurent &Laurent::operator+=(Laurent const &other)
{
	for (auto const &[e, c] : other.terms_)
		add(e, c);
	return *this;
}

Laurent operator*(Laurent const &a, Laurent const &b)
{
	Laurent out;
	for (auto const &[ea, ca] : a.terms_)
		for (auto const &[eb, cb] : b.terms_)
			out.add(ea + eb, ca * cb);
	return out;
}

std::string format_laurent(Laurent const &p)
{
	if (p.is_zero())
		return "0";
	std::string out;
	for (auto const &[e, c] : p.terms())
	{
		if (!out.empty())
			out += c < 0 ? " - " : " + ";
		else if (c < 0)
			out += "-";
		mpz_class mag = abs(c);
		if (e == 0)
			out += mag.get_str();
		else
		{
			if (mag != 1)
				out += mag.get_str() + "*";
			out += e == 1 ? "t" : "t^" + std::to_string(e);
		}
	}
	return out;
}

LaurentMatrix LaurentMatrix::identity()
{
	LaurentMatrix m;
	m(0, 0) = Laurent::monomial(0, 1);
	m(1, 1) = Laurent::monomial(0, 1);
	return m;
}

LaurentMatrix operator*(LaurentMatrix const &a, LaurentMatrix const &b)
{
	LaurentMatrix c;
	for (int i = 0; i < 2; ++i)
		for (int j = 0; j < 2; ++j)
			c(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j);
	return c;
}

namespace {

LaurentMatrix generator_image(int letter)
{
	auto mono = [](long e, long c) { return Laurent::monomial(e, c); };
	LaurentMatrix m;
	switch (letter)
	{
	case 1:
		m(0, 0) = mono(1, -1);
		m(0, 1) = mono(0, 1);
		m(1, 1) = mono(0, 1);
		break;
	case -1:
		m(0, 0) = mono(-1, -1);
		m(0, 1) = mono(-1, 1);
		m(1, 1) = mono(0, 1);
		break;
	case 2:
		m(0, 0) = mono(0, 1);
		m(1, 0) = mono(1, 1);
		m(1, 1) = mono(1, -1);
		break;
	case -2:
		m(0, 0) = mono(0, 1);
		m(1, 0) = mono(0, 1);
		m(1, 1) = mono(-1, -1);
		break;
	default:
		throw StructuralError("invalid braid letter");
	}
	return m;
}

} // namespace

LaurentMatrix burau(BraidWord const &w)
{
	auto m = LaurentMatrix::identity();
	for (int l : w.letters())
		m = m * generator_image(l);
	return m;
}

bool equal_braids(BraidWord const &u, BraidWord const &v) { return burau(u) == burau(v); }

BraidWord full_twist() { return BraidWord({1, 2}).pow(3); }

BraidWord gt_automorphism_word(FreeWord const &f, long n)
{
	std::vector<int> letters;
	for (int l : f.letters())
	{
		int gen = std::abs(l);
		if (gen > 2)
			throw StructuralError("gt_automorphism_word: f must be a word in x, y");
		int s = l > 0 ? gen : -gen;
		letters.push_back(s);
		letters.push_back(s);
	}
	return BraidWord(std::move(letters)) * full_twist().pow(n);
}

} // namespace gtalg
