#pragma once

#include "gtalg/series.hpp"

#include <array>
#include <gmpxx.h>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace gtalg {

/// Freely reduced word in the generators of B3. Letters are +1, -1
/// (sigma_1 and its inverse) and +2, -2 (sigma_2 and its inverse).
class BraidWord
{
public:
	BraidWord() = default;
	explicit BraidWord(std::vector<int> letters);

	std::vector<int> const &letters() const { return letters_; }
	bool empty() const { return letters_.empty(); }
	std::size_t length() const { return letters_.size(); }
	BraidWord inverse() const;
	BraidWord pow(long n) const;

	friend BraidWord operator*(BraidWord const &a, BraidWord const &b);
	friend bool operator==(BraidWord const &, BraidWord const &) = default;

private:
	std::vector<int> letters_;
};

/// Whitespace-separated tokens `s1 s1i s2 s2i`.
BraidWord parse_braid_word(std::string_view text);
std::string format_braid_word(BraidWord const &w);

/// Integer Laurent polynomial in t, exponent -> coefficient, no zero entries.
class Laurent
{
public:
	Laurent() = default;
	static Laurent monomial(long exponent, mpz_class coeff);

	std::map<long, mpz_class> const &terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }

	Laurent &operator+=(Laurent const &other);
	friend Laurent operator+(Laurent a, Laurent const &b) { return a += b; }
	friend Laurent operator*(Laurent const &a, Laurent const &b);
	friend bool operator==(Laurent const &, Laurent const &) = default;

private:
	void add(long exponent, mpz_class const &c);

	std::map<long, mpz_class> terms_;
};

std::string format_laurent(Laurent const &p);

/// 2x2 matrix over Z[t, 1/t], row-major.
struct LaurentMatrix
{
	std::array<Laurent, 4> entry;

	static LaurentMatrix identity();
	Laurent const &operator()(int r, int c) const { return entry[static_cast<std::size_t>(2 * r + c)]; }
	Laurent &operator()(int r, int c) { return entry[static_cast<std::size_t>(2 * r + c)]; }

	friend LaurentMatrix operator*(LaurentMatrix const &a, LaurentMatrix const &b);
	friend bool operator==(LaurentMatrix const &, LaurentMatrix const &) = default;
};

/// Reduced Burau representation of B3:
///   sigma_1 -> [[-t, 1], [0, 1]],  sigma_2 -> [[1, 0], [t, -t]].
LaurentMatrix burau(BraidWord const &w);

/// Word equality in B3, decided through the reduced Burau representation,
/// which is faithful on B3.
bool equal_braids(BraidWord const &u, BraidWord const &v);

/// f(sigma_1^2, sigma_2^2) (sigma_1 sigma_2)^(3n) for a word f in the free
/// group on x, y; freely reduced.
BraidWord gt_automorphism_word(FreeWord const &f, long n);

/// The central element (sigma_1 sigma_2)^3.
BraidWord full_twist();

} // namespace gtalg
