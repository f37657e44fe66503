#include "gtalg/scalar.hpp"

#include <stdexcept>

namespace gtalg {

namespace {

bool is_digits(std::string_view s)
{
	if (s.empty())
		return false;
	for (char c : s)
		if (c < '0' || c > '9')
			return false;
	return true;
}

} // namespace

Scalar parse_scalar(std::string_view text)
{
	std::string_view num = text;
	std::string_view den;
	if (auto slash = text.find('/'); slash != std::string_view::npos)
	{
		num = text.substr(0, slash);
		den = text.substr(slash + 1);
		if (!is_digits(den))
			throw std::invalid_argument("malformed denominator in '" +
			                            std::string(text) + "'");
		if (den[0] == '0')
			throw std::invalid_argument("denominator must be a positive "
			                            "integer without leading zeros in '" +
			                            std::string(text) + "'");
	}
	std::string_view digits = num;
	if (!digits.empty() && digits[0] == '-')
		digits.remove_prefix(1);
	if (!is_digits(digits))
		throw std::invalid_argument("malformed rational '" +
		                            std::string(text) + "'");
	if (digits.size() > 1 && digits[0] == '0')
		throw std::invalid_argument("leading zeros in '" + std::string(text) +
		                            "'");
	if (num == "-0")
		throw std::invalid_argument("negative zero in '" + std::string(text) +
		                            "'");

	mpz_class p(std::string(num), 10);
	if (den.empty())
		return Scalar(p);

	mpz_class q(std::string(den), 10);
	if (q == 1)
		throw std::invalid_argument("denominator 1 must be omitted in '" +
		                            std::string(text) + "'");
	mpz_class g;
	mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
	if (g != 1)
		throw std::invalid_argument("not in lowest terms: '" +
		                            std::string(text) + "'");
	Scalar r(p, q);
	return r;
}

std::string to_string(Scalar const &value) { return value.get_str(10); }

} // namespace gtalg
