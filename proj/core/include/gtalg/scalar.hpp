#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace gtalg {

/// Exact rational number. gmpxx keeps every value canonical
/// (positive denominator, lowest terms) after each arithmetic operation.
using Scalar = mpq_class;

/// Parses `p` or `p/q` in canonical form: no sign on the denominator,
/// no leading zeros, lowest terms, denominator 1 omitted.
/// Throws std::invalid_argument with a human-readable reason.
Scalar parse_scalar(std::string_view text);

/// Canonical text form, `p` or `p/q`.
std::string to_string(Scalar const &value);

/// Uniform integer-valued scalar in [-bound, bound]; used by randomized
/// property suites that need reproducible inputs.
template <class Rng> Scalar random_small_scalar(Rng &rng, long bound)
{
	auto span = static_cast<unsigned long>(2 * bound + 1);
	return Scalar(static_cast<long>(rng() % span) - bound);
}

} // namespace gtalg
