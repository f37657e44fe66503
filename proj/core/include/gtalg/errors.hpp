#pragma once

#include <stdexcept>
#include <string>

namespace gtalg {

/// Base class of every error raised by the library.
class Error : public std::runtime_error
{
public:
	using std::runtime_error::runtime_error;
};

/// Mismatched alphabets, truncations, dimensions or missing assignments.
class StructuralError : public Error
{
public:
	using Error::Error;
};

/// An argument lies outside the domain of an operation
/// (log of a series without constant term 1, singular pairing, ...).
class DomainError : public Error
{
public:
	using Error::Error;
};

/// The hypotheses of a theorem-style check do not hold for the input.
class HypothesisError : public Error
{
public:
	using Error::Error;
};

} // namespace gtalg
