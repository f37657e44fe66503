#pragma once

#include "gtalg/braid.hpp"
#include "gtalg/errors.hpp"
#include "gtalg/gtrel.hpp"
#include "gtalg/hgt.hpp"
#include "gtalg/hopf.hpp"
#include "gtalg/ihara.hpp"
#include "gtalg/trialgebra.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace gtalg::io {

struct HopfDocument
{
	HopfData algebra;
	std::optional<Matrix> r_matrix;
	std::optional<Matrix> coquasi_form;
	std::optional<Matrix> pairing;

	friend bool operator==(HopfDocument const &, HopfDocument const &) = default;
};

struct TrialgebraDocument
{
	TrialgebraData algebra;
	std::optional<Matrix> r_dot;
	std::optional<Matrix> r_star;
	std::optional<Matrix> pairing;

	friend bool operator==(TrialgebraDocument const &, TrialgebraDocument const &) = default;
};

struct QuadraalgebraDocument
{
	QuadraalgebraData algebra;

	friend bool operator==(QuadraalgebraDocument const &, QuadraalgebraDocument const &) = default;
};

using Payload = std::variant<HopfDocument, TrialgebraDocument, QuadraalgebraDocument,
                             MetrizedLieAlgebra, Series, BraidWord, GTElement, HGTPair>;

/// A parsed file: format version 1, an optional free-text description, and
/// one payload whose alternative determines the `kind` tag.
struct AlgebraDocument
{
	std::optional<std::string> description;
	Payload payload;

	/// hopf | trialgebra | quadraalgebra | lie-metrized | series | braid | gt-element | hgt-pair
	std::string kind() const;

	friend bool operator==(AlgebraDocument const &, AlgebraDocument const &) = default;
};

/// Malformed input. Syntax errors carry a 1-based line and column; semantic
/// errors carry a JSON path such as `$.mult[1][0]`.
class ParseError : public Error
{
public:
	enum class Category
	{
		syntax,
		semantic,
	};

	ParseError(Category category, std::string message, std::size_t line, std::size_t column,
	           std::string path);

	Category category() const { return category_; }
	std::size_t line() const { return line_; }
	std::size_t column() const { return column_; }
	std::string const &path() const { return path_; }
	/// The message without location.
	std::string const &reason() const { return reason_; }

private:
	Category category_;
	std::string reason_;
	std::size_t line_;
	std::size_t column_;
	std::string path_;
};

AlgebraDocument parse(std::string_view text);
/// Deterministic text: two-space indentation, arrays of scalars inline,
/// keys in schema order, trailing newline.
std::string print(AlgebraDocument const &doc);

AlgebraDocument load_file(std::string const &path);
void save_file(std::string const &path, AlgebraDocument const &doc);

/// The payload of a given kind, or a ParseError naming the expected kind.
template <class T> T const &expect(AlgebraDocument const &doc, char const *kind)
{
	if (auto const *p = std::get_if<T>(&doc.payload))
		return *p;
	throw ParseError(ParseError::Category::semantic,
	                 std::string("expected a document of kind '") + kind + "', got '" + doc.kind() +
	                     "'",
	                 0, 0, "$.kind");
}

} // namespace gtalg::io
