#pragma once

#include <gtalg/report.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gtalg::cli {

enum class Format
{
	text,
	json,
};

/// Everything one invocation prints. The json form carries the same fields
/// as the text form.
struct RunReport
{
	std::vector<std::string> command;
	/// Checks with witnesses rendered through basis labels.
	struct Entry
	{
		std::string name;
		Verdict verdict = Verdict::holds;
		std::vector<std::string> witness;
		std::string detail;
		std::size_t instances = 0;
	};
	std::vector<Entry> checks;
	/// Named results (series, dimensions, messages) in insertion order.
	std::vector<std::pair<std::string, std::string>> values;
	std::optional<double> elapsed_ms;

	void add(Report const &r, std::vector<std::string> const &labels, std::string const &prefix = {});
	void add(std::string name, bool holds, std::string detail = {});
	void value(std::string name, std::string text);

	bool passed() const;
	int exit_status() const { return passed() ? 0 : 1; }
	std::string render(Format f) const;
};

} // namespace gtalg::cli
