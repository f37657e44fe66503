#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace gtalg {

enum class Verdict
{
	holds,
	fails,
	/// No instance of the axiom was defined (partial products).
	vacuous,
};

char const *to_string(Verdict v);

/// Outcome of one axiom. A failing axiom carries the first witness found in
/// lexicographic order of basis indices.
struct AxiomCheck
{
	std::string axiom;
	Verdict verdict = Verdict::holds;
	std::vector<std::size_t> witness;
	std::string detail;
	/// Number of basis instances actually evaluated.
	std::size_t instances = 0;
};

struct Report
{
	std::vector<AxiomCheck> checks;

	bool passed() const;
	AxiomCheck const *first_failure() const;
	AxiomCheck const *find(std::string const &axiom) const;
	/// Appends other's checks with `prefix` prepended to each axiom name.
	void append(Report const &other, std::string const &prefix = {});
};

} // namespace gtalg
