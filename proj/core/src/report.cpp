#include "gtalg/report.hpp"

namespace gtalg {

char const *to_string(Verdict v)
{
	switch (v)
	{
	case Verdict::holds: return "holds";
	case Verdict::fails: return "fails";
	case Verdict::vacuous: return "vacuous";
	}
	return "?";
}

bool Report::passed() const { return first_failure() == nullptr; }

AxiomCheck const *Report::first_failure() const
{
	for (auto const &c : checks)
		if (c.verdict == Verdict::fails)
			return &c;
	return nullptr;
}

AxiomCheck const *Report::find(std::string const &axiom) const
{
	for (auto const &c : checks)
		if (c.axiom == axiom)
			return &c;
	return nullptr;
}

void Report::append(Report const &other, std::string const &prefix)
{
	for (auto c : other.checks)
	{
		c.axiom = prefix + c.axiom;
		checks.push_back(std::move(c));
	}
}

} // namespace gtalg
