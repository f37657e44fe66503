#include "run_report.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace gtalg::cli {

void RunReport::add(Report const &r, std::vector<std::string> const &labels, std::string const &prefix)
{
	for (auto const &c : r.checks)
	{
		Entry e{prefix + c.axiom, c.verdict, {}, c.detail, c.instances};
		for (auto i : c.witness)
			e.witness.push_back(i < labels.size() ? labels[i] : std::to_string(i));
		checks.push_back(std::move(e));
	}
}

void RunReport::add(std::string name, bool holds, std::string detail)
{
	checks.push_back({std::move(name), holds ? Verdict::holds : Verdict::fails, {}, std::move(detail), 1});
}

void RunReport::value(std::string name, std::string text)
{
	values.emplace_back(std::move(name), std::move(text));
}

bool RunReport::passed() const
{
	return std::none_of(checks.begin(), checks.end(),
	                    [](Entry const &e) { return e.verdict == Verdict::fails; });
}

namespace {

std::string join(std::vector<std::string> const &v, char const *sep)
{
	std::string out;
	for (std::size_t i = 0; i < v.size(); ++i)
		out += (i ? sep : "") + v[i];
	return out;
}

std::string render_text(RunReport const &r)
{
	std::ostringstream out;
	out << "command: " << join(r.command, " ") << "\n";
	for (auto const &c : r.checks)
	{
		out << (c.verdict == Verdict::holds ? "PASS" : c.verdict == Verdict::fails ? "FAIL" : "VACUOUS")
		    << "  " << c.name;
		if (c.instances > 1)
			out << " (" << c.instances << " instances)";
		out << "\n";
		if (!c.witness.empty())
			out << "      witness: (" << join(c.witness, ", ") << ")\n";
		if (!c.detail.empty())
			out << "      " << c.detail << "\n";
	}
	for (auto const &[name, text] : r.values)
	{
		if (text.find('\n') == std::string::npos)
		{
			out << name << ": " << text << "\n";
			continue;
		}
		out << name << ":\n";
		std::istringstream lines(text);
		for (std::string line; std::getline(lines, line);)
			out << "  " << line << "\n";
	}
	if (r.elapsed_ms)
	{
		char buf[32];
		std::snprintf(buf, sizeof buf, "%.3f", *r.elapsed_ms);
		out << "elapsed_ms: " << buf << "\n";
	}
	out << "status: " << r.exit_status() << "\n";
	return out.str();
}

std::string render_json(RunReport const &r)
{
	nlohmann::ordered_json j;
	j["command"] = r.command;
	j["checks"] = nlohmann::ordered_json::array();
	for (auto const &c : r.checks)
		j["checks"].push_back({{"name", c.name},
		                       {"verdict", to_string(c.verdict)},
		                       {"witness", c.witness},
		                       {"detail", c.detail},
		                       {"instances", c.instances}});
	j["values"] = nlohmann::ordered_json::object();
	for (auto const &[name, text] : r.values)
		j["values"][name] = text;
	if (r.elapsed_ms)
		j["elapsed_ms"] = *r.elapsed_ms;
	j["status"] = r.exit_status();
	return j.dump(2) + "\n";
}

} // namespace

std::string RunReport::render(Format f) const
{
	return f == Format::json ? render_json(*this) : render_text(*this);
}

} // namespace gtalg::cli
