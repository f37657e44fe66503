#include "gtalg/io.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>

namespace gtalg::io {

using json = nlohmann::ordered_json;

ParseError::ParseError(Category category, std::string message, std::size_t line,
                       std::size_t column, std::string path)
    : Error(category == Category::syntax
                ? "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                      message
                : path + ": " + message),
      category_(category), reason_(std::move(message)), line_(line), column_(column),
      path_(std::move(path))
{
}

std::string AlgebraDocument::kind() const
{
	static char const *const names[] = {"hopf",   "trialgebra", "quadraalgebra", "lie-metrized",
	                                    "series", "braid",      "gt-element",    "hgt-pair"};
	return names[payload.index()];
}

namespace {

[[noreturn]] void fail(std::string const &path, std::string const &message)
{
	throw ParseError(ParseError::Category::semantic, message, 0, 0, path);
}

std::string at(std::string const &path, std::string const &key) { return path + "." + key; }
std::string at(std::string const &path, std::size_t i)
{
	return path + "[" + std::to_string(i) + "]";
}

// ------------------------------------------------------------------ reading

/// Object with a fixed set of allowed keys; reports unknown and missing ones.
class Fields
{
public:
	Fields(json const &j, std::string path, std::set<std::string> allowed)
	    : j_(j), path_(std::move(path))
	{
		if (!j.is_object())
			fail(path_, "expected an object");
		for (auto const &[key, value] : j.items())
			if (!allowed.count(key))
				fail(at(path_, key), "unknown field");
	}

	bool has(std::string const &key) const { return j_.contains(key); }
	json const &get(std::string const &key) const
	{
		if (!has(key))
			fail(path_, "missing field '" + key + "'");
		return j_.at(key);
	}
	std::string path(std::string const &key) const { return at(path_, key); }

private:
	json const &j_;
	std::string path_;
};

void require_array(json const &j, std::string const &path, std::optional<std::size_t> size = {})
{
	if (!j.is_array())
		fail(path, "expected an array");
	if (size && j.size() != *size)
		fail(path, "expected " + std::to_string(*size) + " entries, got " + std::to_string(j.size()));
}

std::string read_string(json const &j, std::string const &path)
{
	if (!j.is_string())
		fail(path, "expected a string");
	return j.get<std::string>();
}

long read_integer(json const &j, std::string const &path)
{
	if (!j.is_number_integer())
		fail(path, "expected an integer");
	return j.get<long>();
}

Scalar read_scalar(json const &j, std::string const &path)
{
	if (!j.is_string())
		fail(path, "expected a rational as a string such as \"3/4\"");
	try
	{
		return parse_scalar(j.get<std::string>());
	}
	catch (std::invalid_argument const &e)
	{
		fail(path, e.what());
	}
}

Vector read_vector(json const &j, std::string const &path, std::size_t n)
{
	require_array(j, path, n);
	Vector v;
	for (std::size_t i = 0; i < n; ++i)
		v.push_back(read_scalar(j[i], at(path, i)));
	return v;
}

Matrix read_matrix(json const &j, std::string const &path, std::size_t n)
{
	require_array(j, path, n);
	Matrix m(n, n);
	for (std::size_t i = 0; i < n; ++i)
	{
		auto row = read_vector(j[i], at(path, i), n);
		for (std::size_t k = 0; k < n; ++k)
			m(i, k) = row[k];
	}
	return m;
}

Tensor3 read_tensor(json const &j, std::string const &path, std::size_t n)
{
	require_array(j, path, n);
	Tensor3 t(n, n, n);
	for (std::size_t i = 0; i < n; ++i)
	{
		auto slice = read_matrix(j[i], at(path, i), n);
		for (std::size_t a = 0; a < n; ++a)
			for (std::size_t b = 0; b < n; ++b)
				t(i, a, b) = slice(a, b);
	}
	return t;
}

std::vector<std::vector<bool>> read_mask(json const &j, std::string const &path, std::size_t n)
{
	require_array(j, path, n);
	std::vector<std::vector<bool>> mask(n);
	for (std::size_t i = 0; i < n; ++i)
	{
		require_array(j[i], at(path, i), n);
		for (std::size_t k = 0; k < n; ++k)
		{
			if (!j[i][k].is_boolean())
				fail(at(at(path, i), k), "expected true or false");
			mask[i].push_back(j[i][k].get<bool>());
		}
	}
	return mask;
}

std::vector<std::string> read_basis(json const &j, std::string const &path)
{
	require_array(j, path);
	if (j.empty())
		fail(path, "the basis must be nonempty");
	std::vector<std::string> labels;
	std::set<std::string> seen;
	for (std::size_t i = 0; i < j.size(); ++i)
	{
		auto l = read_string(j[i], at(path, i));
		if (l.empty())
			fail(at(path, i), "empty basis label");
		if (!seen.insert(l).second)
			fail(at(path, i), "duplicate basis label '" + l + "'");
		labels.push_back(std::move(l));
	}
	return labels;
}

template <class T, class F>
std::optional<T> optional_field(Fields const &f, std::string const &key, F &&read)
{
	if (!f.has(key))
		return std::nullopt;
	return read(f.get(key), f.path(key));
}

Series read_series(json const &j, std::string const &path)
{
	Fields f(j, path, {"alphabet", "truncation", "terms"});
	Fields a(f.get("alphabet"), f.path("alphabet"), {"names", "degrees"});
	auto names_json = a.get("names");
	require_array(names_json, a.path("names"));
	std::vector<std::string> names;
	for (std::size_t i = 0; i < names_json.size(); ++i)
		names.push_back(read_string(names_json[i], at(a.path("names"), i)));
	std::vector<int> degrees;
	if (a.has("degrees"))
	{
		auto const &dj = a.get("degrees");
		require_array(dj, a.path("degrees"), names.size());
		for (std::size_t i = 0; i < dj.size(); ++i)
			degrees.push_back(static_cast<int>(read_integer(dj[i], at(a.path("degrees"), i))));
	}
	std::optional<Alphabet> alphabet;
	try
	{
		alphabet.emplace(names, degrees);
	}
	catch (StructuralError const &e)
	{
		fail(f.path("alphabet"), e.what());
	}
	for (auto const &n : names)
		if (n == "1" || n.find('.') != std::string::npos)
			fail(a.path("names"), "generator names may not be '1' or contain '.'");

	long truncation = read_integer(f.get("truncation"), f.path("truncation"));
	if (truncation < 0)
		fail(f.path("truncation"), "truncation must be non-negative");

	Series s(*alphabet, static_cast<int>(truncation));
	auto const &terms = f.get("terms");
	require_array(terms, f.path("terms"));
	std::set<Monomial> seen;
	for (std::size_t i = 0; i < terms.size(); ++i)
	{
		auto p = at(f.path("terms"), i);
		require_array(terms[i], p, 2);
		auto word = read_string(terms[i][0], at(p, 0));
		Monomial m;
		try
		{
			m = parse_monomial(*alphabet, word);
		}
		catch (std::invalid_argument const &e)
		{
			fail(at(p, 0), e.what());
		}
		if (m.degree() > truncation)
			fail(at(p, 0), "monomial degree exceeds the truncation");
		if (!seen.insert(m).second)
			fail(at(p, 0), "duplicate monomial '" + word + "'");
		auto c = read_scalar(terms[i][1], at(p, 1));
		if (sgn(c) == 0)
			fail(at(p, 1), "zero coefficients are not stored");
		s.add_term(m, c);
	}
	return s;
}

HopfDocument read_hopf(Fields const &f)
{
	HopfDocument d;
	auto &h = d.algebra;
	h.labels = read_basis(f.get("basis"), f.path("basis"));
	std::size_t n = h.labels.size();
	h.mult = read_tensor(f.get("mult"), f.path("mult"), n);
	h.unit = read_vector(f.get("unit"), f.path("unit"), n);
	h.comult = read_tensor(f.get("comult"), f.path("comult"), n);
	h.counit = read_vector(f.get("counit"), f.path("counit"), n);
	auto matrix = [n](json const &j, std::string const &p) { return read_matrix(j, p, n); };
	h.antipode = optional_field<Matrix>(f, "antipode", matrix);
	d.r_matrix = optional_field<Matrix>(f, "r_matrix", matrix);
	d.coquasi_form = optional_field<Matrix>(f, "coquasi_form", matrix);
	d.pairing = optional_field<Matrix>(f, "pairing", matrix);
	return d;
}

TrialgebraDocument read_trialgebra(Fields const &f)
{
	TrialgebraDocument d;
	auto &t = d.algebra;
	t.labels = read_basis(f.get("basis"), f.path("basis"));
	std::size_t n = t.labels.size();
	auto vec = [n](json const &j, std::string const &p) { return read_vector(j, p, n); };
	auto matrix = [n](json const &j, std::string const &p) { return read_matrix(j, p, n); };
	t.star_mult = read_tensor(f.get("star_mult"), f.path("star_mult"), n);
	if (f.has("star_defined"))
		t.star_defined = read_mask(f.get("star_defined"), f.path("star_defined"), n);
	t.star_unit = optional_field<Vector>(f, "star_unit", vec);
	t.dot_mult = read_tensor(f.get("dot_mult"), f.path("dot_mult"), n);
	t.dot_unit = optional_field<Vector>(f, "dot_unit", vec);
	t.comult = read_tensor(f.get("comult"), f.path("comult"), n);
	t.counit = read_vector(f.get("counit"), f.path("counit"), n);
	d.r_dot = optional_field<Matrix>(f, "r_dot", matrix);
	d.r_star = optional_field<Matrix>(f, "r_star", matrix);
	d.pairing = optional_field<Matrix>(f, "pairing", matrix);
	return d;
}

QuadraalgebraDocument read_quadraalgebra(Fields const &f)
{
	QuadraalgebraDocument d;
	auto &q = d.algebra;
	q.labels = read_basis(f.get("basis"), f.path("basis"));
	std::size_t n = q.labels.size();
	auto vec = [n](json const &j, std::string const &p) { return read_vector(j, p, n); };
	q.mult1 = read_tensor(f.get("mult1"), f.path("mult1"), n);
	q.unit1 = optional_field<Vector>(f, "unit1", vec);
	q.mult2 = read_tensor(f.get("mult2"), f.path("mult2"), n);
	q.unit2 = optional_field<Vector>(f, "unit2", vec);
	q.comult1 = read_tensor(f.get("comult1"), f.path("comult1"), n);
	q.counit1 = read_vector(f.get("counit1"), f.path("counit1"), n);
	q.comult2 = read_tensor(f.get("comult2"), f.path("comult2"), n);
	q.counit2 = read_vector(f.get("counit2"), f.path("counit2"), n);
	return d;
}

MetrizedLieAlgebra read_lie(Fields const &f)
{
	auto labels = read_basis(f.get("basis"), f.path("basis"));
	std::size_t n = labels.size();
	auto c = read_tensor(f.get("structure"), f.path("structure"), n);
	auto metric = read_matrix(f.get("metric"), f.path("metric"), n);
	try
	{
		return MetrizedLieAlgebra(std::move(labels), std::move(c), std::move(metric));
	}
	catch (DomainError const &e)
	{
		fail("$", e.what());
	}
}

Series read_xy_grouplike(json const &j, std::string const &path)
{
	auto s = read_series(j, path);
	if (!(s.alphabet() == Alphabet::xy()))
		fail(at(path, "alphabet"), "expected the alphabet X, Y with degrees 1");
	if (!is_grouplike(s))
		fail(path, "series is not group-like with constant term 1");
	return s;
}

Payload read_payload(std::string const &kind, json const &j)
{
	std::set<std::string> common{"format", "kind", "description"};
	auto with = [&](std::initializer_list<char const *> keys) {
		auto s = common;
		s.insert(keys.begin(), keys.end());
		return s;
	};
	if (kind == "hopf")
		return read_hopf(Fields(j, "$",
		                        with({"basis", "mult", "unit", "comult", "counit", "antipode",
		                              "r_matrix", "coquasi_form", "pairing"})));
	if (kind == "trialgebra")
		return read_trialgebra(Fields(j, "$",
		                              with({"basis", "star_mult", "star_defined", "star_unit",
		                                    "dot_mult", "dot_unit", "comult", "counit", "r_dot",
		                                    "r_star", "pairing"})));
	if (kind == "quadraalgebra")
		return read_quadraalgebra(Fields(j, "$",
		                                 with({"basis", "mult1", "unit1", "mult2", "unit2",
		                                       "comult1", "counit1", "comult2", "counit2"})));
	if (kind == "lie-metrized")
		return read_lie(Fields(j, "$", with({"basis", "structure", "metric"})));
	if (kind == "series")
	{
		Fields f(j, "$", with({"series"}));
		return read_series(f.get("series"), f.path("series"));
	}
	if (kind == "braid")
	{
		Fields f(j, "$", with({"word"}));
		auto text = read_string(f.get("word"), f.path("word"));
		try
		{
			return parse_braid_word(text);
		}
		catch (std::invalid_argument const &e)
		{
			fail(f.path("word"), e.what());
		}
	}
	if (kind == "gt-element")
	{
		Fields f(j, "$", with({"lambda", "f"}));
		auto lambda = read_scalar(f.get("lambda"), f.path("lambda"));
		return GTElement(lambda, read_xy_grouplike(f.get("f"), f.path("f")));
	}
	if (kind == "hgt-pair")
	{
		Fields f(j, "$", with({"f", "g"}));
		auto a = read_xy_grouplike(f.get("f"), f.path("f"));
		auto b = read_xy_grouplike(f.get("g"), f.path("g"));
		if (a.truncation() != b.truncation())
			fail(f.path("g"), "truncation differs from that of f");
		return HGTPair(a, b);
	}
	fail("$.kind", "unknown kind '" + kind + "'");
}

// ------------------------------------------------------------------ writing

json write_vector(Vector const &v)
{
	json j = json::array();
	for (auto const &x : v)
		j.push_back(to_string(x));
	return j;
}

json write_matrix(Matrix const &m)
{
	json j = json::array();
	for (std::size_t i = 0; i < m.rows(); ++i)
	{
		json row = json::array();
		for (std::size_t k = 0; k < m.cols(); ++k)
			row.push_back(to_string(m(i, k)));
		j.push_back(std::move(row));
	}
	return j;
}

json write_tensor(Tensor3 const &t)
{
	json j = json::array();
	for (std::size_t i = 0; i < t.extent(0); ++i)
	{
		Matrix slice(t.extent(1), t.extent(2));
		for (std::size_t a = 0; a < t.extent(1); ++a)
			for (std::size_t b = 0; b < t.extent(2); ++b)
				slice(a, b) = t(i, a, b);
		j.push_back(write_matrix(slice));
	}
	return j;
}

json write_series(Series const &s)
{
	json j;
	json alphabet;
	alphabet["names"] = s.alphabet().names();
	alphabet["degrees"] = s.alphabet().degrees();
	j["alphabet"] = std::move(alphabet);
	j["truncation"] = s.truncation();
	json terms = json::array();
	for (auto const &[m, c] : s.terms())
		terms.push_back(json::array({format_monomial(s.alphabet(), m), to_string(c)}));
	j["terms"] = std::move(terms);
	return j;
}

void put(json &j, char const *key, std::optional<Matrix> const &m)
{
	if (m)
		j[key] = write_matrix(*m);
}

void put(json &j, char const *key, std::optional<Vector> const &v)
{
	if (v)
		j[key] = write_vector(*v);
}

struct PayloadWriter
{
	json &j;

	void operator()(HopfDocument const &d)
	{
		auto const &h = d.algebra;
		j["basis"] = h.labels;
		j["mult"] = write_tensor(h.mult);
		j["unit"] = write_vector(h.unit);
		j["comult"] = write_tensor(h.comult);
		j["counit"] = write_vector(h.counit);
		put(j, "antipode", h.antipode);
		put(j, "r_matrix", d.r_matrix);
		put(j, "coquasi_form", d.coquasi_form);
		put(j, "pairing", d.pairing);
	}
	void operator()(TrialgebraDocument const &d)
	{
		auto const &t = d.algebra;
		j["basis"] = t.labels;
		j["star_mult"] = write_tensor(t.star_mult);
		if (!t.star_defined.empty())
			j["star_defined"] = t.star_defined;
		put(j, "star_unit", t.star_unit);
		j["dot_mult"] = write_tensor(t.dot_mult);
		put(j, "dot_unit", t.dot_unit);
		j["comult"] = write_tensor(t.comult);
		j["counit"] = write_vector(t.counit);
		put(j, "r_dot", d.r_dot);
		put(j, "r_star", d.r_star);
		put(j, "pairing", d.pairing);
	}
	void operator()(QuadraalgebraDocument const &d)
	{
		auto const &q = d.algebra;
		j["basis"] = q.labels;
		j["mult1"] = write_tensor(q.mult1);
		put(j, "unit1", q.unit1);
		j["mult2"] = write_tensor(q.mult2);
		put(j, "unit2", q.unit2);
		j["comult1"] = write_tensor(q.comult1);
		j["counit1"] = write_vector(q.counit1);
		j["comult2"] = write_tensor(q.comult2);
		j["counit2"] = write_vector(q.counit2);
	}
	void operator()(MetrizedLieAlgebra const &g)
	{
		j["basis"] = g.labels();
		j["structure"] = write_tensor(g.structure());
		j["metric"] = write_matrix(g.metric());
	}
	void operator()(Series const &s) { j["series"] = write_series(s); }
	void operator()(BraidWord const &w) { j["word"] = format_braid_word(w); }
	void operator()(GTElement const &e)
	{
		j["lambda"] = to_string(e.lambda());
		j["f"] = write_series(e.f());
	}
	void operator()(HGTPair const &p)
	{
		j["f"] = write_series(p.f());
		j["g"] = write_series(p.g());
	}
};

bool is_container(json const &j) { return j.is_array() || j.is_object(); }

void emit(json const &j, std::string const &indent, std::string &out)
{
	if (j.is_object())
	{
		if (j.empty())
		{
			out += "{}";
			return;
		}
		out += "{\n";
		bool first = true;
		for (auto const &[key, value] : j.items())
		{
			if (!first)
				out += ",\n";
			first = false;
			out += indent + "  " + json(key).dump() + ": ";
			emit(value, indent + "  ", out);
		}
		out += "\n" + indent + "}";
		return;
	}
	if (j.is_array())
	{
		bool flat = std::none_of(j.begin(), j.end(), [](json const &e) { return is_container(e); });
		if (flat)
		{
			out += "[";
			for (std::size_t i = 0; i < j.size(); ++i)
				out += (i ? ", " : "") + j[i].dump();
			out += "]";
			return;
		}
		out += "[\n";
		for (std::size_t i = 0; i < j.size(); ++i)
		{
			out += indent + "  ";
			emit(j[i], indent + "  ", out);
			out += i + 1 < j.size() ? ",\n" : "\n";
		}
		out += indent + "]";
		return;
	}
	out += j.dump();
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte)
{
	std::size_t line = 1, column = 1;
	for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i)
	{
		if (text[i] == '\n')
		{
			++line;
			column = 1;
		}
		else
			++column;
	}
	return {line, column};
}

} // namespace

AlgebraDocument parse(std::string_view text)
{
	json j;
	try
	{
		j = json::parse(text.begin(), text.end());
	}
	catch (json::parse_error const &e)
	{
		auto [line, column] = line_column(text, e.byte);
		std::string reason = e.what();
		if (auto pos = reason.find(": "); pos != std::string::npos)
			reason = reason.substr(pos + 2);
		throw ParseError(ParseError::Category::syntax, reason, line, column, "$");
	}

	if (!j.is_object())
		fail("$", "expected an object");
	if (!j.contains("format"))
		fail("$", "missing field 'format'");
	if (read_integer(j.at("format"), "$.format") != 1)
		fail("$.format", "unsupported format version");
	if (!j.contains("kind"))
		fail("$", "missing field 'kind'");
	auto kind = read_string(j.at("kind"), "$.kind");

	AlgebraDocument doc{std::nullopt, HopfDocument{}};
	if (j.contains("description"))
		doc.description = read_string(j.at("description"), "$.description");
	try
	{
		doc.payload = read_payload(kind, j);
	}
	catch (ParseError const &)
	{
		throw;
	}
	catch (Error const &e)
	{
		fail("$", e.what());
	}
	return doc;
}

std::string print(AlgebraDocument const &doc)
{
	json j;
	j["format"] = 1;
	j["kind"] = doc.kind();
	if (doc.description)
		j["description"] = *doc.description;
	std::visit(PayloadWriter{j}, doc.payload);
	std::string out;
	emit(j, "", out);
	out += "\n";
	return out;
}

AlgebraDocument load_file(std::string const &path)
{
	std::ifstream in(path, std::ios::binary);
	if (!in)
		throw Error("cannot open '" + path + "'");
	std::ostringstream ss;
	ss << in.rdbuf();
	return parse(ss.str());
}

void save_file(std::string const &path, AlgebraDocument const &doc)
{
	std::ofstream out(path, std::ios::binary);
	if (!out)
		throw Error("cannot write '" + path + "'");
	out << print(doc);
	if (!out)
		throw Error("write to '" + path + "' failed");
}

} // namespace gtalg::io
