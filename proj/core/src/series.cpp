#include "gtalg/series.hpp"

#include "gtalg/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace gtalg {

// ---------------------------------------------------------------- Alphabet

Alphabet::Alphabet(std::vector<std::string> names, std::vector<int> degrees)
    : names_(std::move(names)), degrees_(std::move(degrees))
{
	if (names_.empty())
		throw StructuralError("alphabet must be nonempty");
	if (names_.size() > 255)
		throw StructuralError("alphabet too large (at most 255 generators)");
	if (degrees_.empty())
		degrees_.assign(names_.size(), 1);
	if (degrees_.size() != names_.size())
		throw StructuralError("alphabet: one degree per generator required");
	std::set<std::string> seen;
	for (auto const &n : names_)
	{
		if (n.empty())
			throw StructuralError("alphabet: empty generator name");
		if (!seen.insert(n).second)
			throw StructuralError("alphabet: duplicate generator '" + n + "'");
	}
	for (int d : degrees_)
		if (d <= 0)
			throw StructuralError("alphabet: generator degrees must be positive");
}

Alphabet Alphabet::xy() { return Alphabet({"X", "Y"}); }

std::optional<std::size_t> Alphabet::find(std::string_view name) const
{
	for (std::size_t i = 0; i < names_.size(); ++i)
		if (names_[i] == name)
			return i;
	return std::nullopt;
}

std::size_t Alphabet::index(std::string_view name) const
{
	if (auto i = find(name))
		return *i;
	throw StructuralError("unknown generator '" + std::string(name) + "'");
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(Alphabet const &alphabet, std::vector<std::size_t> const &letters)
{
	letters_.reserve(letters.size());
	for (auto l : letters)
	{
		if (l >= alphabet.size())
			throw StructuralError("monomial letter outside the alphabet");
		letters_.push_back(static_cast<char>(l));
		degree_ += alphabet.degree(l);
	}
}

Monomial::Monomial(Alphabet const &alphabet, std::initializer_list<std::size_t> letters)
    : Monomial(alphabet, std::vector<std::size_t>(letters))
{
}

std::vector<std::size_t> Monomial::letters() const
{
	std::vector<std::size_t> out(letters_.size());
	for (std::size_t i = 0; i < letters_.size(); ++i)
		out[i] = (*this)[i];
	return out;
}

Monomial Monomial::slice(Alphabet const &alphabet, std::size_t pos, std::size_t len) const
{
	Monomial m;
	m.letters_ = letters_.substr(pos, len);
	for (char c : m.letters_)
		m.degree_ += alphabet.degree(static_cast<unsigned char>(c));
	return m;
}

Monomial operator*(Monomial const &a, Monomial const &b)
{
	Monomial m;
	m.degree_ = a.degree_ + b.degree_;
	m.letters_.reserve(a.letters_.size() + b.letters_.size());
	m.letters_ = a.letters_;
	m.letters_ += b.letters_;
	return m;
}

std::string format_monomial(Alphabet const &alphabet, Monomial const &m)
{
	if (m.empty())
		return "1";
	std::string out;
	for (std::size_t i = 0; i < m.length(); ++i)
	{
		if (i)
			out += '.';
		out += alphabet.name(m[i]);
	}
	return out;
}

Monomial parse_monomial(Alphabet const &alphabet, std::string_view text)
{
	if (text.empty() || text == "1")
		return Monomial();
	std::vector<std::size_t> letters;
	std::size_t start = 0;
	while (true)
	{
		auto dot = text.find('.', start);
		auto tok = text.substr(start, dot == std::string_view::npos ? std::string_view::npos
		                                                             : dot - start);
		auto idx = alphabet.find(tok);
		if (!idx)
			throw std::invalid_argument("unknown generator '" + std::string(tok) + "'");
		letters.push_back(*idx);
		if (dot == std::string_view::npos)
			break;
		start = dot + 1;
	}
	return Monomial(alphabet, letters);
}

std::vector<Monomial> words_of_degree(Alphabet const &alphabet, int d)
{
	std::vector<Monomial> out;
	if (d < 0)
		return out;
	std::vector<std::size_t> cur;
	auto rec = [&](auto &&self, int remaining) -> void {
		if (remaining == 0)
		{
			out.emplace_back(alphabet, cur);
			return;
		}
		for (std::size_t g = 0; g < alphabet.size(); ++g)
			if (alphabet.degree(g) <= remaining)
			{
				cur.push_back(g);
				self(self, remaining - alphabet.degree(g));
				cur.pop_back();
			}
	};
	rec(rec, d);
	std::sort(out.begin(), out.end());
	return out;
}

// ------------------------------------------------------------------ Series

Series::Series(Alphabet alphabet, int truncation)
    : alphabet_(std::move(alphabet)), truncation_(truncation)
{
	if (truncation_ < 0)
		throw StructuralError("truncation degree must be non-negative");
}

Series Series::constant(Alphabet alphabet, int truncation, Scalar c)
{
	Series s(std::move(alphabet), truncation);
	s.add_term(Monomial(), c);
	return s;
}

Series Series::one(Alphabet alphabet, int truncation)
{
	return constant(std::move(alphabet), truncation, 1);
}

Series Series::generator(Alphabet alphabet, int truncation, std::size_t i)
{
	Monomial m(alphabet, {i});
	return monomial(std::move(alphabet), truncation, std::move(m));
}

Series Series::generator(Alphabet alphabet, int truncation, std::string_view name)
{
	auto i = alphabet.index(name);
	return generator(std::move(alphabet), truncation, i);
}

Series Series::monomial(Alphabet alphabet, int truncation, Monomial m, Scalar c)
{
	Series s(std::move(alphabet), truncation);
	s.add_term(m, c);
	return s;
}

Series Series::from_terms(Alphabet alphabet, int truncation, Terms terms)
{
	Series s(std::move(alphabet), truncation);
	for (auto &[m, c] : terms)
	{
		if (m.degree() > truncation)
			throw StructuralError("term of degree " + std::to_string(m.degree()) +
			                      " exceeds truncation " + std::to_string(truncation));
		s.add_term(m, c);
	}
	return s;
}

Scalar Series::coefficient(Monomial const &m) const
{
	auto it = terms_.find(m);
	return it == terms_.end() ? Scalar(0) : it->second;
}

Scalar Series::constant_term() const { return coefficient(Monomial()); }

void Series::add_term(Monomial const &m, Scalar const &c)
{
	if (m.degree() > truncation_ || sgn(c) == 0)
		return;
	auto [it, inserted] = terms_.try_emplace(m, c);
	if (!inserted)
	{
		it->second += c;
		if (sgn(it->second) == 0)
			terms_.erase(it);
	}
}

Series Series::homogeneous(int d) const
{
	Series s(alphabet_, truncation_);
	for (auto const &[m, c] : terms_)
		if (m.degree() == d)
			s.terms_.emplace_hint(s.terms_.end(), m, c);
	return s;
}

std::optional<int> Series::min_degree() const
{
	if (terms_.empty())
		return std::nullopt;
	return terms_.begin()->first.degree();
}

Series Series::restricted(int truncation) const
{
	if (truncation > truncation_)
		throw StructuralError("cannot raise the truncation of a series");
	Series s(alphabet_, truncation);
	for (auto const &[m, c] : terms_)
	{
		if (m.degree() > truncation)
			break;
		s.terms_.emplace_hint(s.terms_.end(), m, c);
	}
	return s;
}

void Series::check_compatible(Series const &other, char const *op) const
{
	if (!(alphabet_ == other.alphabet_))
		throw StructuralError(std::string(op) + ": alphabet mismatch");
	if (truncation_ != other.truncation_)
		throw StructuralError(std::string(op) + ": truncation mismatch (" +
		                      std::to_string(truncation_) + " vs " +
		                      std::to_string(other.truncation_) + ")");
}

Series &Series::operator+=(Series const &other)
{
	check_compatible(other, "add");
	for (auto const &[m, c] : other.terms_)
		add_term(m, c);
	return *this;
}

Series &Series::operator-=(Series const &other)
{
	check_compatible(other, "subtract");
	for (auto const &[m, c] : other.terms_)
		add_term(m, -c);
	return *this;
}

Series &Series::operator*=(Scalar const &c)
{
	if (sgn(c) == 0)
	{
		terms_.clear();
		return *this;
	}
	for (auto &[m, v] : terms_)
		v *= c;
	return *this;
}

Series operator*(Series const &a, Series const &b)
{
	a.check_compatible(b, "multiply");
	int const n = a.truncation_;
	Series out(a.alphabet_, n);
	Scalar prod;
	for (auto const &[ma, ca] : a.terms_)
	{
		int const room = n - ma.degree();
		if (room < 0)
			break;
		for (auto const &[mb, cb] : b.terms_)
		{
			if (mb.degree() > room)
				break;
			prod = ca * cb;
			out.add_term(ma * mb, prod);
		}
	}
	return out;
}

Series commutator(Series const &a, Series const &b) { return a * b - b * a; }

Series exp(Series const &a)
{
	if (sgn(a.constant_term()) != 0)
		throw DomainError("exp: argument must have zero constant term");
	auto result = Series::one(a.alphabet(), a.truncation());
	auto power = result;
	for (int k = 1; k <= a.truncation(); ++k)
	{
		power = power * a;
		if (power.is_zero())
			break;
		power *= Scalar(1, k);
		result += power;
	}
	return result;
}

Series log(Series const &a)
{
	if (a.constant_term() != 1)
		throw DomainError("log: argument must have constant term 1");
	auto b = a - Series::one(a.alphabet(), a.truncation());
	Series result(a.alphabet(), a.truncation());
	auto power = Series::one(a.alphabet(), a.truncation());
	for (int k = 1; k <= a.truncation(); ++k)
	{
		power = power * b;
		if (power.is_zero())
			break;
		result += power * Scalar(k % 2 ? 1 : -1, k);
	}
	return result;
}

Series inverse(Series const &a)
{
	Scalar c = a.constant_term();
	if (sgn(c) == 0)
		throw DomainError("inverse: constant term must be nonzero");
	Scalar cinv = 1 / c;
	// a = c (1 + b)  =>  a^-1 = c^-1 sum (-b)^k
	auto b = a * cinv - Series::one(a.alphabet(), a.truncation());
	auto minus_b = -b;
	auto result = Series::one(a.alphabet(), a.truncation());
	auto power = result;
	for (int k = 1; k <= a.truncation(); ++k)
	{
		power = power * minus_b;
		if (power.is_zero())
			break;
		result += power;
	}
	return result * cinv;
}

Series power(Series const &a, Scalar const &m)
{
	if (sgn(m) == 0)
		return Series::one(a.alphabet(), a.truncation());
	return exp(log(a) * m);
}

// ------------------------------------------------------------ substitution

Series substitute(Series const &f, std::vector<Series> const &images)
{
	if (images.size() != f.alphabet().size())
		throw StructuralError("substitute: every generator needs an image (" +
		                      std::to_string(f.alphabet().size()) + " expected, " +
		                      std::to_string(images.size()) + " given)");
	auto const &target = images.front().alphabet();
	int const n = images.front().truncation();
	for (auto const &img : images)
		if (!(img.alphabet() == target) || img.truncation() != n)
			throw StructuralError("substitute: images must share alphabet and truncation");

	Series result(target, n);
	auto const one = Series::one(target, n);

	// prefix products of the previous word, reused across the sorted terms
	std::vector<Series> prefix{one};
	std::vector<std::size_t> prev;
	for (auto const &[m, c] : f.terms())
	{
		auto letters = m.letters();
		std::size_t common = 0;
		while (common < prev.size() && common < letters.size() &&
		       prev[common] == letters[common])
			++common;
		prefix.resize(common + 1, one);
		for (std::size_t i = common; i < letters.size(); ++i)
			prefix.push_back(prefix.back() * images[letters[i]]);
		prev = std::move(letters);
		result += prefix.back() * c;
	}
	return result;
}

Series substitute_named(Series const &f, std::map<std::string, Series> const &assignment)
{
	std::vector<Series> images;
	images.reserve(f.alphabet().size());
	for (auto const &name : f.alphabet().names())
	{
		auto it = assignment.find(name);
		if (it == assignment.end())
			throw StructuralError("substitute: generator '" + name + "' is unassigned");
		images.push_back(it->second);
	}
	if (images.empty())
		throw StructuralError("substitute: empty assignment");
	return substitute(f, images);
}

Series substitute_group(Series const &f, std::vector<Series> const &group_args)
{
	std::vector<Series> logs;
	logs.reserve(group_args.size());
	for (auto const &g : group_args)
		logs.push_back(log(g));
	return substitute(f, logs);
}

// --------------------------------------------------------------- coproduct

Alphabet doubled(Alphabet const &alphabet)
{
	std::vector<std::string> names;
	std::vector<int> degrees;
	for (std::size_t i = 0; i < alphabet.size(); ++i)
	{
		names.push_back(alphabet.name(i) + "'");
		degrees.push_back(alphabet.degree(i));
	}
	for (std::size_t i = 0; i < alphabet.size(); ++i)
	{
		names.push_back(alphabet.name(i) + "''");
		degrees.push_back(alphabet.degree(i));
	}
	return Alphabet(std::move(names), std::move(degrees));
}

namespace {

Monomial tensor_word(Alphabet const &dbl, std::size_t k, std::vector<std::size_t> const &left,
                     std::vector<std::size_t> const &right)
{
	std::vector<std::size_t> w;
	w.reserve(left.size() + right.size());
	for (auto l : left)
		w.push_back(l);
	for (auto r : right)
		w.push_back(r + k);
	return Monomial(dbl, w);
}

} // namespace

Series tensor(Series const &a, Series const &b)
{
	if (!(a.alphabet() == b.alphabet()) || a.truncation() != b.truncation())
		throw StructuralError("tensor: alphabet or truncation mismatch");
	auto dbl = doubled(a.alphabet());
	std::size_t const k = a.alphabet().size();
	int const n = a.truncation();
	Series out(dbl, n);
	for (auto const &[ma, ca] : a.terms())
	{
		if (ma.degree() > n)
			break;
		auto la = ma.letters();
		for (auto const &[mb, cb] : b.terms())
		{
			if (ma.degree() + mb.degree() > n)
				break;
			out.add_term(tensor_word(dbl, k, la, mb.letters()), ca * cb);
		}
	}
	return out;
}

Series coproduct(Series const &f)
{
	auto dbl = doubled(f.alphabet());
	std::size_t const k = f.alphabet().size();
	Series out(dbl, f.truncation());
	std::vector<std::size_t> left, right;
	for (auto const &[m, c] : f.terms())
	{
		auto letters = m.letters();
		std::size_t const len = letters.size();
		if (len >= 8 * sizeof(unsigned long))
			throw StructuralError("coproduct: word too long");
		for (unsigned long mask = 0; mask < (1UL << len); ++mask)
		{
			left.clear();
			right.clear();
			for (std::size_t i = 0; i < len; ++i)
				((mask >> i) & 1UL ? left : right).push_back(letters[i]);
			out.add_term(tensor_word(dbl, k, left, right), c);
		}
	}
	return out;
}

Series grouplike_defect(Series const &f) { return coproduct(f) - tensor(f, f); }

bool is_grouplike(Series const &f)
{
	return f.constant_term() == 1 && grouplike_defect(f).is_zero();
}

bool is_primitive(Series const &a)
{
	auto one = Series::one(a.alphabet(), a.truncation());
	return (coproduct(a) - tensor(a, one) - tensor(one, a)).is_zero();
}

// ---------------------------------------------------------------- FreeWord

FreeWord::FreeWord(std::vector<int> letters)
{
	for (int l : letters)
	{
		if (l == 0)
			throw StructuralError("free word letters are nonzero signed indices");
		if (!letters_.empty() && letters_.back() == -l)
			letters_.pop_back();
		else
			letters_.push_back(l);
	}
}

FreeWord FreeWord::inverse() const
{
	std::vector<int> inv(letters_.rbegin(), letters_.rend());
	for (int &l : inv)
		l = -l;
	return FreeWord(std::move(inv));
}

FreeWord operator*(FreeWord const &a, FreeWord const &b)
{
	auto letters = a.letters_;
	letters.insert(letters.end(), b.letters_.begin(), b.letters_.end());
	return FreeWord(std::move(letters));
}

FreeWord parse_free_word(std::string_view text, std::vector<std::string> const &names)
{
	std::vector<int> letters;
	std::istringstream in{std::string(text)};
	std::string tok;
	while (in >> tok)
	{
		bool found = false;
		for (std::size_t i = 0; i < names.size() && !found; ++i)
		{
			if (tok == names[i])
			{
				letters.push_back(static_cast<int>(i) + 1);
				found = true;
			}
			else if (tok == names[i] + "i")
			{
				letters.push_back(-static_cast<int>(i) - 1);
				found = true;
			}
		}
		if (!found)
			throw std::invalid_argument("unknown free-group token '" + tok + "'");
	}
	return FreeWord(std::move(letters));
}

std::string format_free_word(FreeWord const &w, std::vector<std::string> const &names)
{
	std::string out;
	for (int l : w.letters())
	{
		if (!out.empty())
			out += ' ';
		out += names.at(static_cast<std::size_t>(std::abs(l) - 1));
		if (l < 0)
			out += 'i';
	}
	return out;
}

Series magnus(FreeWord const &w, Alphabet const &alphabet, int truncation)
{
	std::vector<Series> gens, invs;
	for (std::size_t i = 0; i < alphabet.size(); ++i)
	{
		auto x = Series::generator(alphabet, truncation, i);
		gens.push_back(exp(x));
		invs.push_back(exp(-x));
	}
	auto result = Series::one(alphabet, truncation);
	for (int l : w.letters())
	{
		auto idx = static_cast<std::size_t>(std::abs(l) - 1);
		if (idx >= alphabet.size())
			throw StructuralError("magnus: letter outside the alphabet");
		result = result * (l > 0 ? gens[idx] : invs[idx]);
	}
	return result;
}

std::string format_series(Series const &s)
{
	if (s.is_zero())
		return "0\n";
	std::string out;
	for (auto const &[m, c] : s.terms())
	{
		out += to_string(c);
		out += " * ";
		out += format_monomial(s.alphabet(), m);
		out += '\n';
	}
	return out;
}

} // namespace gtalg
