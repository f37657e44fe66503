#include "gtalg/ihara.hpp"

#include "gtalg/errors.hpp"

#include <algorithm>
#include <numeric>

namespace gtalg {

// ------------------------------------------------------------------- Ihara

LieElement ihara_derivation(LieElement const &f, LieElement const &a)
{
	if (!(f.alphabet() == a.alphabet()) || f.truncation() != a.truncation())
		throw StructuralError("ihara: alphabet or truncation mismatch");
	auto const &alpha = f.alphabet();
	if (alpha.size() != 2)
		throw StructuralError("ihara: the free Lie algebra must have two generators");
	int const n = f.truncation();

	auto F = embed_lie(f);
	auto Y = Series::generator(alpha, n, 1);
	auto image_of_y = commutator(Y, F);

	auto A = embed_lie(a);
	Series out(alpha, n);
	for (auto const &[w, c] : A.terms())
		for (std::size_t i = 0; i < w.length(); ++i)
		{
			if (w[i] != 1)
				continue;
			auto prefix = Series::monomial(alpha, n, w.slice(alpha, 0, i), c);
			auto suffix = Series::monomial(alpha, n, w.slice(alpha, i + 1, w.length() - i - 1));
			out += prefix * image_of_y * suffix;
		}
	return project_lie(out);
}

LieElement ihara_bracket(LieElement const &f, LieElement const &g)
{
	return ihara_derivation(f, g) - ihara_derivation(g, f) + lie_bracket(f, g);
}

bool check_b5(LieElement const &f, LieElement const &h, B5Bracket bracket)
{
	if (bracket == B5Bracket::plain)
		return lie_bracket(f, h).is_zero();
	return ihara_bracket(f, h).is_zero();
}

// ------------------------------------------------------------ PolyFunction

PolyFunction::PolyFunction(std::size_t variables) : variables_(variables) {}

PolyFunction PolyFunction::constant(std::size_t variables, Scalar c)
{
	PolyFunction p(variables);
	p.add_term(Exponents(variables, 0), c);
	return p;
}

PolyFunction PolyFunction::coordinate(std::size_t variables, std::size_t i)
{
	if (i >= variables)
		throw StructuralError("coordinate index out of range");
	Exponents e(variables, 0);
	e[i] = 1;
	PolyFunction p(variables);
	p.add_term(e, 1);
	return p;
}

unsigned PolyFunction::degree() const
{
	unsigned d = 0;
	for (auto const &[e, c] : terms_)
		d = std::max(d, std::accumulate(e.begin(), e.end(), 0u));
	return d;
}

void PolyFunction::add_term(Exponents const &e, Scalar const &c)
{
	if (e.size() != variables_)
		throw StructuralError("polynomial: exponent vector of the wrong length");
	if (sgn(c) == 0)
		return;
	auto [it, inserted] = terms_.try_emplace(e, c);
	if (!inserted)
	{
		it->second += c;
		if (sgn(it->second) == 0)
			terms_.erase(it);
	}
}

PolyFunction PolyFunction::derivative(std::size_t i) const
{
	PolyFunction out(variables_);
	for (auto const &[e, c] : terms_)
	{
		if (e[i] == 0)
			continue;
		auto d = e;
		--d[i];
		out.add_term(d, c * e[i]);
	}
	return out;
}

void PolyFunction::check_compatible(PolyFunction const &other) const
{
	if (variables_ != other.variables_)
		throw StructuralError("polynomials in different numbers of variables");
}

PolyFunction &PolyFunction::operator+=(PolyFunction const &other)
{
	check_compatible(other);
	for (auto const &[e, c] : other.terms_)
		add_term(e, c);
	return *this;
}

PolyFunction &PolyFunction::operator-=(PolyFunction const &other)
{
	check_compatible(other);
	for (auto const &[e, c] : other.terms_)
		add_term(e, -c);
	return *this;
}

PolyFunction &PolyFunction::operator*=(Scalar const &c)
{
	if (sgn(c) == 0)
		terms_.clear();
	for (auto &[e, v] : terms_)
		v *= c;
	return *this;
}

PolyFunction operator*(PolyFunction const &a, PolyFunction const &b)
{
	a.check_compatible(b);
	PolyFunction out(a.variables_);
	for (auto const &[ea, ca] : a.terms_)
		for (auto const &[eb, cb] : b.terms_)
		{
			auto e = ea;
			for (std::size_t i = 0; i < e.size(); ++i)
				e[i] += eb[i];
			out.add_term(e, ca * cb);
		}
	return out;
}

std::string format_poly(PolyFunction const &p, std::vector<std::string> const &names)
{
	if (p.is_zero())
		return "0";
	std::string out;
	for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
	{
		auto const &[e, c] = *it;
		if (!out.empty())
			out += " + ";
		out += to_string(c);
		std::string mono;
		for (std::size_t i = 0; i < e.size(); ++i)
		{
			if (e[i] == 0)
				continue;
			if (!mono.empty())
				mono += "*";
			mono += i < names.size() ? names[i] : "xi" + std::to_string(i);
			if (e[i] > 1)
				mono += "^" + std::to_string(e[i]);
		}
		if (!mono.empty())
			out += " * " + mono;
	}
	return out;
}

// ----------------------------------------------------- MetrizedLieAlgebra

MetrizedLieAlgebra::MetrizedLieAlgebra(std::vector<std::string> labels, Tensor3 structure,
                                       Matrix metric)
    : labels_(std::move(labels)), c_(std::move(structure)), metric_(std::move(metric))
{
	std::size_t const m = labels_.size();
	if (m == 0)
		throw StructuralError("Lie algebra: dimension must be positive");
	for (int axis = 0; axis < 3; ++axis)
		if (c_.extent(axis) != m)
			throw StructuralError("Lie algebra: structure constants do not match the basis size");
	if (metric_.rows() != m || metric_.cols() != m)
		throw StructuralError("Lie algebra: metric does not match the basis size");

	auto where = [&](std::initializer_list<std::size_t> idx) {
		std::string s;
		for (auto i : idx)
			s += (s.empty() ? "" : ", ") + labels_[i];
		return " at (" + s + ")";
	};

	for (std::size_t i = 0; i < m; ++i)
		for (std::size_t j = 0; j < m; ++j)
			for (std::size_t k = 0; k < m; ++k)
				if (c_(i, j, k) != -c_(j, i, k))
					throw DomainError("Lie algebra: bracket not antisymmetric" + where({i, j}));

	// Jacobi on every basis triple, one output coordinate at a time
	for (std::size_t i = 0; i < m; ++i)
		for (std::size_t j = 0; j < m; ++j)
			for (std::size_t k = 0; k < m; ++k)
				for (std::size_t out = 0; out < m; ++out)
				{
					Scalar s = 0;
					for (std::size_t l = 0; l < m; ++l)
						s += c_(i, j, l) * c_(l, k, out) + c_(j, k, l) * c_(l, i, out) +
						     c_(k, i, l) * c_(l, j, out);
					if (sgn(s) != 0)
						throw DomainError("Lie algebra: Jacobi identity fails" + where({i, j, k}));
				}

	for (std::size_t i = 0; i < m; ++i)
		for (std::size_t j = 0; j < m; ++j)
			if (metric_(i, j) != metric_(j, i))
				throw DomainError("Lie algebra: metric not symmetric" + where({i, j}));
	if (rank(metric_) != m)
		throw DomainError("Lie algebra: metric is degenerate");
	for (std::size_t i = 0; i < m; ++i)
		for (std::size_t j = 0; j < m; ++j)
			for (std::size_t k = 0; k < m; ++k)
			{
				Scalar lhs = 0, rhs = 0;
				for (std::size_t l = 0; l < m; ++l)
				{
					lhs += c_(i, j, l) * metric_(l, k);
					rhs += metric_(i, l) * c_(j, k, l);
				}
				if (lhs != rhs)
					throw DomainError("Lie algebra: metric not invariant" + where({i, j, k}));
			}
}

std::vector<PolyFunction> MetrizedLieAlgebra::bracket(std::vector<PolyFunction> const &a,
                                                      std::vector<PolyFunction> const &b) const
{
	std::size_t const m = dim();
	if (a.size() != m || b.size() != m)
		throw StructuralError("Lie algebra: element with the wrong number of coordinates");
	std::size_t vars = a[0].variables();
	std::vector<PolyFunction> out(m, PolyFunction(vars));
	for (std::size_t i = 0; i < m; ++i)
	{
		if (a[i].is_zero())
			continue;
		for (std::size_t j = 0; j < m; ++j)
		{
			if (b[j].is_zero())
				continue;
			auto ab = a[i] * b[j];
			for (std::size_t k = 0; k < m; ++k)
				if (sgn(c_(i, j, k)) != 0)
					out[k] += c_(i, j, k) * ab;
		}
	}
	return out;
}

// ---------------------------------------------------------------- Kirillov

PolyFunction kirillov_bracket(PolyFunction const &f, PolyFunction const &g,
                              MetrizedLieAlgebra const &lie)
{
	std::size_t const m = lie.dim();
	if (f.variables() != m || g.variables() != m)
		throw StructuralError("kirillov: polynomials must be functions on the dual of g");
	PolyFunction out(m);
	for (std::size_t i = 0; i < m; ++i)
	{
		auto fi = f.derivative(i);
		if (fi.is_zero())
			continue;
		for (std::size_t j = 0; j < m; ++j)
		{
			auto gj = g.derivative(j);
			if (gj.is_zero())
				continue;
			auto prod = fi * gj;
			for (std::size_t k = 0; k < m; ++k)
				if (sgn(lie.structure()(i, j, k)) != 0)
					out += lie.structure()(i, j, k) * (PolyFunction::coordinate(m, k) * prod);
		}
	}
	return out;
}

PolyFunction casimir(MetrizedLieAlgebra const &lie)
{
	std::size_t const m = lie.dim();
	auto inv = *inverse(lie.metric());
	PolyFunction out(m);
	for (std::size_t i = 0; i < m; ++i)
		for (std::size_t j = 0; j < m; ++j)
			out += inv(i, j) * (PolyFunction::coordinate(m, i) * PolyFunction::coordinate(m, j));
	return out;
}

Assignment coordinate_assignment(MetrizedLieAlgebra const &lie)
{
	Assignment a;
	for (std::size_t k = 0; k < lie.dim(); ++k)
		a.push_back(PolyFunction::coordinate(lie.dim(), k));
	return a;
}

Assignment metric_dual_assignment(MetrizedLieAlgebra const &lie)
{
	std::size_t const m = lie.dim();
	auto inv = *inverse(lie.metric());
	Assignment a(m, PolyFunction(m));
	for (std::size_t j = 0; j < m; ++j)
		for (std::size_t k = 0; k < m; ++k)
			a[k] += inv(j, k) * PolyFunction::coordinate(m, j);
	return a;
}

Assignment constant_assignment(MetrizedLieAlgebra const &lie, std::size_t i)
{
	std::size_t const m = lie.dim();
	if (i >= m)
		throw StructuralError("constant_assignment: basis index out of range");
	Assignment a(m, PolyFunction(m));
	a[i] = PolyFunction::constant(m, 1);
	return a;
}

PolyFunction evaluate_on_g(LieElement const &f, MetrizedLieAlgebra const &lie, Assignment const &a,
                           Assignment const &b)
{
	std::size_t const m = lie.dim();
	if (f.alphabet().size() != 2)
		throw StructuralError("evaluate_on_g: the free Lie algebra must have two generators");
	if (a.size() != m || b.size() != m)
		throw StructuralError("evaluate_on_g: assignments must have one coordinate per basis element");
	for (auto const *as : {&a, &b})
		for (auto const &p : *as)
			if (p.variables() != m)
				throw StructuralError("evaluate_on_g: assignment coordinates must be functions on the dual of g");

	std::map<Monomial, Assignment> memo;
	auto value = [&](auto &&self, Monomial const &w) -> Assignment {
		if (w.length() == 1)
			return w[0] == 0 ? a : b;
		if (auto it = memo.find(w); it != memo.end())
			return it->second;
		auto [u, v] = standard_factorization(f.alphabet(), w);
		auto out = lie.bracket(self(self, u), self(self, v));
		memo.emplace(w, out);
		return out;
	};

	Assignment total(m, PolyFunction(m));
	for (auto const &[w, c] : f.coordinates())
	{
		auto x = value(value, w);
		for (std::size_t k = 0; k < m; ++k)
			total[k] += c * x[k];
	}
	PolyFunction out(m);
	for (std::size_t k = 0; k < m; ++k)
		out += PolyFunction::coordinate(m, k) * total[k];
	return out;
}

bool check_b5_evaluated(LieElement const &f, LieElement const &h, MetrizedLieAlgebra const &lie,
                        Assignment const &a, Assignment const &b)
{
	return kirillov_bracket(evaluate_on_g(f, lie, a, b), evaluate_on_g(h, lie, a, b), lie).is_zero();
}

} // namespace gtalg
