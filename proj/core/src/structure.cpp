#include "structure.hpp"

#include "gtalg/errors.hpp"

#include <algorithm>

namespace gtalg::detail {

void accumulate(Poly &p, Key const &k, Scalar const &c)
{
	if (sgn(c) == 0)
		return;
	auto [it, inserted] = p.try_emplace(k, c);
	if (!inserted)
	{
		it->second += c;
		if (sgn(it->second) == 0)
			p.erase(it);
	}
}

Poly basis(std::size_t i) { return Poly{{Key{i}, Scalar(1)}}; }

Poly scaled(Poly p, Scalar const &c)
{
	if (sgn(c) == 0)
		return {};
	for (auto &[k, v] : p)
		v *= c;
	return p;
}

Poly difference(Poly const &a, Poly const &b)
{
	Poly out = a;
	for (auto const &[k, c] : b)
		accumulate(out, k, -c);
	return out;
}

Poly from_vector(Vector const &v)
{
	Poly p;
	for (std::size_t i = 0; i < v.size(); ++i)
		accumulate(p, {i}, v[i]);
	return p;
}

Poly from_matrix(Matrix const &m)
{
	Poly p;
	for (std::size_t i = 0; i < m.rows(); ++i)
		for (std::size_t j = 0; j < m.cols(); ++j)
			accumulate(p, {i, j}, m(i, j));
	return p;
}

Matrix to_matrix(Poly const &p, std::size_t n)
{
	Matrix m(n, n);
	for (auto const &[k, c] : p)
		m(k.at(0), k.at(1)) = c;
	return m;
}

// ------------------------------------------------------------------ views

ProductView::ProductView(Tensor3 const &mult, Mask mask)
    : n_(mult.extent(0)), mask_(std::move(mask)), nz_(n_ * n_)
{
	for (std::size_t i = 0; i < n_; ++i)
		for (std::size_t j = 0; j < n_; ++j)
			for (std::size_t k = 0; k < n_; ++k)
				if (sgn(mult(i, j, k)) != 0)
					nz_[i * n_ + j].emplace_back(k, mult(i, j, k));
}

bool ProductView::total() const
{
	for (auto const &row : mask_)
		for (bool b : row)
			if (!b)
				return false;
	return true;
}

std::optional<Poly> ProductView::mul(Poly const &a, Poly const &b) const
{
	Poly out;
	for (auto const &[ka, ca] : a)
		for (auto const &[kb, cb] : b)
		{
			if (ka.size() != kb.size())
				throw StructuralError("tensor product of elements of different rank");
			// expand slot by slot
			std::vector<std::pair<Key, Scalar>> partial{{Key{}, ca * cb}};
			for (std::size_t s = 0; s < ka.size(); ++s)
			{
				if (!defined(ka[s], kb[s]))
					return std::nullopt;
				std::vector<std::pair<Key, Scalar>> next;
				for (auto const &[key, c] : partial)
					for (auto const &[k, m] : product(ka[s], kb[s]))
					{
						auto nk = key;
						nk.push_back(k);
						next.emplace_back(std::move(nk), c * m);
					}
				partial = std::move(next);
			}
			for (auto const &[key, c] : partial)
				accumulate(out, key, c);
		}
	return out;
}

Poly ProductView::mul_total(Poly const &a, Poly const &b) const
{
	auto p = mul(a, b);
	if (!p)
		throw DomainError("product is only partially defined");
	return *p;
}

CoproductView::CoproductView(Tensor3 const &comult) : n_(comult.extent(0)), nz_(n_)
{
	for (std::size_t i = 0; i < n_; ++i)
		for (std::size_t j = 0; j < n_; ++j)
			for (std::size_t k = 0; k < n_; ++k)
				if (sgn(comult(i, j, k)) != 0)
					nz_[i].emplace_back(j, k, comult(i, j, k));
}

Poly CoproductView::apply(Poly const &p, std::size_t slot) const
{
	Poly out;
	for (auto const &[key, c] : p)
		for (auto const &[a, b, d] : nz_[key.at(slot)])
		{
			Key nk;
			nk.reserve(key.size() + 1);
			nk.insert(nk.end(), key.begin(), key.begin() + static_cast<long>(slot));
			nk.push_back(a);
			nk.push_back(b);
			nk.insert(nk.end(), key.begin() + static_cast<long>(slot) + 1, key.end());
			accumulate(out, nk, c * d);
		}
	return out;
}

Poly permuted(Poly const &p, std::vector<std::size_t> const &order)
{
	Poly out;
	for (auto const &[key, c] : p)
	{
		Key nk(order.size());
		for (std::size_t s = 0; s < order.size(); ++s)
			nk[s] = key.at(order[s]);
		accumulate(out, nk, c);
	}
	return out;
}

Poly contract(Poly const &p, std::size_t slot, Vector const &functional)
{
	Poly out;
	for (auto const &[key, c] : p)
	{
		Key nk = key;
		nk.erase(nk.begin() + static_cast<long>(slot));
		accumulate(out, nk, c * functional.at(key.at(slot)));
	}
	return out;
}

std::string describe(Poly const &diff, std::vector<std::string> const &labels)
{
	if (diff.empty())
		return {};
	auto const &[key, c] = *diff.begin();
	std::string term;
	for (std::size_t s = 0; s < key.size(); ++s)
	{
		if (s)
			term += " (x) ";
		term += key[s] < labels.size() ? labels[key[s]] : std::to_string(key[s]);
	}
	if (key.empty())
		term = "1";
	return "sides differ by " + to_string(c) + " on " + term;
}

// ----------------------------------------------------------------- axioms

namespace {

std::vector<std::string> witness_labels(std::vector<std::size_t> const &w,
                                        std::vector<std::string> const &labels)
{
	std::vector<std::string> out;
	for (auto i : w)
		out.push_back(labels.at(i));
	return out;
}

void fail(AxiomCheck &c, std::vector<std::size_t> witness, Poly const &diff,
          std::vector<std::string> const &labels)
{
	c.verdict = Verdict::fails;
	std::string where;
	for (auto const &l : witness_labels(witness, labels))
		where += (where.empty() ? "" : ", ") + l;
	c.detail = "at (" + where + "): " + describe(diff, labels);
	c.witness = std::move(witness);
}

void finish(AxiomCheck &c, bool total)
{
	if (c.verdict == Verdict::holds && c.instances == 0 && !total)
		c.verdict = Verdict::vacuous;
}

} // namespace

AxiomCheck associativity(ProductView const &m, std::vector<std::string> const &labels)
{
	AxiomCheck c{"associativity"};
	std::size_t n = m.dim();
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
		{
			auto ij = m.mul(basis(i), basis(j));
			if (!ij)
				continue;
			for (std::size_t k = 0; k < n; ++k)
			{
				auto lhs = m.mul(*ij, basis(k));
				if (!lhs)
					continue;
				auto jk = m.mul(basis(j), basis(k));
				if (!jk)
					continue;
				auto rhs = m.mul(basis(i), *jk);
				if (!rhs)
					continue;
				++c.instances;
				auto diff = difference(*lhs, *rhs);
				if (!diff.empty())
				{
					fail(c, {i, j, k}, diff, labels);
					return c;
				}
			}
		}
	finish(c, m.total());
	return c;
}

AxiomCheck unit_law(ProductView const &m, Vector const &unit, std::vector<std::string> const &labels)
{
	AxiomCheck c{"unit"};
	auto u = from_vector(unit);
	for (std::size_t i = 0; i < m.dim(); ++i)
	{
		for (auto const &side : {m.mul(u, basis(i)), m.mul(basis(i), u)})
		{
			if (!side)
				continue;
			++c.instances;
			auto diff = difference(*side, basis(i));
			if (!diff.empty())
			{
				fail(c, {i}, diff, labels);
				return c;
			}
		}
	}
	finish(c, m.total());
	return c;
}

AxiomCheck coassociativity(CoproductView const &d, std::vector<std::string> const &labels)
{
	AxiomCheck c{"coassociativity"};
	for (std::size_t i = 0; i < d.dim(); ++i)
	{
		auto di = d.apply(basis(i), 0);
		++c.instances;
		auto diff = difference(d.apply(di, 0), d.apply(di, 1));
		if (!diff.empty())
		{
			fail(c, {i}, diff, labels);
			return c;
		}
	}
	return c;
}

AxiomCheck counit_law(CoproductView const &d, Vector const &counit,
                      std::vector<std::string> const &labels)
{
	AxiomCheck c{"counit"};
	for (std::size_t i = 0; i < d.dim(); ++i)
	{
		auto di = d.apply(basis(i), 0);
		for (std::size_t slot : {0u, 1u})
		{
			++c.instances;
			auto diff = difference(contract(di, slot, counit), basis(i));
			if (!diff.empty())
			{
				fail(c, {i}, diff, labels);
				return c;
			}
		}
	}
	return c;
}

AxiomCheck comult_multiplicative(ProductView const &m, CoproductView const &d,
                                 std::vector<std::string> const &labels)
{
	AxiomCheck c{"coproduct multiplicative"};
	std::size_t n = m.dim();
	std::vector<Poly> delta(n);
	for (std::size_t i = 0; i < n; ++i)
		delta[i] = d.apply(basis(i), 0);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
		{
			auto ij = m.mul(basis(i), basis(j));
			if (!ij)
				continue;
			auto rhs = m.mul(delta[i], delta[j]);
			if (!rhs)
				continue;
			++c.instances;
			auto diff = difference(d.apply(*ij, 0), *rhs);
			if (!diff.empty())
			{
				fail(c, {i, j}, diff, labels);
				return c;
			}
		}
	finish(c, m.total());
	return c;
}

AxiomCheck counit_multiplicative(ProductView const &m, Vector const &counit,
                                 std::vector<std::string> const &labels)
{
	AxiomCheck c{"counit multiplicative"};
	std::size_t n = m.dim();
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
		{
			if (!m.defined(i, j))
				continue;
			++c.instances;
			Scalar lhs = 0;
			for (auto const &[k, v] : m.product(i, j))
				lhs += v * counit[k];
			Scalar diff = lhs - counit[i] * counit[j];
			if (sgn(diff) != 0)
			{
				fail(c, {i, j}, Poly{{Key{}, diff}}, labels);
				return c;
			}
		}
	finish(c, m.total());
	return c;
}

AxiomCheck comult_unital(CoproductView const &d, Vector const &unit,
                         std::vector<std::string> const &labels)
{
	AxiomCheck c{"coproduct unital"};
	c.instances = 1;
	auto u = from_vector(unit);
	Poly uu;
	for (auto const &[ka, ca] : u)
		for (auto const &[kb, cb] : u)
			accumulate(uu, {ka[0], kb[0]}, ca * cb);
	auto diff = difference(d.apply(u, 0), uu);
	if (!diff.empty())
		fail(c, {}, diff, labels);
	return c;
}

AxiomCheck counit_unital(Vector const &counit, Vector const &unit)
{
	AxiomCheck c{"counit unital"};
	c.instances = 1;
	Scalar v = 0;
	for (std::size_t i = 0; i < unit.size(); ++i)
		v += counit[i] * unit[i];
	if (v != 1)
	{
		c.verdict = Verdict::fails;
		c.detail = "counit of the unit is " + to_string(v);
	}
	return c;
}

Report bialgebra_axioms(ProductView const &m, Vector const *unit, CoproductView const &d,
                        Vector const &counit, std::vector<std::string> const &labels)
{
	Report r;
	r.checks.push_back(associativity(m, labels));
	if (unit)
		r.checks.push_back(unit_law(m, *unit, labels));
	r.checks.push_back(coassociativity(d, labels));
	r.checks.push_back(counit_law(d, counit, labels));
	r.checks.push_back(comult_multiplicative(m, d, labels));
	r.checks.push_back(counit_multiplicative(m, counit, labels));
	if (unit)
	{
		r.checks.push_back(comult_unital(d, *unit, labels));
		r.checks.push_back(counit_unital(counit, *unit));
	}
	return r;
}

} // namespace gtalg::detail
