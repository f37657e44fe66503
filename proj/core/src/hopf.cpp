#include "gtalg/hopf.hpp"

#include "gtalg/errors.hpp"
#include "structure.hpp"

namespace gtalg {

using namespace detail;

namespace {

void require_square(Matrix const &m, std::size_t n, char const *what)
{
	if (m.rows() != n || m.cols() != n)
		throw StructuralError(std::string(what) + ": expected a " + std::to_string(n) + "x" +
		                      std::to_string(n) + " matrix");
}

/// Inserts the unit of H into tensor slot `slot`.
Poly insert_unit(Poly const &p, std::size_t slot, Vector const &unit)
{
	Poly out;
	for (auto const &[key, c] : p)
		for (std::size_t i = 0; i < unit.size(); ++i)
		{
			if (sgn(unit[i]) == 0)
				continue;
			Key nk = key;
			nk.insert(nk.begin() + static_cast<long>(slot), i);
			accumulate(out, nk, c * unit[i]);
		}
	return out;
}

AxiomCheck compare(std::string axiom, Poly const &lhs, Poly const &rhs,
                   std::vector<std::string> const &labels)
{
	AxiomCheck c{std::move(axiom)};
	c.instances = 1;
	auto diff = difference(lhs, rhs);
	if (!diff.empty())
	{
		c.verdict = Verdict::fails;
		c.witness = diff.begin()->first;
		c.detail = describe(diff, labels);
	}
	return c;
}

std::string toggle_star(std::string const &label)
{
	if (!label.empty() && label.back() == '*')
		return label.substr(0, label.size() - 1);
	return label + "*";
}

} // namespace

void HopfData::validate() const
{
	std::size_t n = labels.size();
	if (n == 0)
		throw StructuralError("hopf: dimension must be positive");
	for (int axis = 0; axis < 3; ++axis)
	{
		if (mult.extent(axis) != n)
			throw StructuralError("hopf: mult does not match the basis size");
		if (comult.extent(axis) != n)
			throw StructuralError("hopf: comult does not match the basis size");
	}
	if (unit.size() != n)
		throw StructuralError("hopf: unit does not match the basis size");
	if (counit.size() != n)
		throw StructuralError("hopf: counit does not match the basis size");
	if (antipode)
		require_square(*antipode, n, "hopf: antipode");
}

Report check_bialgebra(HopfData const &h)
{
	h.validate();
	return bialgebra_axioms(ProductView(h.mult), &h.unit, CoproductView(h.comult), h.counit,
	                        h.labels);
}

Report check_antipode(HopfData const &h, Matrix const &s)
{
	h.validate();
	require_square(s, h.dim(), "antipode");
	ProductView m(h.mult);
	CoproductView d(h.comult);
	auto apply_s = [&](std::size_t i) {
		Poly p;
		for (std::size_t j = 0; j < h.dim(); ++j)
			accumulate(p, {j}, s(i, j));
		return p;
	};
	AxiomCheck c{"antipode"};
	for (std::size_t i = 0; i < h.dim() && c.verdict == Verdict::holds; ++i)
	{
		Poly expected = scaled(from_vector(h.unit), h.counit[i]);
		Poly left, right;
		for (auto const &[a, b, coef] : d.of(i))
		{
			for (auto const &[k, v] : m.mul_total(apply_s(a), basis(b)))
				accumulate(left, k, coef * v);
			for (auto const &[k, v] : m.mul_total(basis(a), apply_s(b)))
				accumulate(right, k, coef * v);
		}
		c.instances += 2;
		for (auto const *side : {&left, &right})
		{
			auto diff = difference(*side, expected);
			if (!diff.empty())
			{
				c.verdict = Verdict::fails;
				c.witness = {i};
				c.detail = "at (" + h.labels[i] + "): " + describe(diff, h.labels);
				break;
			}
		}
	}
	Report r;
	r.checks.push_back(std::move(c));
	return r;
}

Report check_hopf(HopfData const &h)
{
	auto r = check_bialgebra(h);
	if (h.antipode)
	{
		r.append(check_antipode(h, *h.antipode));
		return r;
	}
	AxiomCheck c{"antipode exists"};
	c.instances = 1;
	if (!solve_antipode(h))
	{
		c.verdict = Verdict::fails;
		c.detail = "the antipode equations have no solution";
	}
	r.checks.push_back(std::move(c));
	return r;
}

std::optional<Matrix> solve_antipode(HopfData const &h)
{
	h.validate();
	std::size_t n = h.dim();
	CoproductView d(h.comult);
	// unknown S(a, j) at column a * n + j; rows (side, i, k)
	Matrix a(2 * n * n, n * n);
	Vector b(2 * n * n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t k = 0; k < n; ++k)
		{
			std::size_t left = i * n + k;
			std::size_t right = n * n + left;
			b[left] = b[right] = h.counit[i] * h.unit[k];
			for (auto const &[x, y, coef] : d.of(i))
				for (std::size_t j = 0; j < n; ++j)
				{
					if (sgn(h.mult(j, y, k)) != 0)
						a(left, x * n + j) += coef * h.mult(j, y, k);
					if (sgn(h.mult(x, j, k)) != 0)
						a(right, y * n + j) += coef * h.mult(x, j, k);
				}
		}
	auto sol = solve_affine(a, b);
	if (!sol.feasible())
		return std::nullopt;
	// the convolution inverse is unique, so free variables cannot occur
	Matrix s(n, n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			s(i, j) = (*sol.particular)[i * n + j];
	return s;
}

RMatrix tensor_multiply(HopfData const &h, RMatrix const &a, RMatrix const &b)
{
	h.validate();
	require_square(a, h.dim(), "tensor_multiply");
	require_square(b, h.dim(), "tensor_multiply");
	ProductView m(h.mult);
	return to_matrix(m.mul_total(from_matrix(a), from_matrix(b)), h.dim());
}

std::optional<RMatrix> tensor_inverse(HopfData const &h, RMatrix const &r)
{
	h.validate();
	std::size_t n = h.dim();
	require_square(r, n, "tensor_inverse");
	ProductView m(h.mult);
	auto rp = from_matrix(r);
	Matrix a(n * n, n * n);
	for (std::size_t c = 0; c < n; ++c)
		for (std::size_t d = 0; d < n; ++d)
			for (auto const &[key, v] : m.mul_total(rp, Poly{{Key{c, d}, Scalar(1)}}))
				a(key[0] * n + key[1], c * n + d) = v;
	Vector one(n * n);
	Poly one_poly;
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
		{
			one[i * n + j] = h.unit[i] * h.unit[j];
			accumulate(one_poly, {i, j}, one[i * n + j]);
		}
	auto sol = solve_affine(a, one);
	if (!sol.feasible())
		return std::nullopt;
	Matrix x(n, n);
	for (std::size_t i = 0; i < n * n; ++i)
		x(i / n, i % n) = (*sol.particular)[i];
	// a right inverse in a finite-dimensional algebra is two-sided; checked anyway
	if (!difference(m.mul_total(from_matrix(x), rp), one_poly).empty())
		return std::nullopt;
	return x;
}

Report check_quasitriangular(HopfData const &h, RMatrix const &r)
{
	h.validate();
	std::size_t n = h.dim();
	require_square(r, n, "R-matrix");
	ProductView m(h.mult);
	CoproductView d(h.comult);
	auto rp = from_matrix(r);
	Report rep;

	AxiomCheck inv{"R invertible"};
	inv.instances = 1;
	if (!tensor_inverse(h, r))
	{
		inv.verdict = Verdict::fails;
		inv.detail = "R has no inverse in H (x) H";
	}
	rep.checks.push_back(inv);

	AxiomCheck braid{"R Delta = Delta^op R"};
	for (std::size_t a = 0; a < n; ++a)
	{
		auto da = d.apply(basis(a), 0);
		++braid.instances;
		auto diff = difference(m.mul_total(rp, da), m.mul_total(permuted(da, {1, 0}), rp));
		if (!diff.empty())
		{
			braid.verdict = Verdict::fails;
			braid.witness = {a};
			braid.detail = "at (" + h.labels[a] + "): " + describe(diff, h.labels);
			break;
		}
	}
	rep.checks.push_back(braid);

	auto r13 = insert_unit(rp, 1, h.unit);
	auto r23 = insert_unit(rp, 0, h.unit);
	auto r12 = insert_unit(rp, 2, h.unit);
	rep.checks.push_back(compare("(Delta x id) R = R13 R23", d.apply(rp, 0),
	                             m.mul_total(r13, r23), h.labels));
	rep.checks.push_back(compare("(id x Delta) R = R13 R12", d.apply(rp, 1),
	                             m.mul_total(r13, r12), h.labels));
	return rep;
}

Report check_coquasitriangular(HopfData const &h, CoquasiForm const &r)
{
	h.validate();
	std::size_t n = h.dim();
	require_square(r, n, "coquasitriangular form");
	ProductView m(h.mult);
	CoproductView d(h.comult);
	Report rep;

	// convolution inverse: sum r(a1, b1) rbar(a2, b2) = eps(a) eps(b)
	AxiomCheck inv{"r convolution invertible"};
	inv.instances = 1;
	{
		Matrix a(n * n, n * n);
		Vector b(n * n);
		for (std::size_t x = 0; x < n; ++x)
			for (std::size_t y = 0; y < n; ++y)
			{
				b[x * n + y] = h.counit[x] * h.counit[y];
				for (auto const &[x1, x2, cx] : d.of(x))
					for (auto const &[y1, y2, cy] : d.of(y))
						a(x * n + y, x2 * n + y2) += cx * cy * r(x1, y1);
			}
		auto sol = solve_affine(a, b);
		bool ok = sol.feasible();
		if (ok)
		{
			auto const &rb = *sol.particular;
			for (std::size_t x = 0; x < n && ok; ++x)
				for (std::size_t y = 0; y < n && ok; ++y)
				{
					Scalar v = 0;
					for (auto const &[x1, x2, cx] : d.of(x))
						for (auto const &[y1, y2, cy] : d.of(y))
							v += cx * cy * rb[x1 * n + y1] * r(x2, y2);
					ok = v == h.counit[x] * h.counit[y];
				}
		}
		if (!ok)
		{
			inv.verdict = Verdict::fails;
			inv.detail = "r has no convolution inverse";
		}
	}
	rep.checks.push_back(inv);

	AxiomCheck comm{"r(a1, b1) a2 b2 = b1 a1 r(a2, b2)"};
	for (std::size_t x = 0; x < n && comm.verdict == Verdict::holds; ++x)
		for (std::size_t y = 0; y < n; ++y)
		{
			Poly lhs, rhs;
			for (auto const &[x1, x2, cx] : d.of(x))
				for (auto const &[y1, y2, cy] : d.of(y))
				{
					for (auto const &[k, v] : m.product(x2, y2))
						accumulate(lhs, {k}, cx * cy * r(x1, y1) * v);
					for (auto const &[k, v] : m.product(y1, x1))
						accumulate(rhs, {k}, cx * cy * r(x2, y2) * v);
				}
			++comm.instances;
			auto diff = difference(lhs, rhs);
			if (!diff.empty())
			{
				comm.verdict = Verdict::fails;
				comm.witness = {x, y};
				comm.detail = "at (" + h.labels[x] + ", " + h.labels[y] + "): " + describe(diff, h.labels);
				break;
			}
		}
	rep.checks.push_back(comm);

	AxiomCheck left{"r(ab, c) = r(a, c1) r(b, c2)"};
	AxiomCheck right{"r(a, bc) = r(a1, c) r(a2, b)"};
	for (std::size_t x = 0; x < n; ++x)
		for (std::size_t y = 0; y < n; ++y)
			for (std::size_t z = 0; z < n; ++z)
			{
				if (left.verdict == Verdict::holds)
				{
					Scalar lhs = 0, rhs = 0;
					for (auto const &[k, v] : m.product(x, y))
						lhs += v * r(k, z);
					for (auto const &[z1, z2, cz] : d.of(z))
						rhs += cz * r(x, z1) * r(y, z2);
					++left.instances;
					if (lhs != rhs)
					{
						left.verdict = Verdict::fails;
						left.witness = {x, y, z};
						left.detail = "sides differ by " + to_string(lhs - rhs);
					}
				}
				if (right.verdict == Verdict::holds)
				{
					Scalar lhs = 0, rhs = 0;
					for (auto const &[k, v] : m.product(y, z))
						lhs += v * r(x, k);
					for (auto const &[x1, x2, cx] : d.of(x))
						rhs += cx * r(x1, z) * r(x2, y);
					++right.instances;
					if (lhs != rhs)
					{
						right.verdict = Verdict::fails;
						right.witness = {x, y, z};
						right.detail = "sides differ by " + to_string(lhs - rhs);
					}
				}
			}
	rep.checks.push_back(left);
	rep.checks.push_back(right);
	return rep;
}

HopfData dual_hopf(HopfData const &h)
{
	h.validate();
	std::size_t n = h.dim();
	HopfData out;
	for (auto const &l : h.labels)
		out.labels.push_back(toggle_star(l));
	out.mult = Tensor3(n, n, n);
	out.comult = Tensor3(n, n, n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			for (std::size_t k = 0; k < n; ++k)
			{
				out.mult(i, j, k) = h.comult(k, i, j);
				out.comult(i, j, k) = h.mult(j, k, i);
			}
	out.unit = h.counit;
	out.counit = h.unit;
	if (h.antipode)
		out.antipode = h.antipode->transposed();
	return out;
}

DrinfeldDouble drinfeld_double(HopfData const &h)
{
	h.validate();
	std::size_t const n = h.dim();
	auto s = h.antipode ? std::optional<Matrix>(*h.antipode) : solve_antipode(h);
	if (!s)
		throw DomainError("drinfeld_double: H has no antipode");
	auto s_inv = inverse(*s);
	if (!s_inv)
		throw DomainError("drinfeld_double: the antipode is not invertible");

	CoproductView d(h.comult);
	// Delta^2(e_b) = sum e_b1 (x) e_b2 (x) e_b3
	std::vector<Poly> delta2(n);
	for (std::size_t b = 0; b < n; ++b)
		delta2[b] = d.apply(d.apply(basis(b), 0), 0);

	std::size_t const nn = n * n;
	HopfData out;
	for (std::size_t a = 0; a < n; ++a)
		for (std::size_t b = 0; b < n; ++b)
			out.labels.push_back(toggle_star(h.labels[a]) + "#" + h.labels[b]);
	out.mult = Tensor3(nn, nn, nn);
	out.comult = Tensor3(nn, nn, nn);
	out.unit = Vector(nn);
	out.counit = Vector(nn);

	for (std::size_t a = 0; a < n; ++a)
		for (std::size_t b = 0; b < n; ++b)
		{
			out.unit[a * n + b] = h.counit[a] * h.unit[b];
			out.counit[a * n + b] = h.unit[a] * h.counit[b];
		}

	for (std::size_t b = 0; b < n; ++b)
		for (std::size_t c = 0; c < n; ++c)
		{
			// g = e^c(S^-1(h3) - h1) summed against h2, for h = e_b:
			// collect (y, b2) -> coefficient of e^y # e_b2 before multiplying
			Poly twisted;
			for (auto const &[key, coef] : delta2[b])
			{
				std::size_t b1 = key[0], b2 = key[1], b3 = key[2];
				for (std::size_t y = 0; y < n; ++y)
				{
					Scalar g = 0;
					for (std::size_t t = 0; t < n; ++t)
					{
						if (sgn((*s_inv)(b3, t)) == 0)
							continue;
						for (std::size_t u = 0; u < n; ++u)
							if (sgn(h.mult(t, y, u)) != 0)
								g += (*s_inv)(b3, t) * h.mult(t, y, u) * h.mult(u, b1, c);
					}
					accumulate(twisted, {y, b2}, coef * g);
				}
			}
			for (std::size_t a = 0; a < n; ++a)
				for (std::size_t dd = 0; dd < n; ++dd)
					for (auto const &[key, g] : twisted)
					{
						std::size_t y = key[0], b2 = key[1];
						for (std::size_t w = 0; w < n; ++w)
						{
							// e^a e^y = sum_w comult(w, a, y) e^w in H*
							if (sgn(h.comult(w, a, y)) == 0)
								continue;
							for (std::size_t v = 0; v < n; ++v)
								if (sgn(h.mult(b2, dd, v)) != 0)
									out.mult(a * n + b, c * n + dd, w * n + v) +=
									    g * h.comult(w, a, y) * h.mult(b2, dd, v);
						}
					}
		}

	for (std::size_t a = 0; a < n; ++a)
		for (std::size_t b = 0; b < n; ++b)
			for (std::size_t x = 0; x < n; ++x)
				for (std::size_t y = 0; y < n; ++y)
				{
					if (sgn(h.mult(x, y, a)) == 0)
						continue;
					for (auto const &[p, q, cb] : d.of(b))
						out.comult(a * n + b, y * n + p, x * n + q) += h.mult(x, y, a) * cb;
				}

	Matrix r(nn, nn);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			for (std::size_t k = 0; k < n; ++k)
				r(j * n + i, i * n + k) += h.counit[j] * h.unit[k];

	out.antipode = solve_antipode(out);
	if (!out.antipode)
		throw DomainError("drinfeld_double: the double has no antipode");
	return {std::move(out), std::move(r)};
}

Report check_hopf_pairing(HopfData const &h, Matrix const &p)
{
	h.validate();
	std::size_t n = h.dim();
	require_square(p, n, "pairing");
	CoproductView d(h.comult);
	Report rep;

	AxiomCheck nondeg{"pairing nondegenerate"};
	nondeg.instances = 1;
	if (rank(p) != n)
	{
		nondeg.verdict = Verdict::fails;
		nondeg.detail = "rank " + std::to_string(rank(p)) + " < " + std::to_string(n);
	}
	rep.checks.push_back(nondeg);

	AxiomCheck mult{"<ab, c> = <a, c1><b, c2>"};
	AxiomCheck comult{"<a, bc> = <a1, b><a2, c>"};
	for (std::size_t x = 0; x < n; ++x)
		for (std::size_t y = 0; y < n; ++y)
			for (std::size_t z = 0; z < n; ++z)
			{
				if (mult.verdict == Verdict::holds)
				{
					Scalar lhs = 0, rhs = 0;
					for (std::size_t k = 0; k < n; ++k)
						lhs += h.mult(x, y, k) * p(k, z);
					for (auto const &[z1, z2, cz] : d.of(z))
						rhs += cz * p(x, z1) * p(y, z2);
					++mult.instances;
					if (lhs != rhs)
					{
						mult.verdict = Verdict::fails;
						mult.witness = {x, y, z};
						mult.detail = "sides differ by " + to_string(lhs - rhs);
					}
				}
				if (comult.verdict == Verdict::holds)
				{
					Scalar lhs = 0, rhs = 0;
					for (std::size_t k = 0; k < n; ++k)
						lhs += h.mult(y, z, k) * p(x, k);
					for (auto const &[x1, x2, cx] : d.of(x))
						rhs += cx * p(x1, y) * p(x2, z);
					++comult.instances;
					if (lhs != rhs)
					{
						comult.verdict = Verdict::fails;
						comult.witness = {x, y, z};
						comult.detail = "sides differ by " + to_string(lhs - rhs);
					}
				}
			}
	rep.checks.push_back(mult);
	rep.checks.push_back(comult);

	AxiomCheck units{"<1, c> = eps(c), <a, 1> = eps(a)"};
	for (std::size_t c = 0; c < n && units.verdict == Verdict::holds; ++c)
	{
		Scalar left = 0, right = 0;
		for (std::size_t k = 0; k < n; ++k)
		{
			left += h.unit[k] * p(k, c);
			right += p(c, k) * h.unit[k];
		}
		++units.instances;
		if (left != h.counit[c] || right != h.counit[c])
		{
			units.verdict = Verdict::fails;
			units.witness = {c};
			units.detail = "at (" + h.labels[c] + ")";
		}
	}
	rep.checks.push_back(units);
	return rep;
}

bool check_selfdual(HopfData const &h, Matrix const &pairing)
{
	return check_hopf_pairing(h, pairing).passed();
}

} // namespace gtalg
