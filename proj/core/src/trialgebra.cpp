#include "gtalg/trialgebra.hpp"

#include "gtalg/errors.hpp"
#include "structure.hpp"

namespace gtalg {

using namespace detail;

namespace {

void require_shape(Tensor3 const &t, std::size_t n, std::string const &what)
{
	for (int axis = 0; axis < 3; ++axis)
		if (t.extent(axis) != n)
			throw StructuralError(what + " does not match the basis size");
}

void require_size(Vector const &v, std::size_t n, std::string const &what)
{
	if (v.size() != n)
		throw StructuralError(what + " does not match the basis size");
}

std::string join(std::vector<std::size_t> const &w, std::vector<std::string> const &labels)
{
	std::string out;
	for (auto i : w)
		out += (out.empty() ? "" : ", ") + labels.at(i);
	return "(" + out + ")";
}

AxiomCheck interchange(ProductView const &star, ProductView const &dot,
                       std::vector<std::string> const &labels)
{
	AxiomCheck c{"interchange"};
	std::size_t n = star.dim();
	for (std::size_t a = 0; a < n; ++a)
		for (std::size_t b = 0; b < n; ++b)
		{
			auto ab = star.mul(basis(a), basis(b));
			if (!ab)
				continue;
			for (std::size_t cc = 0; cc < n; ++cc)
			{
				auto ac = dot.mul_total(basis(a), basis(cc));
				for (std::size_t d = 0; d < n; ++d)
				{
					auto cd = star.mul(basis(cc), basis(d));
					if (!cd)
						continue;
					auto rhs = star.mul(ac, dot.mul_total(basis(b), basis(d)));
					if (!rhs)
						continue;
					auto lhs = dot.mul_total(*ab, *cd);
					++c.instances;
					auto diff = difference(lhs, *rhs);
					if (!diff.empty())
					{
						c.verdict = Verdict::fails;
						c.witness = {a, b, cc, d};
						c.detail = "at " + join(c.witness, labels) + ": " + describe(diff, labels);
						return c;
					}
				}
			}
		}
	if (c.instances == 0 && !star.total())
		c.verdict = Verdict::vacuous;
	return c;
}

/// Product-side bialgebra axioms for one product against a shared coproduct.
Report product_axioms(ProductView const &m, std::optional<Vector> const &unit,
                      CoproductView const &d, Vector const &counit,
                      std::vector<std::string> const &labels)
{
	Report r;
	r.checks.push_back(associativity(m, labels));
	if (unit)
		r.checks.push_back(unit_law(m, *unit, labels));
	r.checks.push_back(comult_multiplicative(m, d, labels));
	r.checks.push_back(counit_multiplicative(m, counit, labels));
	if (unit)
	{
		r.checks.push_back(comult_unital(d, *unit, labels));
		r.checks.push_back(counit_unital(counit, *unit));
	}
	return r;
}

} // namespace

bool TrialgebraData::star_total() const
{
	for (auto const &row : star_defined)
		for (bool b : row)
			if (!b)
				return false;
	return true;
}

void TrialgebraData::validate() const
{
	std::size_t n = labels.size();
	if (n == 0)
		throw StructuralError("trialgebra: dimension must be positive");
	require_shape(star_mult, n, "trialgebra: star_mult");
	require_shape(dot_mult, n, "trialgebra: dot_mult");
	require_shape(comult, n, "trialgebra: comult");
	require_size(counit, n, "trialgebra: counit");
	if (star_unit)
		require_size(*star_unit, n, "trialgebra: star_unit");
	if (dot_unit)
		require_size(*dot_unit, n, "trialgebra: dot_unit");
	if (!star_defined.empty())
	{
		if (star_defined.size() != n)
			throw StructuralError("trialgebra: star_defined does not match the basis size");
		for (auto const &row : star_defined)
			if (row.size() != n)
				throw StructuralError("trialgebra: star_defined does not match the basis size");
	}
}

void QuadraalgebraData::validate() const
{
	std::size_t n = labels.size();
	if (n == 0)
		throw StructuralError("quadraalgebra: dimension must be positive");
	require_shape(mult1, n, "quadraalgebra: mult1");
	require_shape(mult2, n, "quadraalgebra: mult2");
	require_shape(comult1, n, "quadraalgebra: comult1");
	require_shape(comult2, n, "quadraalgebra: comult2");
	require_size(counit1, n, "quadraalgebra: counit1");
	require_size(counit2, n, "quadraalgebra: counit2");
	if (unit1)
		require_size(*unit1, n, "quadraalgebra: unit1");
	if (unit2)
		require_size(*unit2, n, "quadraalgebra: unit2");
}

Report check_trialgebra(TrialgebraData const &t)
{
	t.validate();
	ProductView star(t.star_mult, t.star_defined);
	ProductView dot(t.dot_mult);
	CoproductView d(t.comult);

	Report r;
	r.checks.push_back(coassociativity(d, t.labels));
	r.checks.push_back(counit_law(d, t.counit, t.labels));
	r.append(product_axioms(star, t.star_unit, d, t.counit, t.labels), "star: ");
	r.append(product_axioms(dot, t.dot_unit, d, t.counit, t.labels), "dot: ");
	r.checks.push_back(interchange(star, dot, t.labels));
	return r;
}

AxiomCheck check_interchange(Tensor3 const &star, Tensor3 const &dot,
                             std::vector<std::string> const &labels)
{
	require_shape(star, labels.size(), "interchange: star product");
	require_shape(dot, labels.size(), "interchange: dot product");
	return interchange(ProductView(star), ProductView(dot), labels);
}

RMatrix lift_form(CoquasiForm const &r_star, Matrix const &pairing)
{
	auto p_inv = inverse(pairing);
	if (!p_inv)
		throw DomainError("biquasitriangular: the pairing is degenerate");
	return p_inv->transposed() * r_star * *p_inv;
}

Report check_biquasitriangular(TrialgebraData const &t, RMatrix const &r_dot,
                               CoquasiForm const &r_star, Matrix const &pairing)
{
	t.validate();
	std::size_t n = t.dim();
	if (pairing.rows() != n || pairing.cols() != n)
		throw StructuralError("biquasitriangular: pairing does not match the basis size");
	if (!t.star_total())
		throw DomainError("biquasitriangular: the star product must be total");
	if (!t.dot_unit)
		throw DomainError("biquasitriangular: the dot product needs a unit");
	auto r_hat = lift_form(r_star, pairing);

	HopfData dot{t.labels, t.dot_mult, *t.dot_unit, t.comult, t.counit, std::nullopt};
	// the coquasitriangular axioms never use the unit
	HopfData star{t.labels, t.star_mult, t.star_unit.value_or(Vector(n)), t.comult, t.counit,
	              std::nullopt};

	Report r;
	r.append(check_quasitriangular(dot, r_dot), "dot: ");
	r.append(check_coquasitriangular(star, r_star), "star: ");

	ProductView m(t.dot_mult);
	auto a = from_matrix(r_dot);
	auto b = from_matrix(r_hat);
	AxiomCheck c{"[R_dot, R^] = 0"};
	c.instances = 1;
	auto diff = difference(m.mul_total(a, b), m.mul_total(b, a));
	if (!diff.empty())
	{
		c.verdict = Verdict::fails;
		c.witness = diff.begin()->first;
		c.detail = describe(diff, t.labels);
	}
	r.checks.push_back(std::move(c));
	return r;
}

TrialgebraData quadra_component(QuadraalgebraData const &q, int coproduct, int star)
{
	if ((coproduct != 1 && coproduct != 2) || (star != 1 && star != 2))
		throw StructuralError("quadra_component: indices must be 1 or 2");
	TrialgebraData t;
	t.labels = q.labels;
	t.star_mult = star == 1 ? q.mult1 : q.mult2;
	t.star_unit = star == 1 ? q.unit1 : q.unit2;
	t.dot_mult = star == 1 ? q.mult2 : q.mult1;
	t.dot_unit = star == 1 ? q.unit2 : q.unit1;
	t.comult = coproduct == 1 ? q.comult1 : q.comult2;
	t.counit = coproduct == 1 ? q.counit1 : q.counit2;
	return t;
}

Report check_quadraalgebra(QuadraalgebraData const &q)
{
	q.validate();
	Report r;
	for (int c : {1, 2})
		for (int s : {1, 2})
			r.append(check_trialgebra(quadra_component(q, c, s)),
			         "comult" + std::to_string(c) + ", star = mult" + std::to_string(s) + ": ");

	CoproductView d1(q.comult1);
	CoproductView d2(q.comult2);
	AxiomCheck c{"co-interchange"};
	for (std::size_t i = 0; i < q.dim(); ++i)
	{
		auto lhs = d1.apply(d1.apply(d2.apply(basis(i), 0), 1), 0);
		auto rhs = permuted(d2.apply(d2.apply(d1.apply(basis(i), 0), 1), 0), {0, 2, 1, 3});
		++c.instances;
		auto diff = difference(lhs, rhs);
		if (!diff.empty())
		{
			c.verdict = Verdict::fails;
			c.witness = {i};
			c.detail = "at (" + q.labels[i] + "): " + describe(diff, q.labels);
			break;
		}
	}
	r.checks.push_back(std::move(c));
	return r;
}

EckmannHiltonReport eckmann_hilton(Tensor3 const &p1, Tensor3 const &p2, Vector const &u1,
                                   Vector const &u2)
{
	std::size_t n = p1.extent(0);
	require_shape(p1, n, "eckmann_hilton: p1");
	require_shape(p2, n, "eckmann_hilton: p2");
	require_size(u1, n, "eckmann_hilton: u1");
	require_size(u2, n, "eckmann_hilton: u2");
	std::vector<std::string> labels;
	for (std::size_t i = 0; i < n; ++i)
		labels.push_back("e" + std::to_string(i));

	ProductView m1(p1);
	ProductView m2(p2);
	auto ic = interchange(m1, m2, labels);
	if (ic.verdict == Verdict::fails)
		throw HypothesisError("eckmann_hilton: interchange fails " + ic.detail);
	for (auto const &[m, u, name] :
	     {std::tuple{&m1, &u1, "u1"}, std::tuple{&m2, &u2, "u2"}})
	{
		auto c = unit_law(*m, *u, labels);
		if (c.verdict == Verdict::fails)
			throw HypothesisError(std::string("eckmann_hilton: ") + name +
			                      " is not a two-sided unit " + c.detail);
	}

	EckmannHiltonReport r;
	r.units_equal = true;
	for (std::size_t i = 0; i < n && r.units_equal; ++i)
		if (u1[i] != u2[i])
		{
			r.units_equal = false;
			r.unit_witness = {i};
		}
	r.products_equal = true;
	r.commutative = true;
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			for (std::size_t k = 0; k < n; ++k)
			{
				if (r.products_equal && p1(i, j, k) != p2(i, j, k))
				{
					r.products_equal = false;
					r.product_witness = {i, j, k};
				}
				if (r.commutative && p1(i, j, k) != p1(j, i, k))
				{
					r.commutative = false;
					r.commutativity_witness = {i, j, k};
				}
			}
	return r;
}

} // namespace gtalg
