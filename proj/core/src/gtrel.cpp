#include "gtalg/gtrel.hpp"

#include "gtalg/errors.hpp"

#include <map>
#include <utility>

namespace gtalg {

namespace {

void require_xy(Series const &f, char const *what)
{
	if (!(f.alphabet() == Alphabet::xy()))
		throw StructuralError(std::string(what) + ": series must be over the alphabet {X, Y}");
}

Series t4(int truncation, int i, int j) { return drinfeld_kohno_generator(4, truncation, i, j); }

} // namespace

// --------------------------------------------------------------- GTElement

GTElement::GTElement(Scalar lambda, Series f) : lambda_(std::move(lambda)), f_(std::move(f))
{
	require_xy(f_, "GT element");
	if (!is_grouplike(f_))
		throw DomainError("GT element: f must be group-like with constant term 1");
}

GTElement GTElement::identity(int truncation)
{
	return GTElement(1, Series::one(Alphabet::xy(), truncation));
}

RelationReport make_relation_report(std::string relation, Series residual)
{
	RelationReport r{std::move(relation), residual.truncation(), residual.is_zero(),
	                 residual.min_degree(), std::move(residual)};
	return r;
}

// --------------------------------------------------------------- residuals

Series duality_residual(Series const &f)
{
	require_xy(f, "duality");
	int const n = f.truncation();
	auto const a = Alphabet::xy();
	auto X = Series::generator(a, n, 0);
	auto Y = Series::generator(a, n, 1);
	return f * substitute(f, {Y, X}) - Series::one(a, n);
}

Series hexagon_residual(Scalar const &lambda, Series const &f)
{
	require_xy(f, "hexagon");
	int const n = f.truncation();
	auto const a = Alphabet::xy();
	auto X = Series::generator(a, n, 0);
	auto Y = Series::generator(a, n, 1);
	// logarithms of x1, x2 and x3 = (x1 x2)^-1
	auto L1 = X;
	auto L2 = Y;
	auto L3 = -log(exp(X) * exp(Y));
	Scalar m = (lambda - 1) / 2;

	auto product = substitute(f, {L3, L1}) * exp(L3 * m);
	product = product * substitute(f, {L2, L3}) * exp(L2 * m);
	product = product * f * exp(L1 * m);
	return product - Series::one(a, n);
}

QuotientAlgebra pentagon_quotient(int truncation)
{
	return build_quotient(drinfeld_kohno_alphabet(4), drinfeld_kohno_relators(4, truncation),
	                      truncation);
}

Series pentagon_residual(Series const &f, QuotientAlgebra const &t4q)
{
	require_xy(f, "pentagon");
	int const n = f.truncation();
	if (t4q.truncation() < n)
		throw StructuralError("pentagon: quotient truncation below the series truncation");
	auto t = [&](int i, int j) { return t4(n, i, j); };
	auto lhs = substitute(f, {t(1, 2), t(2, 3) + t(2, 4)}) *
	           substitute(f, {t(1, 3) + t(2, 3), t(3, 4)});
	auto rhs = substitute(f, {t(2, 3), t(3, 4)}) *
	           substitute(f, {t(1, 2) + t(1, 3), t(2, 4) + t(3, 4)}) *
	           substitute(f, {t(1, 2), t(2, 3)});
	return t4q.reduce(lhs - rhs);
}

RelationReport check_duality(GTElement const &e)
{
	return make_relation_report("duality", duality_residual(e.f()));
}

RelationReport check_hexagon(GTElement const &e)
{
	return make_relation_report("hexagon", hexagon_residual(e.lambda(), e.f()));
}

RelationReport check_pentagon(GTElement const &e, QuotientAlgebra const &t4q)
{
	return make_relation_report("pentagon", pentagon_residual(e.f(), t4q));
}

RelationReport check_pentagon(GTElement const &e)
{
	int const n = e.truncation();
	// the residual is reduced linearly, so a zero raw difference needs no quotient
	auto trivial = Series::one(Alphabet::xy(), n);
	if (e.f() == trivial)
		return make_relation_report("pentagon", Series(drinfeld_kohno_alphabet(4), n));
	return check_pentagon(e, pentagon_quotient(n));
}

// ------------------------------------------------------------- composition

Series compose_f(Series const &f1, Series const &f2, Scalar const &lambda2)
{
	require_xy(f1, "compose");
	require_xy(f2, "compose");
	if (f1.truncation() != f2.truncation())
		throw StructuralError("compose: truncation mismatch");
	int const n = f1.truncation();
	auto const a = Alphabet::xy();
	auto X = Series::generator(a, n, 0);
	auto Y = Series::generator(a, n, 1);
	// log(f2 x^lambda2 f2^-1) = f2 (lambda2 X) f2^-1, log(y^lambda2) = lambda2 Y
	auto conj = f2 * (X * lambda2) * inverse(f2);
	return substitute(f1, {conj, Y * lambda2}) * f2;
}

GTElement gt_compose(GTElement const &a, GTElement const &b)
{
	if (a.truncation() != b.truncation())
		throw StructuralError("gt_compose: truncation mismatch");
	return GTElement(a.lambda() * b.lambda(), compose_f(a.f(), b.f(), b.lambda()));
}

// ------------------------------------------------------------ linearization

Series grouplike_linear_part(Series const &v)
{
	auto one = Series::one(v.alphabet(), v.truncation());
	return coproduct(v) - tensor(v, one) - tensor(one, v);
}

Series duality_linear_part(Series const &v)
{
	int const n = v.truncation();
	auto const a = Alphabet::xy();
	auto X = Series::generator(a, n, 0);
	auto Y = Series::generator(a, n, 1);
	return v + substitute(v, {Y, X});
}

Series hexagon_linear_part(Series const &v)
{
	// only the degree-1 part -(X + Y) of log x3 reaches degree d
	int const n = v.truncation();
	auto const a = Alphabet::xy();
	auto X = Series::generator(a, n, 0);
	auto Y = Series::generator(a, n, 1);
	auto L3 = -(X + Y);
	return substitute(v, {L3, X}) + substitute(v, {Y, L3}) + v;
}

Series pentagon_linear_part(Series const &v, QuotientAlgebra const &t4q)
{
	int const n = v.truncation();
	auto t = [&](int i, int j) { return t4(n, i, j); };
	auto sum = substitute(v, {t(1, 2), t(2, 3) + t(2, 4)}) +
	           substitute(v, {t(1, 3) + t(2, 3), t(3, 4)}) - substitute(v, {t(2, 3), t(3, 4)}) -
	           substitute(v, {t(1, 2) + t(1, 3), t(2, 4) + t(3, 4)}) -
	           substitute(v, {t(1, 2), t(2, 3)});
	return t4q.reduce(sum);
}

// ------------------------------------------------------------------ solver

RelationSolution solve_relations(Scalar const &lambda, int truncation, SolveOptions const &options)
{
	if (truncation < 0)
		throw StructuralError("solve_relations: negative truncation");
	if (truncation > options.max_degree)
		throw StructuralError("solve_relations: truncation " + std::to_string(truncation) +
		                      " exceeds the configured maximum " +
		                      std::to_string(options.max_degree));

	auto const alpha = Alphabet::xy();
	RelationSolution sol{lambda, truncation, {}, std::nullopt, Series::one(alpha, truncation)};
	if (truncation == 0)
		return sol;
	auto const t4q = pentagon_quotient(truncation);

	for (int d = 1; d <= truncation; ++d)
	{
		DegreeSolution ds;
		ds.degree = d;
		ds.words = words_of_degree(alpha, d);

		// affine part: residuals of the current (degree < d) f at truncation d
		auto f = sol.f.restricted(d);
		std::vector<Series> constant{
		    grouplike_defect(f).homogeneous(d),
		    duality_residual(f).homogeneous(d),
		    hexagon_residual(lambda, f).homogeneous(d),
		    pentagon_residual(f, t4q).homogeneous(d),
		};

		// linear part: one column per word of degree d
		std::vector<std::vector<Series>> columns;
		for (auto const &w : ds.words)
		{
			auto v = Series::monomial(alpha, d, w);
			columns.push_back({grouplike_linear_part(v).homogeneous(d),
			                   duality_linear_part(v).homogeneous(d),
			                   hexagon_linear_part(v).homogeneous(d),
			                   pentagon_linear_part(v, t4q).homogeneous(d)});
		}

		std::map<std::pair<std::size_t, Monomial>, std::size_t> row_of;
		auto row_index = [&](std::size_t rel, Monomial const &m) {
			auto [it, inserted] = row_of.try_emplace({rel, m}, row_of.size());
			return it->second;
		};
		for (std::size_t rel = 0; rel < constant.size(); ++rel)
		{
			for (auto const &[m, c] : constant[rel].terms())
				row_index(rel, m);
			for (auto const &col : columns)
				for (auto const &[m, c] : col[rel].terms())
					row_index(rel, m);
		}

		Matrix a(row_of.size(), ds.words.size());
		Vector b(row_of.size());
		for (std::size_t rel = 0; rel < constant.size(); ++rel)
		{
			for (auto const &[m, c] : constant[rel].terms())
				b[row_of.at({rel, m})] = -c;
			for (std::size_t j = 0; j < columns.size(); ++j)
				for (auto const &[m, c] : columns[j][rel].terms())
					a(row_of.at({rel, m}), j) = c;
		}

		auto solved = solve_affine(a, b);
		ds.particular = solved.particular;
		ds.homogeneous = solved.kernel;
		if (!solved.feasible())
		{
			sol.degrees.push_back(std::move(ds));
			sol.infeasible_degree = d;
			return sol;
		}

		ds.chosen = *solved.particular;
		if (options.choose && !solved.kernel.empty())
		{
			auto coeffs = options.choose(d, solved.kernel.size());
			if (coeffs.size() != solved.kernel.size())
				throw StructuralError("solve_relations: chooser returned the wrong number of "
				                      "coefficients");
			for (std::size_t k = 0; k < coeffs.size(); ++k)
				for (std::size_t i = 0; i < ds.chosen.size(); ++i)
					ds.chosen[i] += coeffs[k] * solved.kernel[k][i];
		}
		for (std::size_t i = 0; i < ds.words.size(); ++i)
			sol.f.add_term(ds.words[i], ds.chosen[i]);
		sol.degrees.push_back(std::move(ds));
	}
	return sol;
}

} // namespace gtalg
