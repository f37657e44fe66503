#include "gtalg/quotient.hpp"

#include "gtalg/errors.hpp"

#include <algorithm>
#include <limits>

namespace gtalg {

void QuotientAlgebra::Component::reduce(std::map<std::uint32_t, Scalar> &work) const
{
	// eliminate pivot columns from the top; a pivot row only touches columns
	// at or below its pivot, so one descending sweep suffices
	std::uint32_t bound = std::numeric_limits<std::uint32_t>::max();
	Scalar factor;
	while (true)
	{
		auto it = work.lower_bound(bound);
		if (it == work.begin())
			return;
		--it;
		bound = it->first;
		auto p = pivot_row.find(bound);
		if (p == pivot_row.end())
			continue;
		factor = it->second;
		for (auto const &[col, val] : rows[p->second])
		{
			auto &slot = work[col];
			slot -= factor * val;
			if (sgn(slot) == 0)
				work.erase(col);
		}
	}
}

bool QuotientAlgebra::Component::insert(std::map<std::uint32_t, Scalar> work)
{
	reduce(work);
	if (work.empty())
		return false;
	Scalar inv = 1 / work.rbegin()->second;
	SparseRow row;
	row.reserve(work.size());
	for (auto &[col, val] : work)
		row.emplace_back(col, val * inv);
	pivot_row.emplace(row.back().first, rows.size());
	rows.push_back(std::move(row));
	return true;
}

void QuotientAlgebra::Component::interreduce()
{
	// rows with smaller pivots are fully reduced first, so substituting them
	// introduces only non-pivot columns
	for (auto const &[pivot, idx] : pivot_row)
	{
		std::map<std::uint32_t, Scalar> work(rows[idx].begin(), rows[idx].end());
		work.erase(pivot);
		reduce(work);
		SparseRow row(work.begin(), work.end());
		row.emplace_back(pivot, Scalar(1));
		rows[idx] = std::move(row);
	}
}

QuotientAlgebra::QuotientAlgebra(Alphabet alphabet, std::vector<Series> relators, int truncation)
    : alphabet_(std::move(alphabet)), truncation_(truncation), relators_(std::move(relators))
{
}

QuotientAlgebra build_quotient(Alphabet alphabet, std::vector<Series> relators, int truncation)
{
	for (auto const &r : relators)
	{
		if (!(r.alphabet() == alphabet) || r.truncation() != truncation)
			throw StructuralError("build_quotient: relator alphabet or truncation mismatch");
		if (r.is_zero())
			continue;
		if (r.min_degree() != r.terms().rbegin()->first.degree())
			throw StructuralError("build_quotient: relator is not homogeneous");
	}

	QuotientAlgebra q(alphabet, std::move(relators), truncation);
	q.components_.resize(static_cast<std::size_t>(truncation) + 1);
	for (int d = 0; d <= truncation; ++d)
	{
		auto &comp = q.components_[static_cast<std::size_t>(d)];
		comp.words = words_of_degree(alphabet, d);
		for (std::uint32_t i = 0; i < comp.words.size(); ++i)
			comp.column.emplace(comp.words[i], i);

		auto to_work = [&](Series const &s) {
			std::map<std::uint32_t, Scalar> work;
			for (auto const &[m, c] : s.terms())
				if (m.degree() == d)
					work.emplace(comp.column.at(m), c);
			return work;
		};

		// g * b rows have distinct leading words g * lead(b) and are supported
		// on g * (lower non-pivot words), so they are mutually reduced already
		std::vector<std::map<std::uint32_t, Scalar>> right_products;
		for (std::size_t g = 0; g < alphabet.size(); ++g)
		{
			int const e = alphabet.degree(g);
			if (e > d)
				continue;
			auto const &lower = q.components_[static_cast<std::size_t>(d - e)];
			Monomial gm(alphabet, {g});
			for (auto const &row : lower.rows)
			{
				std::map<std::uint32_t, Scalar> left, right;
				for (auto const &[col, val] : row)
				{
					auto const &w = lower.words[col];
					left.emplace(comp.column.at(gm * w), val);
					right.emplace(comp.column.at(w * gm), val);
				}
				comp.insert(std::move(left));
				right_products.push_back(std::move(right));
			}
		}
		for (auto const &r : q.relators_)
			if (!r.is_zero() && *r.min_degree() == d)
				comp.insert(to_work(r));
		for (auto &w : right_products)
			comp.insert(std::move(w));
		comp.interreduce();
	}
	return q;
}

Series QuotientAlgebra::reduce(Series const &a) const
{
	if (!(a.alphabet() == alphabet_) || a.truncation() > truncation_)
		throw StructuralError("reduce: series does not live in this quotient");
	Series out(alphabet_, a.truncation());
	for (int d = 0; d <= a.truncation(); ++d)
	{
		auto const &comp = components_[static_cast<std::size_t>(d)];
		std::map<std::uint32_t, Scalar> work;
		for (auto const &[m, c] : a.terms())
			if (m.degree() == d)
				work.emplace(comp.column.at(m), c);
		if (work.empty())
			continue;
		comp.reduce(work);
		for (auto const &[col, val] : work)
			out.add_term(comp.words[col], val);
	}
	return out;
}

std::size_t QuotientAlgebra::free_dimension(int d) const
{
	return components_.at(static_cast<std::size_t>(d)).words.size();
}

std::size_t QuotientAlgebra::ideal_dimension(int d) const
{
	return components_.at(static_cast<std::size_t>(d)).rows.size();
}

std::size_t QuotientAlgebra::graded_dimension(int d) const
{
	return free_dimension(d) - ideal_dimension(d);
}

std::vector<Series> QuotientAlgebra::ideal_basis(int d) const
{
	auto const &comp = components_.at(static_cast<std::size_t>(d));
	std::vector<Series> out;
	for (auto const &[pivot, idx] : comp.pivot_row)
	{
		Series s(alphabet_, truncation_);
		for (auto const &[col, val] : comp.rows[idx])
			s.add_term(comp.words[col], val);
		out.push_back(std::move(s));
	}
	return out;
}

// ------------------------------------------------------- Drinfeld-Kohno t_n

Alphabet drinfeld_kohno_alphabet(int n)
{
	if (n < 2)
		throw StructuralError("Drinfeld-Kohno algebra needs n >= 2");
	std::vector<std::string> names;
	for (int i = 1; i <= n; ++i)
		for (int j = i + 1; j <= n; ++j)
			names.push_back("t" + std::to_string(i) + std::to_string(j));
	return Alphabet(std::move(names));
}

Series drinfeld_kohno_generator(int n, int truncation, int i, int j)
{
	if (i == j || i < 1 || j < 1 || i > n || j > n)
		throw StructuralError("Drinfeld-Kohno generator index out of range");
	if (i > j)
		std::swap(i, j);
	auto alpha = drinfeld_kohno_alphabet(n);
	return Series::generator(alpha, truncation, "t" + std::to_string(i) + std::to_string(j));
}

std::vector<Series> drinfeld_kohno_relators(int n, int truncation)
{
	auto t = [&](int i, int j) { return drinfeld_kohno_generator(n, truncation, i, j); };
	std::vector<Series> rel;
	for (int i = 1; i <= n; ++i)
		for (int j = i + 1; j <= n; ++j)
			for (int k = j + 1; k <= n; ++k)
			{
				rel.push_back(commutator(t(i, j), t(i, k) + t(j, k)));
				rel.push_back(commutator(t(i, k), t(i, j) + t(j, k)));
				rel.push_back(commutator(t(j, k), t(i, j) + t(i, k)));
			}
	for (int i = 1; i <= n; ++i)
		for (int j = i + 1; j <= n; ++j)
			for (int k = 1; k <= n; ++k)
				for (int l = k + 1; l <= n; ++l)
				{
					bool disjoint = k != i && k != j && l != i && l != j;
					if (disjoint && std::make_pair(i, j) < std::make_pair(k, l))
						rel.push_back(commutator(t(i, j), t(k, l)));
				}
	return rel;
}

} // namespace gtalg
