#include "gtalg/linalg.hpp"

#include "gtalg/errors.hpp"

#include <utility>

namespace gtalg {

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols)
{
}

Matrix Matrix::identity(std::size_t n)
{
	Matrix m(n, n);
	for (std::size_t i = 0; i < n; ++i)
		m(i, i) = 1;
	return m;
}

Matrix Matrix::transposed() const
{
	Matrix t(cols_, rows_);
	for (std::size_t r = 0; r < rows_; ++r)
		for (std::size_t c = 0; c < cols_; ++c)
			t(c, r) = (*this)(r, c);
	return t;
}

bool Matrix::is_zero() const
{
	for (auto const &x : data_)
		if (sgn(x) != 0)
			return false;
	return true;
}

Matrix operator*(Matrix const &a, Matrix const &b)
{
	if (a.cols_ != b.rows_)
		throw StructuralError("matrix product: inner dimensions differ");
	Matrix c(a.rows_, b.cols_);
	for (std::size_t i = 0; i < a.rows_; ++i)
		for (std::size_t k = 0; k < a.cols_; ++k)
		{
			auto const &aik = a(i, k);
			if (sgn(aik) == 0)
				continue;
			for (std::size_t j = 0; j < b.cols_; ++j)
				if (sgn(b(k, j)) != 0)
					c(i, j) += aik * b(k, j);
		}
	return c;
}

Vector operator*(Matrix const &a, Vector const &x)
{
	if (a.cols_ != x.size())
		throw StructuralError("matrix-vector product: dimension mismatch");
	Vector y(a.rows_);
	for (std::size_t i = 0; i < a.rows_; ++i)
		for (std::size_t k = 0; k < a.cols_; ++k)
			if (sgn(a(i, k)) != 0 && sgn(x[k]) != 0)
				y[i] += a(i, k) * x[k];
	return y;
}

std::vector<std::size_t> row_reduce(Matrix &m)
{
	std::vector<std::size_t> pivots;
	std::size_t row = 0;
	Scalar factor;
	for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col)
	{
		std::size_t sel = row;
		while (sel < m.rows() && sgn(m(sel, col)) == 0)
			++sel;
		if (sel == m.rows())
			continue;
		if (sel != row)
			for (std::size_t c = col; c < m.cols(); ++c)
				std::swap(m(sel, c), m(row, c));

		Scalar inv = 1 / m(row, col);
		for (std::size_t c = col; c < m.cols(); ++c)
			if (sgn(m(row, c)) != 0)
				m(row, c) *= inv;

		for (std::size_t r = 0; r < m.rows(); ++r)
		{
			if (r == row || sgn(m(r, col)) == 0)
				continue;
			factor = m(r, col);
			for (std::size_t c = col; c < m.cols(); ++c)
				if (sgn(m(row, c)) != 0)
					m(r, c) -= factor * m(row, c);
		}
		pivots.push_back(col);
		++row;
	}
	return pivots;
}

std::size_t rank(Matrix m) { return row_reduce(m).size(); }

AffineSolution solve_affine(Matrix const &a, Vector const &b)
{
	if (a.rows() != b.size())
		throw StructuralError("solve_affine: right-hand side has wrong length");
	std::size_t const n = a.cols();
	Matrix aug(a.rows(), n + 1);
	for (std::size_t r = 0; r < a.rows(); ++r)
	{
		for (std::size_t c = 0; c < n; ++c)
			aug(r, c) = a(r, c);
		aug(r, n) = b[r];
	}
	auto pivots = row_reduce(aug);

	AffineSolution sol;
	if (!pivots.empty() && pivots.back() == n)
		return sol;

	std::vector<bool> is_pivot(n, false);
	for (auto p : pivots)
		is_pivot[p] = true;

	Vector x(n);
	for (std::size_t i = 0; i < pivots.size(); ++i)
		x[pivots[i]] = aug(i, n);
	sol.particular = std::move(x);

	for (std::size_t free = 0; free < n; ++free)
	{
		if (is_pivot[free])
			continue;
		Vector k(n);
		k[free] = 1;
		for (std::size_t i = 0; i < pivots.size(); ++i)
			k[pivots[i]] = -aug(i, free);
		sol.kernel.push_back(std::move(k));
	}
	return sol;
}

std::optional<Matrix> inverse(Matrix const &m)
{
	if (m.rows() != m.cols())
		throw StructuralError("inverse of a non-square matrix");
	std::size_t const n = m.rows();
	if (n == 0)
		return Matrix{};
	Matrix aug(n, 2 * n);
	for (std::size_t r = 0; r < n; ++r)
	{
		for (std::size_t c = 0; c < n; ++c)
			aug(r, c) = m(r, c);
		aug(r, n + r) = 1;
	}
	auto pivots = row_reduce(aug);
	if (pivots.size() < n || pivots[n - 1] != n - 1)
		return std::nullopt;
	Matrix inv(n, n);
	for (std::size_t r = 0; r < n; ++r)
		for (std::size_t c = 0; c < n; ++c)
			inv(r, c) = aug(r, n + c);
	return inv;
}

} // namespace gtalg
