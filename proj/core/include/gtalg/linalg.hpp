#pragma once

#include "gtalg/scalar.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

namespace gtalg {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix over the rationals.
class Matrix
{
public:
	Matrix() = default;
	Matrix(std::size_t rows, std::size_t cols);

	static Matrix identity(std::size_t n);

	std::size_t rows() const { return rows_; }
	std::size_t cols() const { return cols_; }

	Scalar &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
	Scalar const &operator()(std::size_t r, std::size_t c) const
	{
		return data_[r * cols_ + c];
	}

	Matrix transposed() const;
	bool is_zero() const;

	friend Matrix operator*(Matrix const &a, Matrix const &b);
	friend Vector operator*(Matrix const &a, Vector const &x);
	friend bool operator==(Matrix const &, Matrix const &) = default;

private:
	std::size_t rows_ = 0;
	std::size_t cols_ = 0;
	std::vector<Scalar> data_;
};

/// Dense rank-3 tensor t(i, j, k) of shape a x b x c.
class Tensor3
{
public:
	Tensor3() = default;
	Tensor3(std::size_t a, std::size_t b, std::size_t c) : shape_{a, b, c}, data_(a * b * c) {}

	std::size_t extent(int axis) const { return shape_[static_cast<std::size_t>(axis)]; }

	Scalar &operator()(std::size_t i, std::size_t j, std::size_t k)
	{
		return data_[(i * shape_[1] + j) * shape_[2] + k];
	}
	Scalar const &operator()(std::size_t i, std::size_t j, std::size_t k) const
	{
		return data_[(i * shape_[1] + j) * shape_[2] + k];
	}

	friend bool operator==(Tensor3 const &, Tensor3 const &) = default;

private:
	std::array<std::size_t, 3> shape_{};
	std::vector<Scalar> data_;
};

/// Reduced row echelon form, computed in place. Returns the pivot columns.
std::vector<std::size_t> row_reduce(Matrix &m);

std::size_t rank(Matrix m);

/// Solution set of A x = b: a particular solution (free variables zero)
/// and a basis of the kernel of A. `particular` is empty when the
/// system is inconsistent.
struct AffineSolution
{
	std::optional<Vector> particular;
	std::vector<Vector> kernel;

	bool feasible() const { return particular.has_value(); }
	bool unique() const { return feasible() && kernel.empty(); }
};

AffineSolution solve_affine(Matrix const &a, Vector const &b);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<Matrix> inverse(Matrix const &m);

} // namespace gtalg
