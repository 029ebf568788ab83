#pragma once

#include "racahkit/param.hpp"
#include <optional>
#include <vector>

namespace racahkit {

// Dense exact matrix over a field F (Rational or ParamScalar).
template <class F> struct Matrix
{
	size_t rows = 0, cols = 0;
	std::vector<F> a;

	Matrix() = default;
	Matrix(size_t r, size_t c) : rows(r), cols(c), a(r * c) {}

	F &at(size_t r, size_t c) { return a[r * cols + c]; }
	const F &at(size_t r, size_t c) const { return a[r * cols + c]; }

	static Matrix identity(size_t n)
	{
		Matrix m(n, n);
		for (size_t i = 0; i < n; ++i)
			m.at(i, i) = F(1);
		return m;
	}

	friend Matrix operator*(const Matrix &x, const Matrix &y)
	{
		if (x.cols != y.rows)
			throw Error(ErrorCode::InvalidArgument, "matrix shape mismatch");
		Matrix r(x.rows, y.cols);
		for (size_t i = 0; i < x.rows; ++i)
			for (size_t k = 0; k < x.cols; ++k)
			{
				const F &xik = x.at(i, k);
				if (is_zero_entry(xik))
					continue;
				for (size_t j = 0; j < y.cols; ++j)
					r.at(i, j) += xik * y.at(k, j);
			}
		return r;
	}

	friend Matrix operator-(const Matrix &x, const Matrix &y)
	{
		if (x.rows != y.rows || x.cols != y.cols)
			throw Error(ErrorCode::InvalidArgument, "matrix shape mismatch");
		Matrix r(x.rows, x.cols);
		for (size_t i = 0; i < x.a.size(); ++i)
			r.a[i] = x.a[i] - y.a[i];
		return r;
	}

	friend Matrix operator+(const Matrix &x, const Matrix &y)
	{
		if (x.rows != y.rows || x.cols != y.cols)
			throw Error(ErrorCode::InvalidArgument, "matrix shape mismatch");
		Matrix r(x.rows, x.cols);
		for (size_t i = 0; i < x.a.size(); ++i)
			r.a[i] = x.a[i] + y.a[i];
		return r;
	}

	bool operator==(const Matrix &o) const
	{
		if (rows != o.rows || cols != o.cols)
			return false;
		for (size_t i = 0; i < a.size(); ++i)
			if (!(a[i] == o.a[i]))
				return false;
		return true;
	}

	bool is_zero() const
	{
		for (auto &x : a)
			if (!is_zero_entry(x))
				return false;
		return true;
	}

	static bool is_zero_entry(const F &x)
	{
		if constexpr (std::is_same_v<F, Rational>)
			return x == 0;
		else
			return x.is_zero();
	}
};

namespace linalg {

template <class F> bool entry_zero(const F &x) { return Matrix<F>::is_zero_entry(x); }

// In-place forward elimination; returns pivot columns. B (may be empty)
// receives the same row operations.
template <class F> std::vector<size_t> eliminate(Matrix<F> &A, Matrix<F> *B)
{
	std::vector<size_t> pivots;
	size_t row = 0;
	for (size_t col = 0; col < A.cols && row < A.rows; ++col)
	{
		size_t p = row;
		while (p < A.rows && entry_zero(A.at(p, col)))
			++p;
		if (p == A.rows)
			continue;
		if (p != row)
		{
			for (size_t j = 0; j < A.cols; ++j)
				std::swap(A.at(p, j), A.at(row, j));
			if (B)
				for (size_t j = 0; j < B->cols; ++j)
					std::swap(B->at(p, j), B->at(row, j));
		}
		F inv = F(1) / A.at(row, col);
		for (size_t j = col; j < A.cols; ++j)
			A.at(row, j) = A.at(row, j) * inv;
		if (B)
			for (size_t j = 0; j < B->cols; ++j)
				B->at(row, j) = B->at(row, j) * inv;
		for (size_t r = 0; r < A.rows; ++r)
		{
			if (r == row || entry_zero(A.at(r, col)))
				continue;
			F f = A.at(r, col);
			for (size_t j = col; j < A.cols; ++j)
				A.at(r, j) = A.at(r, j) - f * A.at(row, j);
			if (B)
				for (size_t j = 0; j < B->cols; ++j)
					B->at(r, j) = B->at(r, j) - f * B->at(row, j);
		}
		pivots.push_back(col);
		++row;
	}
	return pivots;
}

template <class F> size_t rank(Matrix<F> A)
{
	return eliminate(A, static_cast<Matrix<F> *>(nullptr)).size();
}

// Solves A X = B for all columns of B at once. Requires each column to be
// consistent; free variables are set to zero. Returns nullopt on an
// inconsistent system.
template <class F> std::optional<Matrix<F>> solve(Matrix<F> A, Matrix<F> B)
{
	if (A.rows != B.rows)
		throw Error(ErrorCode::InvalidArgument, "solve shape mismatch");
	auto pivots = eliminate(A, &B);
	// consistency: zero rows of A must have zero rows in B
	for (size_t r = pivots.size(); r < A.rows; ++r)
		for (size_t j = 0; j < B.cols; ++j)
			if (!entry_zero(B.at(r, j)))
				return std::nullopt;
	Matrix<F> X(A.cols, B.cols);
	for (size_t i = 0; i < pivots.size(); ++i)
		for (size_t j = 0; j < B.cols; ++j)
			X.at(pivots[i], j) = B.at(i, j);
	return X;
}

// Basis of the right kernel of A.
template <class F> std::vector<std::vector<F>> kernel_basis(Matrix<F> A)
{
	auto pivots = eliminate(A, static_cast<Matrix<F> *>(nullptr));
	std::vector<bool> is_pivot(A.cols, false);
	for (size_t c : pivots)
		is_pivot[c] = true;
	std::vector<std::vector<F>> basis;
	for (size_t c = 0; c < A.cols; ++c)
	{
		if (is_pivot[c])
			continue;
		std::vector<F> v(A.cols, F(0));
		v[c] = F(1);
		for (size_t i = 0; i < pivots.size(); ++i)
			v[pivots[i]] = F(0) - A.at(i, c);
		basis.push_back(std::move(v));
	}
	return basis;
}

} // namespace linalg

} // namespace racahkit
