#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "framekit/kernels.hpp"

namespace framekit {

using Vector = std::vector<cx>;

// Dense column-major complex matrix. Columns are contiguous, which is what
// the kernels want: analysis/Gram products are column dot products and
// synthesis/rotations are column axpys.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, cx{0.0, 0.0}) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    cx& operator()(std::size_t i, std::size_t j) { return a_[j * rows_ + i]; }
    const cx& operator()(std::size_t i, std::size_t j) const { return a_[j * rows_ + i]; }

    cx* col(std::size_t j) { return a_.data() + j * rows_; }
    const cx* col(std::size_t j) const { return a_.data() + j * rows_; }

    cx* data() { return a_.data(); }
    const cx* data() const { return a_.data(); }

    bool all_finite() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cx> a_;
};

Matrix adjoint(const Matrix& A);

// C = A * B
Matrix multiply(const Matrix& A, const Matrix& B);

// C = A^H * B without materializing the adjoint
Matrix adjoint_multiply(const Matrix& A, const Matrix& B);

Vector matvec(const Matrix& A, const Vector& x);
Vector adjoint_matvec(const Matrix& A, const Vector& x);

// (A + A^H) / 2
Matrix hermitize(const Matrix& A);

double max_abs(const Matrix& A);
double frobenius(const Matrix& A);

double norm2(const Vector& v);
// conjugate-linear in the first argument
cx inner(const Vector& a, const Vector& b);

Vector subtract(const Vector& a, const Vector& b);
Matrix subtract(const Matrix& A, const Matrix& B);

} // namespace framekit
