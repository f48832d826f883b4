#include "framekit/matrix.hpp"

#include <cmath>

#include "framekit/errors.hpp"

namespace framekit {

bool Matrix::all_finite() const {
    for (const cx& z : a_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    }
    return true;
}

Matrix adjoint(const Matrix& A) {
    Matrix B(A.cols(), A.rows());
    for (std::size_t j = 0; j < A.cols(); ++j) {
        for (std::size_t i = 0; i < A.rows(); ++i) {
            B(j, i) = std::conj(A(i, j));
        }
    }
    return B;
}

Matrix multiply(const Matrix& A, const Matrix& B) {
    if (A.cols() != B.rows()) throw DimMismatch("multiply: inner dimensions disagree");
    Matrix C(A.rows(), B.cols());
    // C[:,j] = sum_k B(k,j) * A[:,k]; every access is a contiguous column.
    for (std::size_t j = 0; j < B.cols(); ++j) {
        for (std::size_t k = 0; k < A.cols(); ++k) {
            const cx w = B(k, j);
            if (w == cx{0.0, 0.0}) continue;
            kernels::zaxpy(w, A.col(k), C.col(j), A.rows());
        }
    }
    return C;
}

Matrix adjoint_multiply(const Matrix& A, const Matrix& B) {
    if (A.rows() != B.rows()) throw DimMismatch("adjoint_multiply: row counts disagree");
    Matrix C(A.cols(), B.cols());
    for (std::size_t j = 0; j < B.cols(); ++j) {
        for (std::size_t i = 0; i < A.cols(); ++i) {
            C(i, j) = kernels::zdotc(A.col(i), B.col(j), A.rows());
        }
    }
    return C;
}

Vector matvec(const Matrix& A, const Vector& x) {
    if (x.size() != A.cols()) throw DimMismatch("matvec: vector length != column count");
    Vector y(A.rows(), cx{0.0, 0.0});
    for (std::size_t k = 0; k < A.cols(); ++k) {
        if (x[k] == cx{0.0, 0.0}) continue;
        kernels::zaxpy(x[k], A.col(k), y.data(), A.rows());
    }
    return y;
}

Vector adjoint_matvec(const Matrix& A, const Vector& x) {
    if (x.size() != A.rows()) throw DimMismatch("adjoint_matvec: vector length != row count");
    Vector y(A.cols());
    for (std::size_t k = 0; k < A.cols(); ++k) {
        y[k] = kernels::zdotc(A.col(k), x.data(), A.rows());
    }
    return y;
}

Matrix hermitize(const Matrix& A) {
    if (A.rows() != A.cols()) throw DimMismatch("hermitize: matrix not square");
    Matrix B(A.rows(), A.cols());
    for (std::size_t j = 0; j < A.cols(); ++j) {
        for (std::size_t i = 0; i < A.rows(); ++i) {
            B(i, j) = 0.5 * (A(i, j) + std::conj(A(j, i)));
        }
    }
    return B;
}

double max_abs(const Matrix& A) {
    double m = 0.0;
    const cx* p = A.data();
    for (std::size_t i = 0; i < A.rows() * A.cols(); ++i) {
        m = std::max(m, std::abs(p[i]));
    }
    return m;
}

double frobenius(const Matrix& A) {
    return std::sqrt(kernels::nrm2sq(A.data(), A.rows() * A.cols()));
}

double norm2(const Vector& v) { return std::sqrt(kernels::nrm2sq(v.data(), v.size())); }

cx inner(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw DimMismatch("inner: vector lengths disagree");
    return kernels::zdotc(a.data(), b.data(), a.size());
}

Vector subtract(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw DimMismatch("subtract: vector lengths disagree");
    Vector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Matrix subtract(const Matrix& A, const Matrix& B) {
    if (A.rows() != B.rows() || A.cols() != B.cols()) {
        throw DimMismatch("subtract: matrix shapes disagree");
    }
    Matrix R(A.rows(), A.cols());
    for (std::size_t i = 0; i < A.rows() * A.cols(); ++i) {
        R.data()[i] = A.data()[i] - B.data()[i];
    }
    return R;
}

} // namespace framekit
