#pragma once

#include <functional>
#include <vector>

#include "framekit/matrix.hpp"

namespace framekit::spectral {

// Relative eigenvalue cutoff: eigenvalues with |lambda| <= relative_cutoff *
// max|lambda| are treated as zero by every inverse-type operator function.
// This is the finite-dimensional stand-in for an unbounded inverse.
struct RankTolerance {
    double relative_cutoff = 1e-12;

    RankTolerance() = default;
    explicit RankTolerance(double cutoff);
};

class HermitianMatrix {
public:
    // Validates finiteness and squareness, then symmetrizes A <- (A + A^H)/2.
    explicit HermitianMatrix(Matrix m);

    static HermitianMatrix diagonal(const std::vector<double>& entries);

    std::size_t dim() const { return m_.rows(); }
    const Matrix& matrix() const { return m_; }
    const cx& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

private:
    Matrix m_;
};

struct EigenDecomposition {
    std::vector<double> eigenvalues; // sorted descending
    Matrix eigenvectors;             // unitary; column i pairs with eigenvalues[i]
};

// Cyclic Jacobi. Deterministic: fixed sweep order, descending eigenvalue sort
// with ties broken by the index of the eigenvector's largest-magnitude
// component, and each eigenvector phased so that component is real positive.
// Converges when the off-diagonal Frobenius norm drops below 1e-14 * ||A||_F
// (at most 100 sweeps).
EigenDecomposition eig(const HermitianMatrix& A);

enum class FnClass {
    direct,  // f applied to every eigenvalue
    inverse, // eigenvalues under the cutoff map to 0 instead of through f
};

// U f(Lambda) U^H, re-symmetrized. Throws SingularOperator when f produces a
// non-finite value on a retained eigenvalue.
HermitianMatrix apply_function(const HermitianMatrix& A,
                               const std::function<double(double)>& f,
                               const RankTolerance& tol, FnClass cls);

// Named operator functions used throughout the toolkit. The sqrt variants
// clamp roundoff-negative eigenvalues (within the cutoff band) to zero and
// reject genuinely negative ones.
HermitianMatrix spectral_pinv(const HermitianMatrix& A, const RankTolerance& tol);
HermitianMatrix spectral_sqrt(const HermitianMatrix& A, const RankTolerance& tol);
HermitianMatrix spectral_inv_sqrt(const HermitianMatrix& A, const RankTolerance& tol);

// Same, but reusing an existing decomposition.
Matrix map_eigenvalues(const EigenDecomposition& ed,
                       const std::function<double(double)>& f);

int retained_rank(const std::vector<double>& eigenvalues, const RankTolerance& tol);

// Moore-Penrose pseudo-inverse of a general complex matrix, computed from the
// eigendecomposition of M^H M or M M^H, whichever is smaller.
Matrix pseudo_inverse(const Matrix& M, const RankTolerance& tol);

} // namespace framekit::spectral
