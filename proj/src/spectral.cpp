#include "framekit/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "framekit/errors.hpp"

namespace framekit::spectral {

RankTolerance::RankTolerance(double cutoff) : relative_cutoff(cutoff) {
    if (!std::isfinite(cutoff) || cutoff <= 0.0) {
        throw InvalidInput("RankTolerance: relative cutoff must be positive and finite");
    }
}

HermitianMatrix::HermitianMatrix(Matrix m) {
    if (m.rows() != m.cols()) throw InvalidInput("HermitianMatrix: matrix not square");
    if (!m.all_finite()) throw InvalidInput("HermitianMatrix: non-finite entry");
    m_ = hermitize(m);
}

HermitianMatrix HermitianMatrix::diagonal(const std::vector<double>& entries) {
    Matrix m(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
    return HermitianMatrix(std::move(m));
}

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kConvergence = 1e-14;

double off_diagonal_norm(const Matrix& w) {
    double s = 0.0;
    const std::size_t d = w.rows();
    for (std::size_t q = 1; q < d; ++q) {
        for (std::size_t p = 0; p < q; ++p) {
            s += std::norm(w(p, q));
        }
    }
    return std::sqrt(2.0 * s);
}

// index of the largest-magnitude component of column j
std::size_t argmax_component(const Matrix& u, std::size_t j) {
    std::size_t best = 0;
    double best_mag = -1.0;
    for (std::size_t i = 0; i < u.rows(); ++i) {
        const double m = std::norm(u(i, j));
        if (m > best_mag) {
            best_mag = m;
            best = i;
        }
    }
    return best;
}

} // namespace

EigenDecomposition eig(const HermitianMatrix& A) {
    const std::size_t d = A.dim();
    Matrix w = A.matrix();
    if (!w.all_finite()) throw InvalidInput("eig: non-finite entry");
    Matrix u = Matrix::identity(d);

    const double norm_f = frobenius(w);
    const double threshold = kConvergence * norm_f;

    if (norm_f > 0.0) {
        for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
            if (off_diagonal_norm(w) <= threshold) break;
            // small entries are skipped; the bound keeps the final
            // off-diagonal mass under the convergence threshold
            const double skip = threshold / static_cast<double>(d * d);
            for (std::size_t p = 0; p + 1 < d; ++p) {
                for (std::size_t q = p + 1; q < d; ++q) {
                    const cx beta = w(p, q);
                    const double abeta = std::abs(beta);
                    if (abeta <= skip) continue;

                    const double alpha = w(p, p).real();
                    const double gamma = w(q, q).real();
                    const double tau = (alpha - gamma) / (2.0 * abeta);
                    // smaller root of t^2 - 2 tau t - 1 = 0
                    const double t = tau >= 0.0
                                         ? -1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                         : 1.0 / (-tau + std::sqrt(1.0 + tau * tau));
                    const double c = 1.0 / std::sqrt(1.0 + t * t);
                    const cx phase = beta / abeta;
                    const cx s = (t * c) * phase;

                    // columns: W <- W V with V = [[c, s], [-conj(s), c]]
                    kernels::rot2(w.col(p), w.col(q), cx{c, 0.0}, -std::conj(s), s,
                                  cx{c, 0.0}, d);
                    // rows follow by Hermitian symmetry
                    for (std::size_t j = 0; j < d; ++j) {
                        if (j == p || j == q) continue;
                        w(p, j) = std::conj(w(j, p));
                        w(q, j) = std::conj(w(j, q));
                    }
                    w(p, p) = alpha - t * abeta;
                    w(q, q) = gamma + t * abeta;
                    w(p, q) = 0.0;
                    w(q, p) = 0.0;

                    kernels::rot2(u.col(p), u.col(q), cx{c, 0.0}, -std::conj(s), s,
                                  cx{c, 0.0}, d);
                }
            }
        }
    }

    std::vector<std::size_t> order(d);
    std::iota(order.begin(), order.end(), 0);
    std::vector<double> lam(d);
    std::vector<std::size_t> anchor(d);
    for (std::size_t j = 0; j < d; ++j) {
        lam[j] = w(j, j).real();
        anchor[j] = argmax_component(u, j);
    }
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (lam[a] != lam[b]) return lam[a] > lam[b];
        return anchor[a] < anchor[b];
    });

    EigenDecomposition ed;
    ed.eigenvalues.resize(d);
    ed.eigenvectors = Matrix(d, d);
    for (std::size_t j = 0; j < d; ++j) {
        const std::size_t src = order[j];
        ed.eigenvalues[j] = lam[src];
        const cx pivot = u(anchor[src], src);
        // phase so the anchor component is real positive
        const double mag = std::abs(pivot);
        const cx rot = mag > 0.0 ? std::conj(pivot) / mag : cx{1.0, 0.0};
        for (std::size_t i = 0; i < d; ++i) {
            ed.eigenvectors(i, j) = rot * u(i, src);
        }
    }
    return ed;
}

Matrix map_eigenvalues(const EigenDecomposition& ed, const std::function<double(double)>& f) {
    const std::size_t d = ed.eigenvalues.size();
    Matrix scaled = ed.eigenvectors;
    for (std::size_t j = 0; j < d; ++j) {
        const double fj = f(ed.eigenvalues[j]);
        if (!std::isfinite(fj)) {
            throw SingularOperator("map_eigenvalues: function not finite on retained eigenvalue");
        }
        for (std::size_t i = 0; i < d; ++i) scaled(i, j) *= fj;
    }
    return multiply(scaled, adjoint(ed.eigenvectors));
}

namespace {

double max_abs_eigenvalue(const std::vector<double>& lam) {
    double m = 0.0;
    for (double v : lam) m = std::max(m, std::abs(v));
    return m;
}

HermitianMatrix rebuild(const EigenDecomposition& ed, const std::function<double(double)>& f) {
    return HermitianMatrix(map_eigenvalues(ed, f));
}

} // namespace

HermitianMatrix apply_function(const HermitianMatrix& A, const std::function<double(double)>& f,
                               const RankTolerance& tol, FnClass cls) {
    const EigenDecomposition ed = eig(A);
    if (cls == FnClass::direct) {
        return rebuild(ed, f);
    }
    const double cut = tol.relative_cutoff * max_abs_eigenvalue(ed.eigenvalues);
    return rebuild(ed, [&](double lam) { return std::abs(lam) <= cut ? 0.0 : f(lam); });
}

HermitianMatrix spectral_pinv(const HermitianMatrix& A, const RankTolerance& tol) {
    return apply_function(A, [](double lam) { return 1.0 / lam; }, tol, FnClass::inverse);
}

HermitianMatrix spectral_sqrt(const HermitianMatrix& A, const RankTolerance& tol) {
    const EigenDecomposition ed = eig(A);
    const double cut = tol.relative_cutoff * max_abs_eigenvalue(ed.eigenvalues);
    return rebuild(ed, [&](double lam) {
        if (lam < -cut) {
            throw SingularOperator("spectral_sqrt: negative eigenvalue beyond cutoff");
        }
        return lam > 0.0 ? std::sqrt(lam) : 0.0;
    });
}

HermitianMatrix spectral_inv_sqrt(const HermitianMatrix& A, const RankTolerance& tol) {
    const EigenDecomposition ed = eig(A);
    const double cut = tol.relative_cutoff * max_abs_eigenvalue(ed.eigenvalues);
    return rebuild(ed, [&](double lam) {
        if (std::abs(lam) <= cut) return 0.0;
        if (lam < 0.0) {
            throw SingularOperator("spectral_inv_sqrt: negative eigenvalue beyond cutoff");
        }
        return 1.0 / std::sqrt(lam);
    });
}

int retained_rank(const std::vector<double>& eigenvalues, const RankTolerance& tol) {
    const double cut = tol.relative_cutoff * max_abs_eigenvalue(eigenvalues);
    int rank = 0;
    for (double lam : eigenvalues) {
        if (std::abs(lam) > cut) ++rank;
    }
    return rank;
}

Matrix pseudo_inverse(const Matrix& M, const RankTolerance& tol) {
    if (!M.all_finite()) throw InvalidInput("pseudo_inverse: non-finite entry");
    if (M.rows() == 0 || M.cols() == 0) return Matrix(M.cols(), M.rows());
    if (M.rows() <= M.cols()) {
        // M+ = M^H (M M^H)+
        const HermitianMatrix gram(multiply(M, adjoint(M)));
        return adjoint_multiply(M, spectral_pinv(gram, tol).matrix());
    }
    // M+ = (M^H M)+ M^H = (M (M^H M)+)^H
    const HermitianMatrix gram(adjoint_multiply(M, M));
    return adjoint(multiply(M, spectral_pinv(gram, tol).matrix()));
}

} // namespace framekit::spectral
