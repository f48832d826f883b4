#include "framekit/fusion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "framekit/errors.hpp"
#include "framekit/frame_ops.hpp"

namespace framekit::fusion {

namespace {

void validate_weights(const std::vector<double>& weights, std::size_t expected) {
    if (weights.size() != expected) throw InvalidInput("fusion: weight count mismatch");
    for (double v : weights) {
        if (!std::isfinite(v) || v <= 0.0) {
            throw InvalidInput("fusion: weights must be positive and finite");
        }
    }
}

// Modified Gram-Schmidt with one reorthogonalization pass; near-dependent
// columns are dropped.
Matrix orthonormalize(const Matrix& raw) {
    const std::size_t d = raw.rows();
    std::vector<Vector> kept;
    const double drop_tol = 1e-12;
    for (std::size_t j = 0; j < raw.cols(); ++j) {
        Vector v(raw.col(j), raw.col(j) + d);
        const double original = norm2(v);
        if (original == 0.0) continue;
        for (int pass = 0; pass < 2; ++pass) {
            for (const Vector& q : kept) {
                const cx coeff = inner(q, v);
                kernels::zaxpy(-coeff, q.data(), v.data(), d);
            }
        }
        const double remaining = norm2(v);
        if (remaining <= drop_tol * original) continue;
        for (cx& z : v) z /= remaining;
        kept.push_back(std::move(v));
    }
    if (kept.empty()) throw InvalidInput("fusion: subspace spanning set is zero");
    Matrix b(d, kept.size());
    for (std::size_t j = 0; j < kept.size(); ++j) {
        std::copy(kept[j].begin(), kept[j].end(), b.col(j));
    }
    return b;
}

// pi f = B (B^H f)
Vector project(const Matrix& basis, const Vector& f) {
    return matvec(basis, adjoint_matvec(basis, f));
}

} // namespace

WeightedFamily make_weighted(FamilyMatrix base, std::vector<double> weights) {
    validate_weights(weights, base.count());
    return WeightedFamily{std::move(base), std::move(weights)};
}

FamilyMatrix weighted_to_plain(const WeightedFamily& w) {
    Matrix cols = w.base.columns;
    for (std::size_t k = 0; k < cols.cols(); ++k) {
        for (std::size_t i = 0; i < cols.rows(); ++i) cols(i, k) *= w.weights[k];
    }
    return family::make_family(std::move(cols), w.base.label + "_weighted");
}

SubspaceFamily make_subspace_family(std::vector<Matrix> spanning_sets,
                                    std::vector<double> weights) {
    if (spanning_sets.empty()) throw InvalidInput("fusion: no subspaces");
    validate_weights(weights, spanning_sets.size());
    const std::size_t d = spanning_sets.front().rows();
    SubspaceFamily fam;
    for (Matrix& raw : spanning_sets) {
        if (raw.rows() != d) throw DimMismatch("fusion: subspaces live in different dimensions");
        if (!raw.all_finite()) throw InvalidInput("fusion: non-finite basis entry");
        fam.bases.push_back(orthonormalize(raw));
    }
    fam.weights = std::move(weights);
    return fam;
}

std::vector<Vector> fusion_analysis(const SubspaceFamily& fam, const Vector& f) {
    if (f.size() != fam.dim()) throw DimMismatch("fusion_analysis: vector dimension mismatch");
    std::vector<Vector> parts;
    parts.reserve(fam.count());
    for (std::size_t j = 0; j < fam.count(); ++j) {
        Vector pj = project(fam.bases[j], f);
        for (cx& z : pj) z *= fam.weights[j];
        parts.push_back(std::move(pj));
    }
    return parts;
}

spectral::HermitianMatrix fusion_frame_operator(const SubspaceFamily& fam) {
    const std::size_t d = fam.dim();
    Matrix s(d, d);
    for (std::size_t j = 0; j < fam.count(); ++j) {
        const Matrix& b = fam.bases[j];
        const double w2 = fam.weights[j] * fam.weights[j];
        // S += w^2 B B^H, accumulated column by column
        for (std::size_t c = 0; c < d; ++c) {
            for (std::size_t k = 0; k < b.cols(); ++k) {
                kernels::zaxpy(w2 * std::conj(b(c, k)), b.col(k), s.col(c), d);
            }
        }
    }
    return spectral::HermitianMatrix(std::move(s));
}

dual_recon::ReconstructionResult fusion_reconstruct(const SubspaceFamily& fam, const Vector& f,
                                                    const RankTolerance& tol) {
    if (f.size() != fam.dim()) throw DimMismatch("fusion_reconstruct: vector dimension mismatch");
    const spectral::HermitianMatrix s = fusion_frame_operator(fam);
    const spectral::EigenDecomposition ed = spectral::eig(s);
    const bool spanning =
        spectral::retained_rank(ed.eigenvalues, tol) == static_cast<int>(fam.dim());
    const double cut = tol.relative_cutoff *
                       (ed.eigenvalues.empty() ? 0.0 : std::abs(ed.eigenvalues.front()));
    const Matrix s_pinv = spectral::map_eigenvalues(
        ed, [&](double lam) { return std::abs(lam) <= cut ? 0.0 : 1.0 / lam; });

    Vector acc(fam.dim(), cx{0.0, 0.0});
    for (std::size_t j = 0; j < fam.count(); ++j) {
        const Vector pj = project(fam.bases[j], f);
        kernels::zaxpy(cx{fam.weights[j] * fam.weights[j], 0.0}, pj.data(), acc.data(),
                       fam.dim());
    }
    Vector rec = matvec(s_pinv, acc);

    dual_recon::ReconstructionResult out;
    const double nf = norm2(f);
    out.residual = nf > 0.0 ? norm2(subtract(rec, f)) / nf : 0.0;
    out.reconstructed = std::move(rec);
    out.projected_onto_span = !spanning;
    return out;
}

SubspaceFamily fusion_dual(const SubspaceFamily& fam, const RankTolerance& tol) {
    const spectral::HermitianMatrix s = fusion_frame_operator(fam);
    const Matrix s_pinv = spectral::spectral_pinv(s, tol).matrix();
    SubspaceFamily dual;
    dual.weights = fam.weights;
    for (const Matrix& b : fam.bases) {
        dual.bases.push_back(orthonormalize(multiply(s_pinv, b)));
    }
    return dual;
}

std::vector<double> principal_angles(const Matrix& b1, const Matrix& b2) {
    if (b1.rows() != b2.rows()) throw DimMismatch("principal_angles: ambient dimensions differ");
    // sin(theta_i) are the singular values of (I - B1 B1^H) B2
    Matrix rejected = b2;
    for (std::size_t j = 0; j < b2.cols(); ++j) {
        Vector col(b2.col(j), b2.col(j) + b2.rows());
        const Vector proj = matvec(b1, adjoint_matvec(b1, col));
        for (std::size_t i = 0; i < b2.rows(); ++i) rejected(i, j) -= proj[i];
    }
    const spectral::HermitianMatrix gram(adjoint_multiply(rejected, rejected));
    const spectral::EigenDecomposition ed = spectral::eig(gram);
    std::vector<double> angles;
    for (auto it = ed.eigenvalues.rbegin(); it != ed.eigenvalues.rend(); ++it) {
        const double sin_sq = std::max(0.0, *it);
        angles.push_back(std::asin(std::min(1.0, std::sqrt(sin_sq))));
    }
    return angles; // ascending
}

BoundTransferReport bound_transfer_report(const WeightedFamily& w,
                                          const std::vector<std::pair<int, int>>& blocks,
                                          const RankTolerance& tol) {
    if (blocks.empty()) throw InvalidInput("bound_transfer_report: no blocks");
    BoundTransferReport rep;

    const FamilyMatrix plain = weighted_to_plain(w);
    const frame_ops::FrameDiagnostics plain_diag = frame_ops::diagnostics(plain, tol);
    rep.m_plain = plain_diag.lower_bound;
    rep.M_plain = plain_diag.upper_bound;

    std::vector<Matrix> spans;
    std::vector<double> weights;
    rep.A_inf = std::numeric_limits<double>::infinity();
    rep.B_sup = 0.0;
    for (const auto& [begin, end] : blocks) {
        if (begin < 0 || end <= begin || static_cast<std::size_t>(end) > w.base.count()) {
            throw InvalidInput("bound_transfer_report: bad block range");
        }
        const double v = w.weights[begin];
        for (int k = begin; k < end; ++k) {
            if (w.weights[k] != v) {
                throw InvalidInput("bound_transfer_report: weights not constant on block");
            }
        }
        Matrix block(w.base.dim(), end - begin);
        for (int k = begin; k < end; ++k) {
            std::copy(w.base.columns.col(k), w.base.columns.col(k) + w.base.dim(),
                      block.col(k - begin));
        }
        // per-block frame bounds on the span: extreme nonzero eigenvalues
        const spectral::HermitianMatrix sj(multiply(block, adjoint(block)));
        const spectral::EigenDecomposition ed = spectral::eig(sj);
        const double cut = tol.relative_cutoff *
                           (ed.eigenvalues.empty() ? 0.0 : std::abs(ed.eigenvalues.front()));
        double aj = std::numeric_limits<double>::infinity();
        double bj = 0.0;
        for (double lam : ed.eigenvalues) {
            if (std::abs(lam) > cut) {
                aj = std::min(aj, lam);
                bj = std::max(bj, lam);
            }
        }
        rep.A_inf = std::min(rep.A_inf, aj);
        rep.B_sup = std::max(rep.B_sup, bj);
        spans.push_back(std::move(block));
        weights.push_back(v);
    }

    const SubspaceFamily fam = make_subspace_family(std::move(spans), std::move(weights));
    const spectral::EigenDecomposition ed = spectral::eig(fusion_frame_operator(fam));
    rep.M_fusion = ed.eigenvalues.empty() ? 0.0 : ed.eigenvalues.front();
    rep.m_fusion = ed.eigenvalues.empty() ? 0.0 : ed.eigenvalues.back();

    const double slack = 1e-9;
    rep.sandwich_holds = rep.m_fusion >= rep.m_plain / rep.B_sup - slack &&
                         rep.M_fusion <= rep.M_plain / rep.A_inf + slack;
    return rep;
}

} // namespace framekit::fusion
