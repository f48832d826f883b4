#include "framekit/dual_recon.hpp"

#include <cmath>
#include <limits>

#include "framekit/errors.hpp"

namespace framekit::dual_recon {

namespace {

constexpr double kRangeTol = 1e-9;     // membership slack for range checks
constexpr double kRegularityTol = 1e-9;

double rel_residual(const Vector& rec, const Vector& f) {
    const double nf = norm2(f);
    if (nf == 0.0) return 0.0;
    return norm2(subtract(rec, f)) / nf;
}

ReconstructionResult make_result(Vector rec, const Vector& f, bool total) {
    ReconstructionResult r;
    r.residual = rel_residual(rec, f);
    r.reconstructed = std::move(rec);
    r.projected_onto_span = !total;
    return r;
}

} // namespace

GramOperators gram_operators(const FamilyMatrix& psi, const RankTolerance& tol) {
    GramOperators g;
    const spectral::HermitianMatrix G(adjoint_multiply(psi.columns, psi.columns));
    const spectral::EigenDecomposition ed = spectral::eig(G);
    g.G = G.matrix();
    g.retained_rank = spectral::retained_rank(ed.eigenvalues, tol);

    const double cut = tol.relative_cutoff *
                       (ed.eigenvalues.empty() ? 0.0 : std::abs(ed.eigenvalues.front()));
    g.G_pinv = spectral::map_eigenvalues(
        ed, [&](double lam) { return std::abs(lam) <= cut ? 0.0 : 1.0 / lam; });
    g.G_half = spectral::map_eigenvalues(
        ed, [&](double lam) { return lam > 0.0 ? std::sqrt(lam) : 0.0; });
    g.G_minus_half = spectral::map_eigenvalues(
        ed, [&](double lam) { return std::abs(lam) <= cut || lam < 0.0 ? 0.0 : 1.0 / std::sqrt(lam); });
    return g;
}

CanonicalDual canonical_dual(const FamilyMatrix& psi, const RankTolerance& tol) {
    const spectral::HermitianMatrix S = frame_ops::frame_operator(psi);
    const spectral::EigenDecomposition ed = spectral::eig(S);
    const bool total =
        spectral::retained_rank(ed.eigenvalues, tol) == static_cast<int>(psi.dim());
    const double cut = tol.relative_cutoff *
                       (ed.eigenvalues.empty() ? 0.0 : std::abs(ed.eigenvalues.front()));
    const Matrix s_pinv = spectral::map_eigenvalues(
        ed, [&](double lam) { return std::abs(lam) <= cut ? 0.0 : 1.0 / lam; });

    CanonicalDual out;
    out.dual = family::FamilyMatrix{multiply(s_pinv, psi.columns), psi.label + "~"};
    out.dual_on_range = !total;
    return out;
}

Matrix projection_P(const FamilyMatrix& psi, const RankTolerance& tol) {
    const spectral::HermitianMatrix S = frame_ops::frame_operator(psi);
    const Matrix s_pinv = spectral::spectral_pinv(S, tol).matrix();
    // C S^+ D = A^H S^+ A
    return adjoint_multiply(psi.columns, multiply(s_pinv, psi.columns));
}

Matrix kernel_matrix(const FamilyMatrix& psi, const RankTolerance& tol) {
    const CanonicalDual dual = canonical_dual(psi, tol);
    const std::size_t n = psi.count();
    Matrix k(n, n);
    for (std::size_t l = 0; l < n; ++l) {
        for (std::size_t kk = 0; kk < n; ++kk) {
            k(kk, l) = kernels::zdotc(psi.columns.col(kk), dual.dual.columns.col(l), psi.dim());
        }
    }
    return k;
}

PsiInnerResult psi_inner(const Vector& c, const Vector& d, const GramOperators& gram) {
    if (c.size() != gram.G.rows() || d.size() != gram.G.rows()) {
        throw DimMismatch("psi_inner: coefficient length != family count");
    }
    PsiInnerResult out;
    // G^+ d already lives in range(C); pairing against c discards any
    // component of c outside the range, so the value is the projected one.
    const Vector gd = matvec(gram.G_pinv, d);
    out.value = inner(c, gd);

    // flag inputs that were not in range(C): || G G^+ v - v || > tol ||v||
    const auto in_range = [&](const Vector& v) {
        const Vector proj = matvec(gram.G, matvec(gram.G_pinv, v));
        const double nv = norm2(v);
        return nv == 0.0 || norm2(subtract(proj, v)) <= kRangeTol * nv;
    };
    out.projected_c = !in_range(c);
    out.projected_d = !in_range(d);
    return out;
}

FrameReconstruction reconstruct_frame(const FamilyMatrix& psi, const Vector& f,
                                      const RankTolerance& tol) {
    if (f.size() != psi.dim()) throw DimMismatch("reconstruct_frame: vector dimension mismatch");
    const CanonicalDual dual = canonical_dual(psi, tol);
    const bool total = !dual.dual_on_range;

    FrameReconstruction out;
    // f = sum_k <psi_k, f> psi~_k
    out.via_dual_coefficients = make_result(
        frame_ops::synthesis(dual.dual, frame_ops::analysis(psi, f)), f, total);
    // f = sum_k <psi~_k, f> psi_k
    out.via_dual_family = make_result(
        frame_ops::synthesis(psi, frame_ops::analysis(dual.dual, f)), f, total);
    return out;
}

ReconstructionResult reconstruct_RD(const FamilyMatrix& psi, const Vector& f,
                                    const GramOperators& gram, const RankTolerance& tol) {
    if (f.size() != psi.dim()) throw DimMismatch("reconstruct_RD: vector dimension mismatch");
    const Vector rec =
        frame_ops::synthesis(psi, matvec(gram.G_pinv, frame_ops::analysis(psi, f)));
    const bool total = frame_ops::diagnostics(psi, tol).total;
    return make_result(rec, f, total);
}

ReconstructionResult reconstruct_full(const FamilyMatrix& psi, const Vector& f,
                                      const GramOperators& gram, const RankTolerance& tol) {
    if (f.size() != psi.dim()) throw DimMismatch("reconstruct_full: vector dimension mismatch");
    const spectral::HermitianMatrix S = frame_ops::frame_operator(psi);
    const Matrix s_minus_half = spectral::spectral_inv_sqrt(S, tol).matrix();
    const Vector mid =
        frame_ops::synthesis(psi, matvec(gram.G_minus_half, frame_ops::analysis(psi, f)));
    const bool total = frame_ops::diagnostics(psi, tol).total;
    return make_result(matvec(s_minus_half, mid), f, total);
}

SqrtFactorizationReport sqrt_factorization_check(const FamilyMatrix& psi,
                                                 const RankTolerance& tol) {
    const GramOperators gram = gram_operators(psi, tol);
    const spectral::HermitianMatrix S = frame_ops::frame_operator(psi);
    const Matrix s_half = spectral::spectral_sqrt(S, tol).matrix();
    // D G^{-1/2} C = A G^{-1/2} A^H
    const Matrix factored =
        multiply(multiply(psi.columns, gram.G_minus_half), adjoint(psi.columns));
    SqrtFactorizationReport rep;
    rep.abs_residual = max_abs(subtract(s_half, factored));
    const double scale = max_abs(s_half);
    rep.rel_residual = scale > 0.0 ? rep.abs_residual / scale : rep.abs_residual;
    return rep;
}

TripletReport triplet_report(const FamilyMatrix& psi, const Vector& c, const Vector& f,
                             const GramOperators& gram, const RankTolerance& tol) {
    if (c.size() != psi.count()) throw DimMismatch("triplet_report: coefficient length mismatch");
    if (f.size() != psi.dim()) throw DimMismatch("triplet_report: vector dimension mismatch");
    TripletReport rep;
    rep.norm_zero = norm2(c);
    rep.norm_psi = std::sqrt(std::max(0.0, inner(c, matvec(gram.G_pinv, c)).real()));
    rep.norm_psi_cross = std::sqrt(std::max(0.0, inner(c, matvec(gram.G, c)).real()));

    const spectral::HermitianMatrix S = frame_ops::frame_operator(psi);
    const Matrix s_pinv = spectral::spectral_pinv(S, tol).matrix();
    rep.norm_S_frak = norm2(matvec(s_pinv, f));

    const spectral::EigenDecomposition ed = spectral::eig(spectral::HermitianMatrix(gram.G));
    const double lam_max = ed.eigenvalues.empty() ? 0.0 : ed.eigenvalues.front();
    const double cut = tol.relative_cutoff * std::abs(lam_max);
    double lam_min_retained = 0.0;
    for (auto it = ed.eigenvalues.rbegin(); it != ed.eigenvalues.rend(); ++it) {
        if (std::abs(*it) > cut) {
            lam_min_retained = *it;
            break;
        }
    }
    rep.embedding_condition =
        lam_min_retained > 0.0 ? lam_max / lam_min_retained
                               : std::numeric_limits<double>::infinity();
    return rep;
}

FamilyMatrix dual_from_lower(const FamilyMatrix& phi, const RankTolerance& tol) {
    if (!frame_ops::diagnostics(phi, tol).total) {
        throw NotLowerSemiFrame("dual_from_lower: family is not total at this truncation");
    }
    // analysis matrix of Phi is A^H; psi_k = V e_k = column k of its pseudo-inverse
    const Matrix analysis_matrix = adjoint(phi.columns);
    return family::make_family(spectral::pseudo_inverse(analysis_matrix, tol),
                               phi.label + "_dual");
}

DualBoundReport dual_bound_check(const FamilyMatrix& psi, const FamilyMatrix& phi) {
    if (psi.dim() != phi.dim() || psi.count() != phi.count()) {
        throw DimMismatch("dual_bound_check: families must share dim and count");
    }
    DualBoundReport rep;
    const Matrix product = multiply(psi.columns, adjoint(phi.columns));
    rep.duality_residual = max_abs(subtract(product, Matrix::identity(psi.dim())));

    const spectral::EigenDecomposition ed_phi =
        spectral::eig(frame_ops::frame_operator(phi));
    rep.lambda_min_dual = ed_phi.eigenvalues.empty() ? 0.0 : ed_phi.eigenvalues.back();

    const spectral::EigenDecomposition ed_psi =
        spectral::eig(frame_ops::frame_operator(psi));
    rep.upper_bound_psi = ed_psi.eigenvalues.empty() ? 0.0 : ed_psi.eigenvalues.front();

    rep.bound_holds = rep.upper_bound_psi > 0.0 &&
                      rep.lambda_min_dual >= 1.0 / rep.upper_bound_psi - 1e-9;
    return rep;
}

double regularity_residual(const FamilyMatrix& psi, const Vector& v, const RankTolerance& tol) {
    if (v.size() != psi.dim()) throw DimMismatch("regularity_residual: vector dimension mismatch");
    const spectral::HermitianMatrix S = frame_ops::frame_operator(psi);
    const Matrix s_pinv = spectral::spectral_pinv(S, tol).matrix();
    const Vector projected = matvec(S.matrix(), matvec(s_pinv, v));
    const double nv = norm2(v);
    return nv > 0.0 ? norm2(subtract(projected, v)) / nv : 0.0;
}

RegularityReport regularity_check(const FamilyMatrix& psi, const RankTolerance& tol) {
    const spectral::HermitianMatrix S = frame_ops::frame_operator(psi);
    const Matrix s_pinv = spectral::spectral_pinv(S, tol).matrix();
    const Matrix projected = multiply(S.matrix(), multiply(s_pinv, psi.columns));

    RegularityReport rep;
    rep.regular = true;
    rep.column_residuals.resize(psi.count());
    for (std::size_t k = 0; k < psi.count(); ++k) {
        Vector diff(psi.dim());
        for (std::size_t i = 0; i < psi.dim(); ++i) {
            diff[i] = projected(i, k) - psi.columns(i, k);
        }
        const double nk = std::sqrt(kernels::nrm2sq(psi.columns.col(k), psi.dim()));
        const double res = nk > 0.0 ? norm2(diff) / nk : 0.0;
        rep.column_residuals[k] = res;
        if (res > kRegularityTol) rep.regular = false;
    }
    return rep;
}

} // namespace framekit::dual_recon
