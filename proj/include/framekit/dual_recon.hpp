#pragma once

#include <vector>

#include "framekit/family.hpp"
#include "framekit/frame_ops.hpp"
#include "framekit/spectral.hpp"

namespace framekit::dual_recon {

using family::FamilyMatrix;
using spectral::RankTolerance;

// Coefficient-side bundle: G = C D = (columns)^H (columns), its truncated
// pseudo-inverse, and the spectral square roots mediating the unitary maps
// between the coefficient spaces. Computed once, shared read-only.
struct GramOperators {
    Matrix G;            // N x N Hermitian PSD
    Matrix G_pinv;
    Matrix G_half;
    Matrix G_minus_half;
    int retained_rank = 0;
};

GramOperators gram_operators(const FamilyMatrix& psi, const RankTolerance& tol);

struct CanonicalDual {
    FamilyMatrix dual;  // columns S^+ psi_k
    bool dual_on_range; // true when S was rank deficient and the pseudo-inverse acted
};

// psi~_k = S^{-1} psi_k. For a frame the dual's frame operator is S^{-1} with
// bounds (1/M, 1/m).
CanonicalDual canonical_dual(const FamilyMatrix& psi, const RankTolerance& tol);

// P = C S^+ D, the orthogonal projection of coefficient space onto range(C).
Matrix projection_P(const FamilyMatrix& psi, const RankTolerance& tol);

// Reproducing kernel matrix, entries <psi_k, S^+ psi_l>. Equals projection_P
// for total families; computed through the canonical dual columns so the two
// routes stay independent.
Matrix kernel_matrix(const FamilyMatrix& psi, const RankTolerance& tol);

struct PsiInnerResult {
    cx value{0.0, 0.0};
    bool projected_c = false; // c had a component outside range(C)
    bool projected_d = false;
};

// <c, d>_Psi = <c, G^+ d>; the analysis operator is unitary for it.
PsiInnerResult psi_inner(const Vector& c, const Vector& d, const GramOperators& gram);

struct ReconstructionResult {
    Vector reconstructed;
    double residual = 0.0;          // ||rec - f|| / ||f||, 0 for f = 0
    bool projected_onto_span = false;
};

struct FrameReconstruction {
    ReconstructionResult via_dual_coefficients; // f = sum_k <psi_k, f> S^{-1} psi_k
    ReconstructionResult via_dual_family;       // f = sum_k <S^{-1} psi_k, f> psi_k
};

FrameReconstruction reconstruct_frame(const FamilyMatrix& psi, const Vector& f,
                                      const RankTolerance& tol);

// f = D G^{-1} C f, valid on range(D)
ReconstructionResult reconstruct_RD(const FamilyMatrix& psi, const Vector& f,
                                    const GramOperators& gram, const RankTolerance& tol);

// f = S^{-1/2} D G^{-1/2} C f, valid on all of H for total families
ReconstructionResult reconstruct_full(const FamilyMatrix& psi, const Vector& f,
                                      const GramOperators& gram, const RankTolerance& tol);

struct SqrtFactorizationReport {
    double abs_residual = 0.0; // ||S_half - D G_minus_half C||_max
    double rel_residual = 0.0; // divided by ||S_half||_max
};

// Checks the factorization S^{1/2} = D G^{-1/2} C.
SqrtFactorizationReport sqrt_factorization_check(const FamilyMatrix& psi,
                                                 const RankTolerance& tol);

// The three coefficient-space norms of the Hilbert triplet plus the norm
// ||S^{-1} f|| of the alternative triplet on the H side.
struct TripletReport {
    double norm_psi = 0.0;        // <c, G^+ c>^{1/2}
    double norm_zero = 0.0;       // l2 norm of c
    double norm_psi_cross = 0.0;  // <c, G c>^{1/2}
    double norm_S_frak = 0.0;     // ||S^+ f||
    double embedding_condition = 0.0; // lambda_max(G) / smallest retained lambda(G)
};

TripletReport triplet_report(const FamilyMatrix& psi, const Vector& c, const Vector& f,
                             const GramOperators& gram, const RankTolerance& tol);

// Duality construction for a total family satisfying the lower frame
// condition: with the standard coefficient basis, the dual vectors are the
// columns of the pseudo-inverse of the analysis matrix. The result is Bessel
// with bound 1/m(Phi) and satisfies f = sum_k <phi_k, f> psi_k.
FamilyMatrix dual_from_lower(const FamilyMatrix& phi, const RankTolerance& tol);

struct DualBoundReport {
    double duality_residual = 0.0; // ||A_psi A_phi^H - I||_max
    double lambda_min_dual = 0.0;  // smallest eigenvalue of S_Phi
    double upper_bound_psi = 0.0;  // M(Psi)
    bool bound_holds = false;      // lambda_min >= 1/M - 1e-9
};

// For a dual pair (Psi upper with bound M, Phi): the dual satisfies the lower
// frame bound 1/M.
DualBoundReport dual_bound_check(const FamilyMatrix& psi, const FamilyMatrix& phi);

struct RegularityReport {
    std::vector<double> column_residuals; // ||S S^+ psi_k - psi_k|| / ||psi_k||
    bool regular = false;                 // all residuals <= 1e-9
};

// Finite-dimensional regularity check: every family vector must survive
// S S^+ (no rank-cutoff activity). Gates the dual-sequence reconstructions.
RegularityReport regularity_check(const FamilyMatrix& psi, const RankTolerance& tol);

// The same membership test for an arbitrary vector: relative residual of
// S S^+ v against v. Mass on eigendirections at or below the rank cutoff of
// psi's frame operator shows up here; regular means residual <= 1e-9.
double regularity_residual(const FamilyMatrix& psi, const Vector& v, const RankTolerance& tol);

} // namespace framekit::dual_recon
