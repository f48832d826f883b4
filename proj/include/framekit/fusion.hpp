#pragma once

#include <utility>
#include <vector>

#include "framekit/dual_recon.hpp"
#include "framekit/family.hpp"
#include "framekit/spectral.hpp"

namespace framekit::fusion {

using family::FamilyMatrix;
using spectral::RankTolerance;

struct WeightedFamily {
    FamilyMatrix base;
    std::vector<double> weights; // v_k > 0, one per column
};

WeightedFamily make_weighted(FamilyMatrix base, std::vector<double> weights);

// Columns v_k psi_k; all plain frame diagnostics apply to the result.
FamilyMatrix weighted_to_plain(const WeightedFamily& w);

// Weighted closed subspaces, each stored as an orthonormal basis so the
// projector is just B B^H.
struct SubspaceFamily {
    std::vector<Matrix> bases; // d x n_j, orthonormal columns
    std::vector<double> weights;

    std::size_t dim() const { return bases.empty() ? 0 : bases.front().rows(); }
    std::size_t count() const { return bases.size(); }
};

// Orthonormalizes each spanning set (Gram-Schmidt with reorthogonalization,
// dropping dependent columns) and validates weights.
SubspaceFamily make_subspace_family(std::vector<Matrix> spanning_sets,
                                    std::vector<double> weights);

// Component j is v_j * pi_j f.
std::vector<Vector> fusion_analysis(const SubspaceFamily& fam, const Vector& f);

// S = sum_j v_j^2 B_j B_j^H
spectral::HermitianMatrix fusion_frame_operator(const SubspaceFamily& fam);

// f = sum_j v_j^2 S^{-1} pi_j f; projection of f when the subspaces do not span.
dual_recon::ReconstructionResult fusion_reconstruct(const SubspaceFamily& fam, const Vector& f,
                                                    const RankTolerance& tol);

// Dual family: subspace j becomes S^{-1} H_j (re-orthonormalized), same weights.
SubspaceFamily fusion_dual(const SubspaceFamily& fam, const RankTolerance& tol);

// Principal angles (radians, ascending) between two subspaces given by
// orthonormal bases, computed through sines for accuracy near zero.
std::vector<double> principal_angles(const Matrix& b1, const Matrix& b2);

// The bound transfer from a block-constant weighted family to its fusion
// frame: with per-block frame bounds A_j, B_j and plain weighted bounds
// (m, M), the fusion bounds satisfy m/B <= m_fusion and M_fusion <= M/A.
struct BoundTransferReport {
    double m_plain = 0.0;
    double M_plain = 0.0;
    double A_inf = 0.0; // inf_j A_j
    double B_sup = 0.0; // sup_j B_j
    double m_fusion = 0.0;
    double M_fusion = 0.0;
    bool sandwich_holds = false;
};

// blocks: [begin, end) column ranges of the weighted family, one per subspace;
// weights must be constant within each block.
BoundTransferReport bound_transfer_report(const WeightedFamily& w,
                                          const std::vector<std::pair<int, int>>& blocks,
                                          const RankTolerance& tol);

} // namespace framekit::fusion
