#pragma once

#include <string>
#include <vector>

#include "framekit/examples.hpp"
#include "framekit/family.hpp"
#include "framekit/spectral.hpp"

namespace framekit::frame_ops {

using family::FamilyMatrix;
using spectral::RankTolerance;

struct FrameDiagnostics {
    double lower_bound = 0.0; // m = lambda_min(S), reported 0 below the rank cutoff
    double upper_bound = 0.0; // M = lambda_max(S)
    int rank_S = 0;
    bool total = false;  // rank_S == dim
    bool bessel = true;  // always true at finite dimension; kept for sweep semantics
    double condition = 0.0; // M/m, +inf when m = 0
};

// (Cf)_k = <psi_k, f>, conjugate-linear in the first argument
Vector analysis(const FamilyMatrix& psi, const Vector& f);

// Dc = sum_k c_k psi_k
Vector synthesis(const FamilyMatrix& psi, const Vector& c);

// S = sum_k psi_k psi_k^H, positive semidefinite
spectral::HermitianMatrix frame_operator(const FamilyMatrix& psi);

FrameDiagnostics diagnostics(const FamilyMatrix& psi, const RankTolerance& tol);
FrameDiagnostics diagnostics_from_eig(const spectral::EigenDecomposition& ed,
                                      const RankTolerance& tol);

// |slope| < bounded_abs counts as a bounded trend, slope beyond unbounded_min
// as an unbounded one; the gap keeps borderline fits inconclusive.
struct ClassifyThresholds {
    double bounded_abs = 0.1;
    double unbounded_min = 0.5;
};

enum class Verdict { frame, upper_semi_frame, lower_semi_frame, neither, inconclusive };
std::string to_string(Verdict v);

struct SweepPoint {
    int dim = 0;
    double lower_bound = 0.0;
    double upper_bound = 0.0;
    int rank = 0;
    bool total = false;
};

struct SweepVerdict {
    std::vector<SweepPoint> points;
    double alpha = 0.0; // log-log least-squares slope of m(d); NaN if not fittable
    double beta = 0.0;  // slope of M(d)
    Verdict verdict = Verdict::inconclusive;
};

// Runs diagnostics at every truncation, fits log m(d) and log M(d) against
// log d, and applies the verdict rules. Never claims frame/semi-frame when
// any truncation fails totality.
SweepVerdict classify_sweep(const family::FamilyGenerator& g, const family::TruncationSweep& sweep,
                            const RankTolerance& tol, const ClassifyThresholds& th = {});

} // namespace framekit::frame_ops
