#include "framekit/frame_ops.hpp"

#include <cmath>
#include <limits>

#include "framekit/errors.hpp"

namespace framekit::frame_ops {

Vector analysis(const FamilyMatrix& psi, const Vector& f) {
    if (f.size() != psi.dim()) throw DimMismatch("analysis: vector dimension != family dimension");
    return adjoint_matvec(psi.columns, f);
}

Vector synthesis(const FamilyMatrix& psi, const Vector& c) {
    if (c.size() != psi.count()) throw DimMismatch("synthesis: coefficient count != family count");
    return matvec(psi.columns, c);
}

spectral::HermitianMatrix frame_operator(const FamilyMatrix& psi) {
    return spectral::HermitianMatrix(multiply(psi.columns, adjoint(psi.columns)));
}

FrameDiagnostics diagnostics_from_eig(const spectral::EigenDecomposition& ed,
                                      const RankTolerance& tol) {
    FrameDiagnostics diag;
    const std::size_t d = ed.eigenvalues.size();
    diag.upper_bound = d > 0 ? std::max(ed.eigenvalues.front(), 0.0) : 0.0;
    const double lam_min = d > 0 ? ed.eigenvalues.back() : 0.0;
    const double cut = tol.relative_cutoff * diag.upper_bound;
    diag.rank_S = spectral::retained_rank(ed.eigenvalues, tol);
    diag.total = diag.rank_S == static_cast<int>(d);
    diag.lower_bound = lam_min > cut ? lam_min : 0.0;
    diag.bessel = true;
    diag.condition = diag.lower_bound > 0.0 ? diag.upper_bound / diag.lower_bound
                                            : std::numeric_limits<double>::infinity();
    return diag;
}

FrameDiagnostics diagnostics(const FamilyMatrix& psi, const RankTolerance& tol) {
    return diagnostics_from_eig(spectral::eig(frame_operator(psi)), tol);
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::frame: return "frame";
        case Verdict::upper_semi_frame: return "upper_semi_frame";
        case Verdict::lower_semi_frame: return "lower_semi_frame";
        case Verdict::neither: return "neither";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "?";
}

namespace {

// least-squares slope of log(y) against log(d)
double loglog_slope(const std::vector<SweepPoint>& pts, bool use_lower) {
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    int n = 0;
    for (const SweepPoint& p : pts) {
        const double y = use_lower ? p.lower_bound : p.upper_bound;
        if (y <= 0.0) continue;
        const double lx = std::log(static_cast<double>(p.dim));
        const double ly = std::log(y);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
        ++n;
    }
    if (n < 2) return std::numeric_limits<double>::quiet_NaN();
    const double denom = n * sxx - sx * sx;
    if (denom == 0.0) return std::numeric_limits<double>::quiet_NaN();
    return (n * sxy - sx * sy) / denom;
}

} // namespace

SweepVerdict classify_sweep(const family::FamilyGenerator& g, const family::TruncationSweep& sweep,
                            const RankTolerance& tol, const ClassifyThresholds& th) {
    if (sweep.dims.size() < 3) {
        throw InvalidInput("classify_sweep: need at least 3 truncation dimensions");
    }
    SweepVerdict out;
    bool all_total = true;
    for (int d : sweep.dims) {
        const FamilyMatrix fm = g.produce(d);
        const FrameDiagnostics diag = diagnostics(fm, tol);
        out.points.push_back(
            {d, diag.lower_bound, diag.upper_bound, diag.rank_S, diag.total});
        all_total = all_total && diag.total;
    }
    out.alpha = loglog_slope(out.points, /*use_lower=*/true);
    out.beta = loglog_slope(out.points, /*use_lower=*/false);

    if (!all_total) {
        out.verdict = Verdict::neither;
        return out;
    }
    const bool alpha_ok = std::isfinite(out.alpha);
    const bool beta_ok = std::isfinite(out.beta);
    if (alpha_ok && beta_ok && std::abs(out.alpha) < th.bounded_abs &&
        std::abs(out.beta) < th.bounded_abs) {
        out.verdict = Verdict::frame;
    } else if (alpha_ok && beta_ok && out.alpha < -th.unbounded_min &&
               std::abs(out.beta) < th.bounded_abs) {
        out.verdict = Verdict::upper_semi_frame;
    } else if (alpha_ok && beta_ok && std::abs(out.alpha) < th.bounded_abs &&
               out.beta > th.unbounded_min) {
        out.verdict = Verdict::lower_semi_frame;
    } else {
        out.verdict = Verdict::inconclusive;
    }
    return out;
}

} // namespace framekit::frame_ops
