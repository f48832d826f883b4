#include <cmath>

#include "doctest.h"
#include "framekit/errors.hpp"
#include "framekit/examples.hpp"
#include "framekit/frame_ops.hpp"
#include "oracles.hpp"

using framekit::cx;
using framekit::Matrix;
using framekit::Vector;
namespace fam = framekit::family;
namespace fo = framekit::frame_ops;

namespace {
const framekit::spectral::RankTolerance kTol;

fam::FamilyMatrix diag_family(int d, double p) {
    return fam::truncate(fam::FamilyGenerator::diagonal_weights(fam::WeightRule::power(p)), d);
}
} // namespace

TEST_CASE("analysis against the orthonormal basis") {
    const auto fm = fam::make_family(Matrix::identity(3), "basis");
    const Vector f = {cx{1, 0}, cx{2, 0}, cx{3, 0}};
    const Vector c = fo::analysis(fm, f);
    CHECK(oracle::max_abs_diff(c, f) == 0.0);
}

TEST_CASE("analysis of e_2 against diag(1/k)") {
    const auto fm = diag_family(3, -1.0);
    const Vector f = {cx{0, 0}, cx{1, 0}, cx{0, 0}};
    const Vector c = fo::analysis(fm, f);
    CHECK(std::abs(c[0]) == 0.0);
    CHECK(std::abs(c[1] - cx{0.5, 0.0}) <= 1e-16);
    CHECK(std::abs(c[2]) == 0.0);
    // sum |c_k|^2 = 1/p^2 for f = e_p, p = 2
    double sum = 0.0;
    for (const cx& z : c) sum += std::norm(z);
    CHECK(sum == doctest::Approx(0.25).epsilon(1e-15));
}

TEST_CASE("analysis matches the naive column-by-column loop") {
    oracle::Rng rng(301);
    const auto fm = fam::make_family(oracle::random_matrix(rng, 3, 5), "rand");
    const Vector f = oracle::random_vector(rng, 3);
    const Vector c = fo::analysis(fm, f);
    for (std::size_t k = 0; k < 5; ++k) {
        Vector psi_k(3);
        for (std::size_t i = 0; i < 3; ++i) psi_k[i] = fm.columns(i, k);
        CHECK(std::abs(c[k] - oracle::dot_conj(psi_k, f)) <= 1e-14);
    }
    CHECK_THROWS_AS(fo::analysis(fm, Vector(4)), framekit::DimMismatch);
}

TEST_CASE("synthesis basics") {
    const auto basis = fam::make_family(Matrix::identity(3), "basis");
    const Vector e1 = fo::synthesis(basis, {cx{1, 0}, cx{0, 0}, cx{0, 0}});
    CHECK(e1[0] == cx{1.0, 0.0});
    CHECK(e1[1] == cx{0.0, 0.0});

    const auto fm = diag_family(3, -1.0);
    const Vector v = fo::synthesis(fm, {cx{1, 0}, cx{1, 0}, cx{1, 0}});
    CHECK(std::abs(v[0] - cx{1.0, 0.0}) <= 1e-16);
    CHECK(std::abs(v[1] - cx{0.5, 0.0}) <= 1e-16);
    CHECK(std::abs(v[2] - cx{1.0 / 3.0, 0.0}) <= 1e-16);
    CHECK_THROWS_AS(fo::synthesis(fm, Vector(4)), framekit::DimMismatch);
}

TEST_CASE("adjoint identity <Dc, f> = <c, Cf>") {
    oracle::Rng rng(303);
    for (int rep = 0; rep < 50; ++rep) {
        const int d = rng.integer(1, 10);
        const int n = rng.integer(1, 14);
        const auto fm = fam::make_family(oracle::random_matrix(rng, d, n), "rand");
        const Vector c = oracle::random_vector(rng, n);
        const Vector f = oracle::random_vector(rng, d);
        const cx lhs = oracle::dot_conj(fo::synthesis(fm, c), f);
        const cx rhs = oracle::dot_conj(c, fo::analysis(fm, f));
        const double scale = std::abs(lhs) + std::abs(rhs) + 1.0;
        CHECK(std::abs(lhs - rhs) <= 1e-12 * scale);
    }
}

TEST_CASE("frame operator of diag(1/k), d = 4") {
    const auto s = fo::frame_operator(diag_family(4, -1.0));
    for (int n = 1; n <= 4; ++n) {
        CHECK(s(n - 1, n - 1).real() == doctest::Approx(1.0 / (n * n)).epsilon(1e-15));
    }
    const auto s_id = fo::frame_operator(fam::make_family(Matrix::identity(5), "b"));
    CHECK(oracle::max_abs_diff(s_id.matrix(), Matrix::identity(5)) == 0.0);
}

TEST_CASE("frame operator equals the direct accumulation") {
    oracle::Rng rng(307);
    const auto fm = fam::make_family(oracle::random_matrix(rng, 5, 9), "rand");
    const auto s = fo::frame_operator(fm);
    const Matrix acc = oracle::accumulate_frame_operator(fm.columns);
    CHECK(oracle::max_abs_diff(s.matrix(), acc) <= 1e-12);
}

TEST_CASE("diagnostics of the weighted diagonal family") {
    const auto diag = fo::diagnostics(diag_family(4, -1.0), kTol);
    CHECK(diag.lower_bound == doctest::Approx(1.0 / 16.0).epsilon(1e-15));
    CHECK(diag.upper_bound == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(diag.total);
    CHECK(diag.bessel);
    CHECK(diag.rank_S == 4);
    CHECK(diag.condition == doctest::Approx(16.0).epsilon(1e-13));
}

TEST_CASE("diagnostics of a tight frame and of a non-total family") {
    const auto tight = fo::diagnostics(fam::make_family(Matrix::identity(4), "b"), kTol);
    CHECK(tight.lower_bound == doctest::Approx(1.0));
    CHECK(tight.upper_bound == doctest::Approx(1.0));
    CHECK(tight.total);

    // two copies of e_1 in C^2: S = diag(2, 0)
    Matrix two(2, 2);
    two(0, 0) = 1.0;
    two(0, 1) = 1.0;
    const auto nt = fo::diagnostics(fam::make_family(two, "2e1"), kTol);
    CHECK(nt.lower_bound == 0.0);
    CHECK(nt.upper_bound == doctest::Approx(2.0).epsilon(1e-14));
    CHECK_FALSE(nt.total);
    CHECK(nt.rank_S == 1);
    CHECK(std::isinf(nt.condition));
}

TEST_CASE("classify_sweep separates the three weighted families") {
    const fam::TruncationSweep dims({8, 16, 32, 64});

    const auto upper = fo::classify_sweep(
        fam::FamilyGenerator::diagonal_weights(fam::WeightRule::power(-1.0)), dims, kTol);
    CHECK(upper.verdict == fo::Verdict::upper_semi_frame);
    CHECK(upper.alpha == doctest::Approx(-2.0).epsilon(1e-10));
    CHECK(upper.beta == doctest::Approx(0.0).epsilon(1e-10));

    const auto lower = fo::classify_sweep(
        fam::FamilyGenerator::diagonal_weights(fam::WeightRule::power(1.0)), dims, kTol);
    CHECK(lower.verdict == fo::Verdict::lower_semi_frame);
    CHECK(lower.alpha == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(lower.beta == doctest::Approx(2.0).epsilon(1e-10));

    const auto frame = fo::classify_sweep(
        fam::FamilyGenerator::diagonal_weights(fam::WeightRule::constant(1.0)), dims, kTol);
    CHECK(frame.verdict == fo::Verdict::frame);
}

TEST_CASE("classify_sweep requires at least 3 dims and respects totality") {
    const auto g = fam::FamilyGenerator::diagonal_weights(fam::WeightRule::power(-1.0));
    CHECK_THROWS_AS(fo::classify_sweep(g, fam::TruncationSweep({8, 16}), kTol),
                    framekit::InvalidInput);

    // weights decaying so fast the truncations lose totality at the cutoff
    const auto collapsing =
        fam::FamilyGenerator::diagonal_weights(fam::WeightRule::power(-20.0));
    const auto v = fo::classify_sweep(collapsing, fam::TruncationSweep({8, 16, 32}), kTol);
    CHECK(v.verdict == fo::Verdict::neither);
}

TEST_CASE("energy identity <f, Sf> = sum |<psi_k, f>|^2") {
    oracle::Rng rng(311);
    for (int rep = 0; rep < 50; ++rep) {
        const int d = rng.integer(1, 10);
        const int n = rng.integer(1, 14);
        const auto fm = fam::make_family(oracle::random_matrix(rng, d, n), "rand");
        const auto s = fo::frame_operator(fm);
        const Vector f = oracle::random_vector(rng, d);
        const double lhs = oracle::dot_conj(f, oracle::matvec(s.matrix(), f)).real();
        double rhs = 0.0;
        for (const cx& z : fo::analysis(fm, f)) rhs += std::norm(z);
        CHECK(std::abs(lhs - rhs) <= 1e-10 * (std::abs(lhs) + 1.0));
    }
}

TEST_CASE("frame bounds sandwich the energy for 1000 random vectors") {
    oracle::Rng rng(313);
    const auto fm = fam::make_family(oracle::random_matrix(rng, 6, 9), "rand");
    const auto s = fo::frame_operator(fm);
    const auto diag = fo::diagnostics(fm, kTol);
    for (int rep = 0; rep < 1000; ++rep) {
        const Vector f = oracle::random_vector(rng, 6);
        const double nf2 = oracle::dot_conj(f, f).real();
        const double energy = oracle::dot_conj(f, oracle::matvec(s.matrix(), f)).real();
        const double slack = 1e-10 * (1.0 + energy);
        CHECK(energy >= diag.lower_bound * nf2 - slack);
        CHECK(energy <= diag.upper_bound * nf2 + slack);
    }
}

TEST_CASE("frame operator is positive semidefinite") {
    oracle::Rng rng(317);
    for (int rep = 0; rep < 20; ++rep) {
        const int d = rng.integer(1, 8);
        const int n = rng.integer(1, 12);
        const auto fm = fam::make_family(oracle::random_matrix(rng, d, n), "rand");
        const auto ed = framekit::spectral::eig(fo::frame_operator(fm));
        CHECK(ed.eigenvalues.back() >= -1e-12 * std::max(1.0, ed.eigenvalues.front()));
    }
}
