// AVX2+FMA variants of the complex kernels. Compiled with -mavx2 -mfma and
// only ever invoked after a runtime CPU check, so the unguarded intrinsics
// here are safe. std::complex<double> is array-compatible with double[2],
// which lets us load interleaved (re,im) pairs directly.

#include "framekit/kernels.hpp"

#include <immintrin.h>

namespace framekit::kernels {
namespace {

inline const double* as_d(const cx* p) { return reinterpret_cast<const double*>(p); }
inline double* as_d(cx* p) { return reinterpret_cast<double*>(p); }

// sum of all four lanes
inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(lo) + _mm_cvtsd_f64(_mm_unpackhi_pd(lo, lo));
}

// lane0 - lane1 + lane2 - lane3
inline double hsum_alt(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(lo) - _mm_cvtsd_f64(_mm_unpackhi_pd(lo, lo));
}

cx zdotc_avx2(const cx* a, const cx* b, std::size_t n) {
    const double* pa = as_d(a);
    const double* pb = as_d(b);
    __m256d re0 = _mm256_setzero_pd(), re1 = _mm256_setzero_pd();
    __m256d im0 = _mm256_setzero_pd(), im1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d va0 = _mm256_loadu_pd(pa + 2 * i);
        const __m256d vb0 = _mm256_loadu_pd(pb + 2 * i);
        const __m256d va1 = _mm256_loadu_pd(pa + 2 * i + 4);
        const __m256d vb1 = _mm256_loadu_pd(pb + 2 * i + 4);
        re0 = _mm256_fmadd_pd(va0, vb0, re0);
        re1 = _mm256_fmadd_pd(va1, vb1, re1);
        im0 = _mm256_fmadd_pd(va0, _mm256_permute_pd(vb0, 0x5), im0);
        im1 = _mm256_fmadd_pd(va1, _mm256_permute_pd(vb1, 0x5), im1);
    }
    for (; i + 2 <= n; i += 2) {
        const __m256d va = _mm256_loadu_pd(pa + 2 * i);
        const __m256d vb = _mm256_loadu_pd(pb + 2 * i);
        re0 = _mm256_fmadd_pd(va, vb, re0);
        im0 = _mm256_fmadd_pd(va, _mm256_permute_pd(vb, 0x5), im0);
    }
    // lanes of re hold ar*br and ai*bi terms: plain sum.
    // lanes of im hold ar*bi (+) and ai*br (-) terms: alternating sum.
    double re = hsum(_mm256_add_pd(re0, re1));
    double im = hsum_alt(_mm256_add_pd(im0, im1));
    for (; i < n; ++i) {
        re += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
        im += a[i].real() * b[i].imag() - a[i].imag() * b[i].real();
    }
    return {re, im};
}

void zaxpy_avx2(cx alpha, const cx* x, cx* y, std::size_t n) {
    const double p = alpha.real(), q = alpha.imag();
    const __m256d vp = _mm256_set1_pd(p);
    const __m256d vq = _mm256_setr_pd(-q, q, -q, q);
    const double* px = as_d(x);
    double* py = as_d(y);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d vx = _mm256_loadu_pd(px + 2 * i);
        __m256d vy = _mm256_loadu_pd(py + 2 * i);
        vy = _mm256_fmadd_pd(vp, vx, vy);
        vy = _mm256_fmadd_pd(vq, _mm256_permute_pd(vx, 0x5), vy);
        _mm256_storeu_pd(py + 2 * i, vy);
    }
    for (; i < n; ++i) {
        const double xr = x[i].real(), xi = x[i].imag();
        y[i] += cx{p * xr - q * xi, p * xi + q * xr};
    }
}

void rot2_avx2(cx* x, cx* y, cx a, cx b, cx c, cx d, std::size_t n) {
    const __m256d ap = _mm256_set1_pd(a.real());
    const __m256d aq = _mm256_setr_pd(-a.imag(), a.imag(), -a.imag(), a.imag());
    const __m256d bp = _mm256_set1_pd(b.real());
    const __m256d bq = _mm256_setr_pd(-b.imag(), b.imag(), -b.imag(), b.imag());
    const __m256d cp = _mm256_set1_pd(c.real());
    const __m256d cq = _mm256_setr_pd(-c.imag(), c.imag(), -c.imag(), c.imag());
    const __m256d dp = _mm256_set1_pd(d.real());
    const __m256d dq = _mm256_setr_pd(-d.imag(), d.imag(), -d.imag(), d.imag());
    double* px = as_d(x);
    double* py = as_d(y);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d vx = _mm256_loadu_pd(px + 2 * i);
        const __m256d vy = _mm256_loadu_pd(py + 2 * i);
        const __m256d vxs = _mm256_permute_pd(vx, 0x5);
        const __m256d vys = _mm256_permute_pd(vy, 0x5);
        __m256d nx = _mm256_mul_pd(ap, vx);
        nx = _mm256_fmadd_pd(aq, vxs, nx);
        nx = _mm256_fmadd_pd(bp, vy, nx);
        nx = _mm256_fmadd_pd(bq, vys, nx);
        __m256d ny = _mm256_mul_pd(cp, vx);
        ny = _mm256_fmadd_pd(cq, vxs, ny);
        ny = _mm256_fmadd_pd(dp, vy, ny);
        ny = _mm256_fmadd_pd(dq, vys, ny);
        _mm256_storeu_pd(px + 2 * i, nx);
        _mm256_storeu_pd(py + 2 * i, ny);
    }
    for (; i < n; ++i) {
        const cx xi = x[i], yi = y[i];
        x[i] = a * xi + b * yi;
        y[i] = c * xi + d * yi;
    }
}

double nrm2sq_avx2(const cx* v, std::size_t n) {
    const double* pv = as_d(v);
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d w = _mm256_loadu_pd(pv + 2 * i);
        acc = _mm256_fmadd_pd(w, w, acc);
    }
    double s = hsum(acc);
    for (; i < n; ++i) {
        s += v[i].real() * v[i].real() + v[i].imag() * v[i].imag();
    }
    return s;
}

const Backend avx2_table = {"avx2", zdotc_avx2, zaxpy_avx2, rot2_avx2, nrm2sq_avx2};

} // namespace

namespace detail {

const Backend* avx2_backend_impl() {
    if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) {
        return &avx2_table;
    }
    return nullptr;
}

} // namespace detail
} // namespace framekit::kernels
