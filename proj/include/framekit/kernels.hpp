#pragma once

#include <complex>
#include <cstddef>

namespace framekit {
using cx = std::complex<double>;
}

namespace framekit::kernels {

// Scalar reference kernels. These define the semantics of the hot loops;
// every SIMD variant must agree with them up to floating-point
// reassociation of the accumulators.
namespace scalar {

// sum_i conj(a_i) * b_i
cx zdotc(const cx* a, const cx* b, std::size_t n);

// y_i += alpha * x_i
void zaxpy(cx alpha, const cx* x, cx* y, std::size_t n);

// (x_i, y_i) <- (a*x_i + b*y_i, c*x_i + d*y_i), applied in place.
// Used for Jacobi column rotations and eigenvector accumulation.
void rot2(cx* x, cx* y, cx a, cx b, cx c, cx d, std::size_t n);

// sum_i |v_i|^2
double nrm2sq(const cx* v, std::size_t n);

} // namespace scalar

// One table of function pointers per implementation.
struct Backend {
    const char* name;
    cx (*zdotc)(const cx*, const cx*, std::size_t);
    void (*zaxpy)(cx, const cx*, cx*, std::size_t);
    void (*rot2)(cx*, cx*, cx, cx, cx, cx, std::size_t);
    double (*nrm2sq)(const cx*, std::size_t);
};

const Backend& scalar_backend();

// AVX2+FMA backend, or nullptr when the build target or the running CPU
// does not support it.
const Backend* avx2_backend();

// Backend selected at first use. FRAMEKIT_SIMD=scalar|avx2|auto overrides
// the default (auto); requesting an unavailable backend falls back to scalar.
const Backend& active_backend();

// Dispatched entry points used throughout the library.
inline cx zdotc(const cx* a, const cx* b, std::size_t n) {
    return active_backend().zdotc(a, b, n);
}
inline void zaxpy(cx alpha, const cx* x, cx* y, std::size_t n) {
    active_backend().zaxpy(alpha, x, y, n);
}
inline void rot2(cx* x, cx* y, cx a, cx b, cx c, cx d, std::size_t n) {
    active_backend().rot2(x, y, a, b, c, d, n);
}
inline double nrm2sq(const cx* v, std::size_t n) {
    return active_backend().nrm2sq(v, n);
}

} // namespace framekit::kernels
