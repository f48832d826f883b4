#include "framekit/kernels.hpp"

namespace framekit::kernels::scalar {

cx zdotc(const cx* a, const cx* b, std::size_t n) {
    double re = 0.0, im = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double ar = a[i].real(), ai = a[i].imag();
        const double br = b[i].real(), bi = b[i].imag();
        re += ar * br + ai * bi;
        im += ar * bi - ai * br;
    }
    return {re, im};
}

void zaxpy(cx alpha, const cx* x, cx* y, std::size_t n) {
    const double p = alpha.real(), q = alpha.imag();
    for (std::size_t i = 0; i < n; ++i) {
        const double xr = x[i].real(), xi = x[i].imag();
        y[i] += cx{p * xr - q * xi, p * xi + q * xr};
    }
}

void rot2(cx* x, cx* y, cx a, cx b, cx c, cx d, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const cx xi = x[i], yi = y[i];
        x[i] = a * xi + b * yi;
        y[i] = c * xi + d * yi;
    }
}

double nrm2sq(const cx* v, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        s += v[i].real() * v[i].real() + v[i].imag() * v[i].imag();
    }
    return s;
}

} // namespace framekit::kernels::scalar
