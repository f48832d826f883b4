#include "framekit/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace framekit::kernels {

#if defined(FRAMEKIT_HAVE_AVX2)
namespace detail {
const Backend* avx2_backend_impl(); // kernels_avx2.cpp
}
#endif

namespace {

const Backend scalar_table = {
    "scalar", scalar::zdotc, scalar::zaxpy, scalar::rot2, scalar::nrm2sq,
};

const Backend& resolve() {
    const Backend* avx2 = avx2_backend();
    const char* want = std::getenv("FRAMEKIT_SIMD");
    if (want != nullptr && std::strcmp(want, "scalar") == 0) {
        return scalar_table;
    }
    if (want != nullptr && std::strcmp(want, "avx2") == 0) {
        return avx2 != nullptr ? *avx2 : scalar_table;
    }
    return avx2 != nullptr ? *avx2 : scalar_table;
}

} // namespace

const Backend& scalar_backend() { return scalar_table; }

const Backend* avx2_backend() {
#if defined(FRAMEKIT_HAVE_AVX2)
    return detail::avx2_backend_impl();
#else
    return nullptr;
#endif
}

const Backend& active_backend() {
    static const Backend& chosen = resolve();
    return chosen;
}

} // namespace framekit::kernels
