#include "ptsync/kernels.hpp"

#if defined(PTSYNC_HAVE_AVX2)

#include <immintrin.h>

#include "rk4_batch_impl.hpp"

namespace ptsync::kernels::detail {

namespace {

struct Avx2Ops {
    using V = __m256d;
    static constexpr std::size_t width = 4;
    static V set1(double x) { return _mm256_set1_pd(x); }
    static V load(const double* p) { return _mm256_loadu_pd(p); }
    static void store(double* p, V x) { _mm256_storeu_pd(p, x); }
    static V add(V a, V b) { return _mm256_add_pd(a, b); }
    static V sub(V a, V b) { return _mm256_sub_pd(a, b); }
    static V mul(V a, V b) { return _mm256_mul_pd(a, b); }
    static V div(V a, V b) { return _mm256_div_pd(a, b); }
    static V neg(V a) {
        // Flip the sign bit: exact negation, no dependence on a zero constant.
        return _mm256_xor_pd(a, _mm256_set1_pd(-0.0));
    }
    static V min(V a, V b) { return _mm256_min_pd(a, b); }
};

}  // namespace

void rk4_batch_avx2(std::size_t n, const double* node, const double* mid, long steps,
                    const double* ratio, const double* h, const double* scale,
                    double* ar, double* ai, double* br, double* bi, double* minr) {
    rk4_march<Avx2Ops>(n, node, mid, steps, ratio, h, scale, ar, ai, br, bi, minr);
}

}  // namespace ptsync::kernels::detail

#endif  // PTSYNC_HAVE_AVX2
