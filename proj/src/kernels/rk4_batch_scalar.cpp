#include <algorithm>

#include "ptsync/kernels.hpp"
#include "rk4_batch_impl.hpp"

namespace ptsync::kernels::detail {

namespace {

struct ScalarOps {
    using V = double;
    static constexpr std::size_t width = 1;
    static V set1(double x) { return x; }
    static V load(const double* p) { return *p; }
    static void store(double* p, V x) { *p = x; }
    static V add(V a, V b) { return a + b; }
    static V sub(V a, V b) { return a - b; }
    static V mul(V a, V b) { return a * b; }
    static V div(V a, V b) { return a / b; }
    static V neg(V a) { return -a; }
    static V min(V a, V b) { return std::min(a, b); }
};

}  // namespace

void rk4_batch_scalar(std::size_t n, const double* node, const double* mid, long steps,
                      const double* ratio, const double* h, const double* scale,
                      double* ar, double* ai, double* br, double* bi, double* minr) {
    rk4_march<ScalarOps>(n, node, mid, steps, ratio, h, scale, ar, ai, br, bi, minr);
}

}  // namespace ptsync::kernels::detail
