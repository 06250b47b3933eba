#pragma once

#include <cstddef>

// Shared RK4 march template for the batched sweep kernels.  The scalar and
// SIMD translation units instantiate it with different Ops types; every
// arithmetic operation goes through Ops so the instruction-level evaluation
// order is identical across variants and matches the plain complex-valued
// integrator step for step.

namespace ptsync::kernels::detail {

template <class O>
struct Quad {
    typename O::V ar, ai, br, bi;
};

// Equation of motion in real components, g = R nu:
//   d(ar) = g ar - nu bi      d(ai) = g ai + nu br
//   d(br) = -(nu ai + g br)   d(bi) = nu ar - g bi
template <class O>
inline Quad<O> deriv(typename O::V r, typename O::V nu, const Quad<O>& y) {
    const typename O::V g = O::mul(r, nu);
    return Quad<O>{O::sub(O::mul(g, y.ar), O::mul(nu, y.bi)),
                   O::add(O::mul(g, y.ai), O::mul(nu, y.br)),
                   O::neg(O::add(O::mul(nu, y.ai), O::mul(g, y.br))),
                   O::sub(O::mul(nu, y.ar), O::mul(g, y.bi))};
}

template <class O>
inline Quad<O> axpy(const Quad<O>& y, typename O::V c, const Quad<O>& k) {
    return Quad<O>{O::add(y.ar, O::mul(c, k.ar)), O::add(y.ai, O::mul(c, k.ai)),
                   O::add(y.br, O::mul(c, k.br)), O::add(y.bi, O::mul(c, k.bi))};
}

template <class O>
inline typename O::V p1_over_p(const Quad<O>& y) {
    const typename O::V p1 = O::add(O::mul(y.ar, y.ar), O::mul(y.ai, y.ai));
    const typename O::V p2 = O::add(O::mul(y.br, y.br), O::mul(y.bi, y.bi));
    return O::div(p1, O::add(p1, p2));
}

// March n lanes (n a multiple of O::width) through `steps` RK4 steps.
template <class O>
void rk4_march(std::size_t n, const double* node, const double* mid, long steps,
               const double* ratio, const double* h, const double* scale, double* ar,
               double* ai, double* br, double* bi, double* minr) {
    using V = typename O::V;
    const V two = O::set1(2.0);

    for (std::size_t i = 0; i < n; i += O::width) {
        const V r = O::load(ratio + i);
        const V hh = O::load(h + i);
        const V sc = O::load(scale + i);
        const V h2 = O::div(hh, O::set1(2.0));
        const V h6 = O::div(hh, O::set1(6.0));

        Quad<O> y{O::load(ar + i), O::load(ai + i), O::load(br + i), O::load(bi + i)};
        V mr = p1_over_p<O>(y);

        for (long k = 0; k < steps; ++k) {
            const V na = O::mul(sc, O::set1(node[k]));
            const V nm = O::mul(sc, O::set1(mid[k]));
            const V nb = O::mul(sc, O::set1(node[k + 1]));

            const Quad<O> k1 = deriv<O>(r, na, y);
            const Quad<O> k2 = deriv<O>(r, nm, axpy<O>(y, h2, k1));
            const Quad<O> k3 = deriv<O>(r, nm, axpy<O>(y, h2, k2));
            const Quad<O> k4 = deriv<O>(r, nb, axpy<O>(y, hh, k3));

            // ((k1 + 2 k2) + 2 k3) + k4, then y += h/6 * sum.
            const Quad<O> sum{
                O::add(O::add(O::add(k1.ar, O::mul(two, k2.ar)), O::mul(two, k3.ar)),
                       k4.ar),
                O::add(O::add(O::add(k1.ai, O::mul(two, k2.ai)), O::mul(two, k3.ai)),
                       k4.ai),
                O::add(O::add(O::add(k1.br, O::mul(two, k2.br)), O::mul(two, k3.br)),
                       k4.br),
                O::add(O::add(O::add(k1.bi, O::mul(two, k2.bi)), O::mul(two, k3.bi)),
                       k4.bi)};
            y = axpy<O>(y, h6, sum);

            mr = O::min(mr, p1_over_p<O>(y));
        }

        O::store(ar + i, y.ar);
        O::store(ai + i, y.ai);
        O::store(br + i, y.br);
        O::store(bi + i, y.bi);
        O::store(minr + i, mr);
    }
}

}  // namespace ptsync::kernels::detail
