#include "ptsync/analytic.hpp"

#include <cmath>
#include <limits>

namespace ptsync {

namespace detail {

Mat2 basis_matrix(const RegimeParams& rp, double tau) {
    const Complex i{0.0, 1.0};
    switch (rp.regime) {
        case Regime::Oscillatory: {
            const double c = std::cos(rp.theta);
            const Complex e_minus = std::exp(Complex{0.0, -tau * c});
            const Complex e_plus = std::exp(Complex{0.0, +tau * c});
            // C2 = -e^{-i theta} C1 on the first branch, +e^{+i theta} C1 on
            // the second.
            return Mat2{e_minus, e_plus,
                        -std::exp(Complex{0.0, -rp.theta}) * e_minus,
                        +std::exp(Complex{0.0, +rp.theta}) * e_plus};
        }
        case Regime::Critical: {
            // Secular branch (tau, i tau - i) and the stationary branch
            // (1, i); the latter is an exact solution for any drive once
            // R = 1.
            return Mat2{Complex{tau, 0.0}, Complex{1.0, 0.0},
                        Complex{0.0, tau - 1.0}, i};
        }
        case Regime::Hyperbolic: {
            const double s = std::sinh(rp.phi);
            const double e_grow = std::exp(tau * s);
            const double e_decay = std::exp(-tau * s);
            return Mat2{Complex{e_grow, 0.0}, Complex{e_decay, 0.0},
                        i * std::exp(-rp.phi) * e_grow,
                        i * std::exp(+rp.phi) * e_decay};
        }
    }
    throw std::logic_error("basis_matrix: unknown regime");
}

Mat2 basis_dtau(const RegimeParams& rp, double tau) {
    const Complex i{0.0, 1.0};
    switch (rp.regime) {
        case Regime::Oscillatory: {
            const double c = std::cos(rp.theta);
            const Mat2 b = basis_matrix(rp, tau);
            // Columns are pure exponentials e^{-+ i tau c}.
            return Mat2{-i * c * b.m00, i * c * b.m01,
                        -i * c * b.m10, i * c * b.m11};
        }
        case Regime::Critical:
            return Mat2{Complex{1.0, 0.0}, Complex{0.0, 0.0},
                        i, Complex{0.0, 0.0}};
        case Regime::Hyperbolic: {
            const double s = std::sinh(rp.phi);
            const Mat2 b = basis_matrix(rp, tau);
            return Mat2{s * b.m00, -s * b.m01,
                        s * b.m10, -s * b.m11};
        }
    }
    throw std::logic_error("basis_dtau: unknown regime");
}

Vec2 solve2(const Mat2& b, const Vec2& rhs) {
    const Complex det = b.det();
    // det is 2 cos(theta), i, or 2 i sinh(phi); the critical band of the
    // regime classifier keeps all three bounded away from zero.
    if (!(std::abs(det) > 0.0) || !std::isfinite(std::abs(det))) {
        throw NumericalError("singular basis matrix in coefficient fit");
    }
    return Vec2{(rhs.a * b.m11 - b.m01 * rhs.b) / det,
                (b.m00 * rhs.b - rhs.a * b.m10) / det};
}

}  // namespace detail

BranchCoefficients fit_coefficients(const TwoLevelState& initial, const Modulation& mod) {
    if (std::abs(initial.c1) == 0.0 && std::abs(initial.c2) == 0.0) {
        throw std::invalid_argument("fit_coefficients: initial state must be nonzero");
    }
    const RegimeParams rp = regime_of(mod.ratio());
    const double tau0 = mod.tau(initial.t);
    const Mat2 b0 = detail::basis_matrix(rp, tau0);
    const Vec2 d = detail::solve2(b0, Vec2{initial.c1, initial.c2});
    return BranchCoefficients{d.a, d.b, rp.regime};
}

AnalyticSolution::AnalyticSolution(const TwoLevelState& initial, const Modulation& mod)
    : mod_(mod), coef_(fit_coefficients(initial, mod)) {}

TwoLevelState AnalyticSolution::at(double t) const {
    const RegimeParams rp = regime_of(mod_.ratio());
    const Mat2 b = detail::basis_matrix(rp, mod_.tau(t));
    const Vec2 c = b * Vec2{coef_.d1, coef_.d2};
    return TwoLevelState{c.a, c.b, t};
}

TwoLevelState propagate_analytic(const TwoLevelState& initial, const Modulation& mod,
                                 double t_end) {
    return AnalyticSolution(initial, mod).at(t_end);
}

Mat2 propagator_analytic(const Modulation& mod, double t0, double t1) {
    const RegimeParams rp = regime_of(mod.ratio());
    const Mat2 b0 = detail::basis_matrix(rp, mod.tau(t0));
    const Mat2 b1 = detail::basis_matrix(rp, mod.tau(t1));
    // Column j of U = B1 B0^{-1} solves B0 x = e_j, then maps through B1.
    const Vec2 x0 = detail::solve2(b0, Vec2{Complex{1.0, 0.0}, Complex{0.0, 0.0}});
    const Vec2 x1 = detail::solve2(b0, Vec2{Complex{0.0, 0.0}, Complex{1.0, 0.0}});
    const Vec2 u0 = b1 * x0;
    const Vec2 u1 = b1 * x1;
    return Mat2{u0.a, u1.a, u0.b, u1.b};
}

PulsePopulations sech2_final_populations(double amplitude, double ratio) {
    const Modulation mod = Modulation::sech2(amplitude, ratio);
    const double inf = std::numeric_limits<double>::infinity();
    const TwoLevelState fin = propagate_analytic(
        TwoLevelState{Complex{0.0, 0.0}, Complex{1.0, 0.0}, -inf}, mod, +inf);
    return PulsePopulations{abs2(fin.c1), abs2(fin.c2)};
}

}  // namespace ptsync
