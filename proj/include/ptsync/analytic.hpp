#pragma once

#include "ptsync/core.hpp"

namespace ptsync {

/// Coefficients of the exact solution in the branch basis selected by the
/// gain/loss ratio: C(t) = d1 * u1(tau(t)) + d2 * u2(tau(t)).
struct BranchCoefficients {
    Complex d1{};
    Complex d2{};
    Regime regime = Regime::Oscillatory;
};

namespace detail {

/// Basis matrix B(tau): column k holds the amplitudes (C1, C2) of the k-th
/// fundamental solution at rescaled time tau.  In the rescaled variable the
/// amplitude C1 obeys a constant-coefficient oscillator, C1'' + (1 - R^2) C1
/// = 0, and C2 follows from C2 = i R C1 - i C1'; the three branches are
///
///   R < 1 (R = sin theta):   C1 = e^{-i tau cos theta},  e^{+i tau cos theta}
///   R = 1:                   C1 = tau,                   1
///   R > 1 (R = cosh phi):    C1 = e^{+tau sinh phi},     e^{-tau sinh phi}
///
/// det B is tau-independent (2 cos theta, i, 2 i sinh phi respectively), so
/// coefficient fits stay well conditioned on the whole line away from the
/// exceptional point R = 1, where the regime classifier switches bases.
Mat2 basis_matrix(const RegimeParams& rp, double tau);

/// d/dtau of basis_matrix, used to verify the Wronskian and to build Floquet
/// mode derivatives.
Mat2 basis_dtau(const RegimeParams& rp, double tau);

/// Solve B x = rhs by Cramer's rule.  B comes from basis_matrix, whose
/// determinant is constant and bounded away from zero for any classified
/// regime, so no pivoting is needed; a vanishing determinant still raises
/// NumericalError defensively.
Vec2 solve2(const Mat2& b, const Vec2& rhs);

}  // namespace detail

/// Fit branch coefficients so the closed-form solution matches `initial`
/// at its own time stamp.  The initial state must be nonzero.
BranchCoefficients fit_coefficients(const TwoLevelState& initial, const Modulation& mod);

/// Exact solution through a given initial state: fit once, evaluate anywhere.
/// Evaluation is O(1) per time, with no accumulation of integration error.
class AnalyticSolution {
  public:
    AnalyticSolution(const TwoLevelState& initial, const Modulation& mod);

    /// State at time t.  For the pulse family t may be +-infinity (the
    /// rescaled time saturates); for the periodic family t must be finite.
    TwoLevelState at(double t) const;

    const BranchCoefficients& coefficients() const { return coef_; }
    const Modulation& modulation() const { return mod_; }

  private:
    Modulation mod_;
    BranchCoefficients coef_;
};

/// Convenience wrapper: exact state at t_end starting from `initial`.
TwoLevelState propagate_analytic(const TwoLevelState& initial, const Modulation& mod,
                                 double t_end);

/// Exact propagator U(t1, t0) with C(t1) = U C(t0), formed as
/// B(tau(t1)) B(tau(t0))^{-1}.  det U = 1 because the Hamiltonian is
/// traceless, which makes this the natural cross-check for integrators.
Mat2 propagator_analytic(const Modulation& mod, double t0, double t1);

/// Asymptotic populations after a full pulse nu = A sech^2(t) with gain/loss
/// ratio R, starting from the bare lower state (c1, c2) = (0, 1) at
/// t = -infinity.  Populations are |C|^2 and exceed 1 under gain.
struct PulsePopulations {
    double p1_inf = 0.0;
    double p2_inf = 0.0;
};

PulsePopulations sech2_final_populations(double amplitude, double ratio);

}  // namespace ptsync
