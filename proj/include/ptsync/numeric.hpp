#pragma once

#include <vector>

#include "ptsync/core.hpp"

namespace ptsync {

/// Step-size control for the Runge-Kutta integrators.
struct IntegrationConfig {
    double dt = 1e-3;        ///< base step (fixed mode) / initial step (adaptive)
    bool adaptive = false;   ///< step-doubling error control
    double tol = 1e-10;      ///< local error target per step (adaptive mode)
    double t_max_sech = 20.0;  ///< truncation horizon standing in for t = +-inf
                               ///< on pulse runs; sech^2(20) ~ 7e-18 makes the
                               ///< tail contribution negligible

    /// Family-aware defaults: dt = period/1000 for the periodic drive (well
    /// under the period/100 resolution floor), 1e-3 for the pulse.
    static IntegrationConfig defaults_for(const Modulation& mod);
};

/// Adaptive stepping could not reach the error target: the proposed step
/// collapsed below machine resolution at time t.
struct StepUnderflowError : NumericalError {
    explicit StepUnderflowError(double t_at);
    double t = 0.0;
};

/// Trajectory samples on a uniform time grid; samples.front() is the initial
/// state, samples.back() the final one.
struct StateSeries {
    std::vector<TwoLevelState> samples;

    const TwoLevelState& final_state() const { return samples.back(); }
};

/// Classic fixed-step RK4 (optionally step-doubling adaptive) on the complex
/// two-vector equation of motion i dC/dt = H(t) C.  The norm is deliberately
/// never renormalized: total population is an observable of the non-unitary
/// dynamics.  Returns `output_samples` uniform intervals, i.e.
/// output_samples + 1 states including the endpoints; integration proceeds
/// forward only (t_end >= initial.t required, equality returns the initial
/// state alone).  initial.t must be finite: pulse runs spanning t = +-inf are
/// expressed by the caller via +-t_max_sech.
StateSeries integrate_state(const TwoLevelState& initial, const Modulation& mod,
                            double t_end, const IntegrationConfig& cfg,
                            int output_samples = 1);

/// Final state only (single output interval).
TwoLevelState integrate_final(const TwoLevelState& initial, const Modulation& mod,
                              double t_end, const IntegrationConfig& cfg);

/// Propagator U(t1, t0) by columnwise integration of i dU/dt = H(t) U from
/// U(t0) = I.  The Hamiltonian is traceless, so det U = 1 up to integration
/// error -- a standing cross-check on the result.
Mat2 integrate_propagator(const Modulation& mod, double t0, double t1,
                          const IntegrationConfig& cfg);

}  // namespace ptsync
