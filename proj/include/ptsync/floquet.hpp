#pragma once

#include "ptsync/core.hpp"
#include "ptsync/numeric.hpp"

namespace ptsync {

/// Eigenvector-matrix condition number above which the one-period propagator
/// is treated as numerically non-diagonalizable (defective).  At an exact
/// coalescence the computed condition number scales like 1/sqrt(integration
/// error) -- a few 1e7 at the default step -- while every clean spectrum on
/// the tested grids stays below ~3.5; the decision threshold sits in the
/// five-decade gap between the two populations.
inline constexpr double kDefectiveCondThreshold = 1e6;

/// Quasienergy pair of a periodic drive, sorted by (imaginary part, then real
/// part) with a 1e-7 tie band on the imaginary part so roundoff cannot flip
/// the pairing between numeric and closed-form results.
struct QuasienergyPair {
    Complex eps1{};
    Complex eps2{};
    bool folded = true;      ///< real parts reduced to (-omega/2, omega/2]
    bool defective = false;  ///< eigenvectors numerically coalesced
    double cond = 1.0;       ///< eigenvector-matrix condition number behind
                             ///< the defective flag (1 for clean analytic
                             ///< cases, +inf for the coalesced one)
};

/// Reduce a real quasienergy component into the Brillouin zone
/// (-omega/2, omega/2].
double fold_quasienergy(double x, double omega);

/// Quasienergies from an explicit one-period propagator: eps = (i/L) Log
/// lambda with the principal logarithm, real parts folded.  Exposed so sweep
/// drivers can reuse batched monodromy matrices.
QuasienergyPair quasienergies_from_monodromy(const Mat2& monodromy, double omega);

/// Monodromy route: integrate U(L, 0) with RK4 and diagonalize.  Periodic
/// (cosine) family only -- an aperiodic pulse has no Floquet spectrum.
QuasienergyPair quasienergies_numeric(const Modulation& mod, const IntegrationConfig& cfg);

/// Closed-form route: +-nu0 cos theta below the critical ratio,
/// +-i nu0 sinh phi above it, and the doubly degenerate 0 at the critical
/// ratio (defective there unless nu0 = 0, where two independent periodic
/// modes survive).
QuasienergyPair quasienergies_analytic(const Modulation& mod);

/// A periodic Floquet mode u(t) with its quasienergy: C(t) = u(t) e^{-i eps t}
/// solves the equation of motion, u(t + period) = u(t).
class FloquetMode {
  public:
    Complex eps{};

    Vec2 operator()(double t) const;

  private:
    friend struct FloquetModes;
    Regime regime_ = Regime::Oscillatory;
    bool secular_ = false;  ///< critical-regime second mode (nu0 = 0 only)
    int sign_ = +1;         ///< branch selector: +1 first mode, -1 second
    double nu1_ = 0.0;
    double omega_ = 1.0;
    double angle_ = 0.0;  ///< theta (oscillatory) or phi (hyperbolic)
};

struct FloquetModes {
    FloquetMode u1;
    FloquetMode u2;
    bool coalesced = false;  ///< critical ratio with nu0 != 0: u2 == u1

    static FloquetModes analytic(const Modulation& mod);
};

/// Closed-form Floquet modes of the cosine drive.  At the critical ratio with
/// nu0 != 0 only one periodic mode exists, (1, i)^T up to phase; the result
/// carries coalesced = true and duplicates it in both slots.
FloquetModes floquet_modes_analytic(const Modulation& mod);

}  // namespace ptsync
