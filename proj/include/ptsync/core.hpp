#pragma once

#include <stdexcept>

#include "ptsync/complex2.hpp"

namespace ptsync {

/// Numerical breakdown (singular solve, step underflow, ...) as opposed to a
/// caller error; the command-line tool maps this family to its own exit code.
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Instantaneous amplitudes of the two-level system at time t.
/// Equation of motion: i dC/dt = H(t) C with C = (c1, c2).
struct TwoLevelState {
    Complex c1{};
    Complex c2{};
    double t = 0.0;
};

enum class DriveFamily {
    Cosine,       // nu(t) = nu0 + nu1 cos(omega t), periodic drive
    SechSquared,  // nu(t) = A sech^2(t), single pulse
};

/// Synchronously modulated drive: the coupling nu(t) and the gain-loss
/// coefficient gamma(t) = ratio * nu(t) share one time profile. Both supported
/// families are even in t, which makes the Hamiltonian PT-symmetric.
class Modulation {
  public:
    /// Periodic drive nu(t) = nu0 + nu1 cos(omega t); requires omega > 0.
    static Modulation cosine(double nu0, double nu1, double omega, double ratio);

    /// Pulse drive nu(t) = amplitude * sech^2(t); requires amplitude > 0.
    static Modulation sech2(double amplitude, double ratio);

    DriveFamily family() const { return family_; }
    double ratio() const { return ratio_; }

    // Cosine parameters (throw for the pulse family).
    double nu0() const;
    double nu1() const;
    double omega() const;
    /// Drive period 2*pi/omega.
    double period() const;

    // Pulse parameter: half the pulse area, tau(+inf) = +amplitude.
    double amplitude() const;

    /// Coupling nu(t).
    double nu(double t) const;

    /// Gain-loss coefficient gamma(t) = ratio * nu(t).
    double gamma(double t) const { return ratio_ * nu(t); }

    /// Rescaled time tau(t) = integral of nu, with tau(0) = 0.
    /// Cosine: nu0*t + (nu1/omega) sin(omega t). Pulse: amplitude * tanh(t),
    /// well defined at t = +-infinity (tau -> +-amplitude).
    double tau(double t) const;

  private:
    Modulation() = default;
    DriveFamily family_ = DriveFamily::Cosine;
    double ratio_ = 0.0;
    double nu0_ = 0.0, nu1_ = 0.0, omega_ = 1.0;  // cosine
    double amplitude_ = 1.0;                      // sech^2
};

enum class Regime {
    Oscillatory,  // ratio < 1: bounded oscillation in rescaled time
    Critical,     // ratio = 1: linear-in-tau secular growth
    Hyperbolic,   // ratio > 1: exponential growth in rescaled time
};

/// Classification half-width around ratio = 1. Inside the band the critical
/// closed forms are used; outside, the oscillatory/hyperbolic forms are safe
/// from catastrophic cancellation (they divide by cos(theta) or sinh(phi)).
inline constexpr double kCriticalBand = 1e-9;

/// Regime of a gain-loss ratio together with its natural parametrization:
/// ratio = sin(theta) below 1, ratio = cosh(phi) above 1.
struct RegimeParams {
    Regime regime = Regime::Oscillatory;
    double theta = 0.0;  // valid iff Oscillatory
    double phi = 0.0;    // valid iff Hyperbolic
};

/// Classify a gain-loss ratio; rejects negative ratios.
RegimeParams regime_of(double ratio);

/// Two-level Hamiltonian H(t) = i*gamma(t)*sigma_z - nu(t)*sigma_x:
/// [[ i*gamma, -nu ], [ -nu, -i*gamma ]]. Traceless and PT-symmetric:
/// sigma_x * conj(H(-t)) * sigma_x = H(t).
Mat2 hamiltonian(const Modulation& mod, double t);

}  // namespace ptsync
