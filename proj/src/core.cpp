#include "ptsync/core.hpp"

#include <cmath>

namespace ptsync {

namespace {

void check_ratio(double ratio) {
    if (!(ratio >= 0.0) || !std::isfinite(ratio))
        throw std::invalid_argument("gain-loss ratio must be finite and >= 0");
}

double sech2_profile(double t) {
    // 1/cosh^2 with graceful underflow to 0 for |t| beyond the exp range.
    const double c = std::cosh(t);
    if (std::isinf(c)) return 0.0;
    return 1.0 / (c * c);
}

}  // namespace

Modulation Modulation::cosine(double nu0, double nu1, double omega, double ratio) {
    check_ratio(ratio);
    if (!(omega > 0.0) || !std::isfinite(omega))
        throw std::invalid_argument("cosine drive requires omega > 0");
    if (!std::isfinite(nu0) || !std::isfinite(nu1))
        throw std::invalid_argument("cosine drive requires finite nu0, nu1");
    Modulation m;
    m.family_ = DriveFamily::Cosine;
    m.ratio_ = ratio;
    m.nu0_ = nu0;
    m.nu1_ = nu1;
    m.omega_ = omega;
    return m;
}

Modulation Modulation::sech2(double amplitude, double ratio) {
    check_ratio(ratio);
    if (!(amplitude > 0.0) || !std::isfinite(amplitude))
        throw std::invalid_argument("pulse drive requires amplitude > 0");
    Modulation m;
    m.family_ = DriveFamily::SechSquared;
    m.ratio_ = ratio;
    m.amplitude_ = amplitude;
    return m;
}

double Modulation::nu0() const {
    if (family_ != DriveFamily::Cosine)
        throw std::invalid_argument("nu0 is a cosine-drive parameter");
    return nu0_;
}

double Modulation::nu1() const {
    if (family_ != DriveFamily::Cosine)
        throw std::invalid_argument("nu1 is a cosine-drive parameter");
    return nu1_;
}

double Modulation::omega() const {
    if (family_ != DriveFamily::Cosine)
        throw std::invalid_argument("omega is a cosine-drive parameter");
    return omega_;
}

double Modulation::period() const {
    if (family_ != DriveFamily::Cosine)
        throw std::invalid_argument("only the cosine drive is periodic");
    return 2.0 * M_PI / omega_;
}

double Modulation::amplitude() const {
    if (family_ != DriveFamily::SechSquared)
        throw std::invalid_argument("amplitude is a pulse-drive parameter");
    return amplitude_;
}

double Modulation::nu(double t) const {
    if (family_ == DriveFamily::Cosine) return nu0_ + nu1_ * std::cos(omega_ * t);
    return amplitude_ * sech2_profile(t);
}

double Modulation::tau(double t) const {
    if (family_ == DriveFamily::Cosine) {
        if (!std::isfinite(t))
            throw std::invalid_argument("rescaled time of the cosine drive needs finite t");
        return nu0_ * t + nu1_ / omega_ * std::sin(omega_ * t);
    }
    return amplitude_ * std::tanh(t);  // tanh(+-inf) = +-1, so tau(+-inf) = +-amplitude
}

RegimeParams regime_of(double ratio) {
    check_ratio(ratio);
    RegimeParams rp;
    if (ratio < 1.0 - kCriticalBand) {
        rp.regime = Regime::Oscillatory;
        rp.theta = std::asin(ratio);
    } else if (ratio > 1.0 + kCriticalBand) {
        rp.regime = Regime::Hyperbolic;
        rp.phi = std::acosh(ratio);
    } else {
        rp.regime = Regime::Critical;
    }
    return rp;
}

Mat2 hamiltonian(const Modulation& mod, double t) {
    const double n = mod.nu(t);
    const double g = mod.ratio() * n;
    return {Complex{0.0, g}, Complex{-n, 0.0}, Complex{-n, 0.0}, Complex{0.0, -g}};
}

}  // namespace ptsync
