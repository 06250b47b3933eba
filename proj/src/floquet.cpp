#include "ptsync/floquet.hpp"

#include <cmath>
#include <limits>
#include <utility>

namespace ptsync {

namespace {

constexpr double kPairTieBand = 1e-7;

void require_cosine(const Modulation& mod, const char* who) {
    if (mod.family() != DriveFamily::Cosine) {
        throw std::invalid_argument(std::string(who) +
                                    ": requires a periodic (cosine) modulation");
    }
}

// Sort the pair by (imaginary part, real part), quantizing the imaginary
// part to a 1e-7 band so numeric noise on a real spectrum cannot swap the
// order relative to the closed form.
void sort_pair(Complex& e1, Complex& e2) {
    const auto key = [](const Complex& z) {
        return std::make_pair(std::llround(z.imag() / kPairTieBand), z.real());
    };
    if (key(e2) < key(e1)) {
        std::swap(e1, e2);
    }
}

}  // namespace

double fold_quasienergy(double x, double omega) {
    double y = std::remainder(x, omega);  // lands in [-omega/2, omega/2]
    if (y <= -omega / 2) {
        y += omega;  // move the closed boundary to the positive side
    }
    return y;
}

QuasienergyPair quasienergies_from_monodromy(const Mat2& monodromy, double omega) {
    const double period = 2.0 * M_PI / omega;
    const Eigen2 eig = eig2(monodromy);
    const Complex i{0.0, 1.0};

    QuasienergyPair out;
    Complex e1 = i / period * std::log(eig.lambda1);
    Complex e2 = i / period * std::log(eig.lambda2);
    e1 = Complex{fold_quasienergy(e1.real(), omega), e1.imag()};
    e2 = Complex{fold_quasienergy(e2.real(), omega), e2.imag()};
    sort_pair(e1, e2);
    out.eps1 = e1;
    out.eps2 = e2;
    out.cond = eig.cond;
    out.defective = eig.cond > kDefectiveCondThreshold;
    return out;
}

QuasienergyPair quasienergies_numeric(const Modulation& mod, const IntegrationConfig& cfg) {
    require_cosine(mod, "quasienergies_numeric");
    const Mat2 u = integrate_propagator(mod, 0.0, mod.period(), cfg);
    return quasienergies_from_monodromy(u, mod.omega());
}

QuasienergyPair quasienergies_analytic(const Modulation& mod) {
    require_cosine(mod, "quasienergies_analytic");
    const RegimeParams rp = regime_of(mod.ratio());
    const double omega = mod.omega();

    QuasienergyPair out;
    switch (rp.regime) {
        case Regime::Oscillatory: {
            const double e = mod.nu0() * std::cos(rp.theta);
            Complex e1{fold_quasienergy(-e, omega), 0.0};
            Complex e2{fold_quasienergy(+e, omega), 0.0};
            sort_pair(e1, e2);
            out.eps1 = e1;
            out.eps2 = e2;
            break;
        }
        case Regime::Hyperbolic: {
            const double e = mod.nu0() * std::sinh(rp.phi);
            out.eps1 = Complex{0.0, -e};
            out.eps2 = Complex{0.0, +e};
            sort_pair(out.eps1, out.eps2);
            break;
        }
        case Regime::Critical: {
            out.eps1 = Complex{0.0, 0.0};
            out.eps2 = Complex{0.0, 0.0};
            if (mod.nu0() != 0.0) {
                out.defective = true;
                out.cond = std::numeric_limits<double>::infinity();
            }
            break;
        }
    }
    return out;
}

Vec2 FloquetMode::operator()(double t) const {
    const Complex i{0.0, 1.0};
    // Periodic part of the rescaled time: tau(t) = nu0 t + p(t).
    const double p = nu1_ * std::sin(omega_ * t) / omega_;
    switch (regime_) {
        case Regime::Oscillatory: {
            const double c = std::cos(angle_);
            if (sign_ > 0) {
                const Complex e = std::exp(Complex{0.0, -p * c});
                return Vec2{e, -std::exp(Complex{0.0, -angle_}) * e};
            }
            const Complex e = std::exp(Complex{0.0, +p * c});
            return Vec2{e, +std::exp(Complex{0.0, +angle_}) * e};
        }
        case Regime::Critical: {
            if (secular_) {
                // nu0 = 0: the secular basis branch (tau, i tau - i) is
                // itself periodic, giving the second independent mode.
                return Vec2{Complex{p, 0.0}, Complex{0.0, p - 1.0}};
            }
            return Vec2{Complex{1.0, 0.0}, i};
        }
        case Regime::Hyperbolic: {
            const double s = std::sinh(angle_);
            if (sign_ > 0) {
                const double e = std::exp(+p * s);
                return Vec2{Complex{e, 0.0}, i * std::exp(-angle_) * e};
            }
            const double e = std::exp(-p * s);
            return Vec2{Complex{e, 0.0}, i * std::exp(+angle_) * e};
        }
    }
    throw std::logic_error("FloquetMode: unknown regime");
}

FloquetModes FloquetModes::analytic(const Modulation& mod) {
    require_cosine(mod, "floquet_modes_analytic");
    const RegimeParams rp = regime_of(mod.ratio());

    FloquetModes out;
    auto fill = [&](FloquetMode& m, int sign) {
        m.regime_ = rp.regime;
        m.sign_ = sign;
        m.nu1_ = mod.nu1();
        m.omega_ = mod.omega();
        m.angle_ = (rp.regime == Regime::Hyperbolic) ? rp.phi : rp.theta;
        m.secular_ = false;
    };
    fill(out.u1, +1);
    fill(out.u2, -1);

    switch (rp.regime) {
        case Regime::Oscillatory: {
            const double e = mod.nu0() * std::cos(rp.theta);
            out.u1.eps = Complex{e, 0.0};
            out.u2.eps = Complex{-e, 0.0};
            break;
        }
        case Regime::Hyperbolic: {
            const double e = mod.nu0() * std::sinh(rp.phi);
            out.u1.eps = Complex{0.0, +e};
            out.u2.eps = Complex{0.0, -e};
            break;
        }
        case Regime::Critical: {
            out.u1.eps = Complex{0.0, 0.0};
            out.u2.eps = Complex{0.0, 0.0};
            if (mod.nu0() == 0.0) {
                out.u2.secular_ = true;  // second periodic mode exists
            } else {
                out.coalesced = true;  // only (1, i)^T survives
                out.u2 = out.u1;
            }
            break;
        }
    }
    return out;
}

FloquetModes floquet_modes_analytic(const Modulation& mod) {
    return FloquetModes::analytic(mod);
}

}  // namespace ptsync
