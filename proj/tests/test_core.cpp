#include <cmath>
#include <limits>

#include "doctest.h"
#include "ptsync/core.hpp"

using namespace ptsync;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

TEST_CASE("cosine modulation evaluates nu, gamma and the rescaled time") {
    const Modulation mod = Modulation::cosine(0.5, 1.0, 3.0, 0.5);

    CHECK(mod.family() == DriveFamily::Cosine);
    CHECK(mod.ratio() == 0.5);
    CHECK(mod.nu0() == 0.5);
    CHECK(mod.nu1() == 1.0);
    CHECK(mod.omega() == 3.0);
    CHECK(mod.period() == doctest::Approx(2.0 * M_PI / 3.0).epsilon(1e-15));

    CHECK(mod.nu(0.0) == doctest::Approx(1.5).epsilon(1e-15));
    CHECK(mod.nu(M_PI / 3.0) == doctest::Approx(-0.5).epsilon(1e-12));
    CHECK(mod.gamma(0.0) == doctest::Approx(0.75).epsilon(1e-15));

    CHECK(mod.tau(0.0) == 0.0);
    // Independently computed: tau(2 pi / 3) = 0.5 * (2 pi / 3) + sin(2 pi)/3.
    CHECK(mod.tau(2.0 * M_PI / 3.0) ==
          doctest::Approx(1.0471975511965976).epsilon(1e-15));
    // One full period advances tau by nu0 * period.
    CHECK(mod.tau(mod.period()) ==
          doctest::Approx(0.5 * mod.period()).epsilon(1e-14));
}

TEST_CASE("pulse modulation saturates and survives extreme arguments") {
    const Modulation mod = Modulation::sech2(0.7, 1.2);

    CHECK(mod.family() == DriveFamily::SechSquared);
    CHECK(mod.amplitude() == 0.7);
    CHECK(mod.nu(0.0) == doctest::Approx(0.7).epsilon(1e-15));
    CHECK(mod.nu(1000.0) == 0.0);   // cosh overflow handled, not NaN
    CHECK(mod.nu(-1000.0) == 0.0);

    CHECK(mod.tau(kInf) == 0.7);    // tanh(inf) is exact in IEEE
    CHECK(mod.tau(-kInf) == -0.7);
    CHECK(mod.tau(0.0) == 0.0);
    CHECK(mod.tau(1.0) == doctest::Approx(0.7 * std::tanh(1.0)).epsilon(1e-15));
}

TEST_CASE("family-specific accessors are guarded") {
    const Modulation cosine = Modulation::cosine(0.5, 1.0, 3.0, 0.5);
    const Modulation pulse = Modulation::sech2(0.7, 0.5);

    CHECK_THROWS_AS((void)pulse.nu0(), std::invalid_argument);
    CHECK_THROWS_AS((void)pulse.omega(), std::invalid_argument);
    CHECK_THROWS_AS((void)pulse.period(), std::invalid_argument);
    CHECK_THROWS_AS((void)cosine.amplitude(), std::invalid_argument);
    CHECK_THROWS_AS((void)cosine.tau(kInf), std::invalid_argument);
}

TEST_CASE("constructor validation") {
    CHECK_THROWS_AS(Modulation::cosine(0.5, 1.0, 0.0, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(Modulation::cosine(0.5, 1.0, -3.0, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(Modulation::cosine(kInf, 1.0, 3.0, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(Modulation::cosine(0.5, 1.0, 3.0, -0.1), std::invalid_argument);
    CHECK_THROWS_AS(Modulation::sech2(0.0, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(Modulation::sech2(-1.0, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(Modulation::sech2(1.0, kInf), std::invalid_argument);
}

TEST_CASE("regime classification and its parametrization") {
    const RegimeParams osc = regime_of(0.5);
    CHECK(osc.regime == Regime::Oscillatory);
    CHECK(osc.theta == doctest::Approx(0.5235987755982989).epsilon(1e-16));

    const RegimeParams hyp = regime_of(1.5);
    CHECK(hyp.regime == Regime::Hyperbolic);
    CHECK(hyp.phi == doctest::Approx(0.9624236501192069).epsilon(1e-16));

    CHECK(regime_of(1.0).regime == Regime::Critical);
    CHECK(regime_of(1.0 + 0.5 * kCriticalBand).regime == Regime::Critical);
    CHECK(regime_of(1.0 - 0.5 * kCriticalBand).regime == Regime::Critical);
    CHECK(regime_of(1.0 + 2.0 * kCriticalBand).regime == Regime::Hyperbolic);
    CHECK(regime_of(0.0).regime == Regime::Oscillatory);
    CHECK(regime_of(0.0).theta == 0.0);

    CHECK_THROWS_AS(regime_of(-0.5), std::invalid_argument);
    CHECK_THROWS_AS(regime_of(std::nan("")), std::invalid_argument);
}

TEST_CASE("Hamiltonian layout, tracelessness and PT symmetry") {
    const Modulation mod = Modulation::cosine(0.5, 1.0, 3.0, 0.8);

    for (const double t : {0.0, 0.3, 1.7, -2.4}) {
        const Mat2 h = hamiltonian(mod, t);
        const double n = mod.nu(t);
        const double g = mod.gamma(t);
        CHECK(h.m00 == Complex{0.0, g});
        CHECK(h.m11 == Complex{0.0, -g});
        CHECK(h.m01 == Complex{-n, 0.0});
        CHECK(h.m10 == Complex{-n, 0.0});
        CHECK(std::abs(h.trace()) == 0.0);

        // PT symmetry: sigma_x conj(H(-t)) sigma_x == H(t) (drive is even).
        const Mat2 hm = hamiltonian(mod, -t);
        const Mat2 pt{std::conj(hm.m11), std::conj(hm.m10), std::conj(hm.m01),
                      std::conj(hm.m00)};
        CHECK(norm_max(pt - h) == 0.0);
    }
}
