#include <cmath>

#include "doctest.h"
#include "ptsync/analytic.hpp"
#include "ptsync/floquet.hpp"

using namespace ptsync;

namespace {

// Finite-difference residual of C(t) = u(t) e^{-i eps t} against
// i dC/dt = H(t) C, evaluated with a centered stencil.
double mode_residual(const Modulation& mod, const FloquetMode& u, double t) {
    const double h = 1e-5;
    const Complex i{0.0, 1.0};
    const auto c = [&](double s) {
        const Vec2 v = u(s);
        const Complex phase = std::exp(-i * u.eps * s);
        return Vec2{v.a * phase, v.b * phase};
    };
    const Vec2 dc = (1.0 / (2.0 * h)) * (c(t + h) - c(t - h));
    const Vec2 want = Complex{0.0, -1.0} * (hamiltonian(mod, t) * c(t));
    return norm_inf(dc - want);
}

}  // namespace

TEST_CASE("Brillouin-zone folding") {
    CHECK(fold_quasienergy(0.4, 3.0) == 0.4);
    CHECK(fold_quasienergy(1.6, 3.0) == doctest::Approx(-1.4).epsilon(1e-15));
    CHECK(fold_quasienergy(-1.5, 3.0) == 1.5);  // closed boundary on the right
    CHECK(fold_quasienergy(1.5, 3.0) == 1.5);
    CHECK(fold_quasienergy(3.0, 3.0) == doctest::Approx(0.0).epsilon(1e-15));
    for (const double x : {-7.3, -0.2, 0.9, 4.4, 123.456}) {
        const double once = fold_quasienergy(x, 3.0);
        CHECK(once > -1.5);
        CHECK(once <= 1.5);
        CHECK(fold_quasienergy(once, 3.0) == once);  // idempotent
    }
}

TEST_CASE("closed-form quasienergies at reference ratios") {
    const auto ana = [](double ratio) {
        return quasienergies_analytic(Modulation::cosine(0.5, 1.0, 3.0, ratio));
    };

    const QuasienergyPair osc = ana(0.5);  // +-nu0 cos(theta), real
    CHECK(osc.eps1.real() == doctest::Approx(-0.4330127018922193).epsilon(1e-15));
    CHECK(osc.eps2.real() == doctest::Approx(+0.4330127018922193).epsilon(1e-15));
    CHECK(osc.eps1.imag() == 0.0);
    CHECK(osc.defective == false);

    const QuasienergyPair hyp = ana(1.2);  // +-i nu0 sinh(phi), imaginary
    CHECK(hyp.eps1.imag() == doctest::Approx(-0.3316624790355399).epsilon(1e-15));
    CHECK(hyp.eps2.imag() == doctest::Approx(+0.3316624790355399).epsilon(1e-15));
    CHECK(hyp.eps1.real() == 0.0);

    // Grid edges used by the sweep commands.
    CHECK(ana(0.05).eps2.real() == doctest::Approx(0.4993746088859545).epsilon(1e-15));
    CHECK(ana(0.95).eps2.real() == doctest::Approx(0.15612494995996004).epsilon(1e-15));
    CHECK(ana(1.05).eps2.imag() == doctest::Approx(0.16007810593582128).epsilon(1e-15));
    CHECK(ana(1.95).eps2.imag() == doctest::Approx(0.8370334521391604).epsilon(1e-15));

    const QuasienergyPair crit = ana(1.0);  // coalesced at the critical ratio
    CHECK(crit.eps1 == Complex{0.0, 0.0});
    CHECK(crit.eps2 == Complex{0.0, 0.0});
    CHECK(crit.defective == true);
    CHECK(std::isinf(crit.cond));

    const QuasienergyPair flat = quasienergies_analytic(Modulation::cosine(0.0, 1.0, 3.0, 1.0));
    CHECK(flat.defective == false);  // nu0 = 0 keeps two periodic modes
}

TEST_CASE("monodromy diagonalization reproduces the closed form") {
    for (const double ratio : {0.3, 0.5, 0.9, 1.2, 1.7}) {
        const Modulation mod = Modulation::cosine(0.5, 1.0, 3.0, ratio);
        const QuasienergyPair num =
            quasienergies_numeric(mod, IntegrationConfig::defaults_for(mod));
        const QuasienergyPair ana = quasienergies_analytic(mod);
        CHECK(std::abs(num.eps1 - ana.eps1) < 1e-6);
        CHECK(std::abs(num.eps2 - ana.eps2) < 1e-6);
        CHECK(num.defective == false);
        // Unimodular monodromy: quasienergies sum to zero (mod omega).
        CHECK(std::abs(fold_quasienergy((num.eps1 + num.eps2).real(), 3.0)) < 1e-9);
        CHECK(std::abs((num.eps1 + num.eps2).imag()) < 1e-9);
    }
}

TEST_CASE("exact monodromy routes through quasienergies_from_monodromy") {
    const Modulation mod = Modulation::cosine(0.5, 1.0, 3.0, 0.5);
    const Mat2 u = propagator_analytic(mod, 0.0, mod.period());
    const QuasienergyPair got = quasienergies_from_monodromy(u, 3.0);
    CHECK(std::abs(got.eps2.real() - 0.4330127018922193) < 1e-12);
    CHECK(std::abs(got.eps2.imag()) < 1e-12);
}

TEST_CASE("the exceptional point is defective; the nu0 = 0 critical case is not") {
    const Modulation ep = Modulation::cosine(0.5, 1.0, 3.0, 1.0);
    const QuasienergyPair ep_pair =
        quasienergies_numeric(ep, IntegrationConfig::defaults_for(ep));
    CHECK(ep_pair.defective == true);
    CHECK(ep_pair.cond > 1e6);

    const Modulation flat = Modulation::cosine(0.0, 1.0, 3.0, 1.0);
    const QuasienergyPair flat_pair =
        quasienergies_numeric(flat, IntegrationConfig::defaults_for(flat));
    CHECK(flat_pair.defective == false);
    CHECK(flat_pair.cond < 1e3);
    CHECK(std::abs(flat_pair.eps1) < 1e-8);
    CHECK(std::abs(flat_pair.eps2) < 1e-8);
}

TEST_CASE("Floquet modes: periodicity, initial values, equation residual") {
    for (const double ratio : {0.5, 1.2}) {
        const Modulation mod = Modulation::cosine(0.5, 1.0, 3.0, ratio);
        const FloquetModes modes = floquet_modes_analytic(mod);
        CHECK(modes.coalesced == false);

        for (const FloquetMode* m : {&modes.u1, &modes.u2}) {
            for (const double t : {0.0, 0.4, 1.9}) {
                CHECK(norm_inf((*m)(t + mod.period()) - (*m)(t)) < 1e-13);
                CHECK(mode_residual(mod, *m, t) < 1e-7);
            }
        }
    }

    // Oscillatory u1 at t = 0: (1, -e^{-i theta}).
    const Modulation osc = Modulation::cosine(0.5, 1.0, 3.0, 0.5);
    const Vec2 u10 = floquet_modes_analytic(osc).u1(0.0);
    const double theta = regime_of(0.5).theta;
    CHECK(std::abs(u10.a - Complex{1.0, 0.0}) < 1e-15);
    CHECK(std::abs(u10.b - (-std::exp(Complex{0.0, -theta}))) < 1e-15);

    // Mode quasienergies carry the branch signs (unsorted).
    CHECK(floquet_modes_analytic(osc).u1.eps.real() ==
          doctest::Approx(0.4330127018922193).epsilon(1e-15));
}

TEST_CASE("critical-ratio modes: coalescence vs the secular pair") {
    const Modulation ep = Modulation::cosine(0.5, 1.0, 3.0, 1.0);
    const FloquetModes one = floquet_modes_analytic(ep);
    CHECK(one.coalesced == true);
    for (const double t : {0.0, 0.7}) {
        CHECK(norm_inf(one.u1(t) - one.u2(t)) == 0.0);
        // The surviving mode is the stationary direction (1, i).
        CHECK(std::abs(one.u1(t).a - Complex{1.0, 0.0}) < 1e-15);
        CHECK(std::abs(one.u1(t).b - Complex{0.0, 1.0}) < 1e-15);
    }

    const Modulation flat = Modulation::cosine(0.0, 1.0, 3.0, 1.0);
    const FloquetModes two = floquet_modes_analytic(flat);
    CHECK(two.coalesced == false);
    // Second mode: (p, i(p - 1)) with p = nu1 sin(omega t)/omega.
    const Vec2 u20 = two.u2(0.0);
    CHECK(std::abs(u20.a) == 0.0);
    CHECK(std::abs(u20.b - Complex{0.0, -1.0}) < 1e-15);
    for (const double t : {0.0, 0.3, 1.1}) {
        CHECK(norm_inf(two.u2(t + flat.period()) - two.u2(t)) < 1e-13);
        CHECK(mode_residual(flat, two.u2, t) < 1e-7);
    }
}

TEST_CASE("the pulse family has no Floquet spectrum") {
    const Modulation pulse = Modulation::sech2(0.7, 0.5);
    CHECK_THROWS_AS(quasienergies_analytic(pulse), std::invalid_argument);
    CHECK_THROWS_AS(
        quasienergies_numeric(pulse, IntegrationConfig::defaults_for(pulse)),
        std::invalid_argument);
    CHECK_THROWS_AS(floquet_modes_analytic(pulse), std::invalid_argument);
}
