#include <cmath>
#include <limits>
#include <string>

#include "doctest.h"
#include "ptsync/analytic.hpp"
#include "ptsync/numeric.hpp"

using namespace ptsync;

namespace {

double dev(const TwoLevelState& x, const TwoLevelState& y) {
    return std::max(std::abs(x.c1 - y.c1), std::abs(x.c2 - y.c2));
}

const TwoLevelState kUpper{Complex{1.0, 0.0}, Complex{}, 0.0};

}  // namespace

TEST_CASE("family-aware defaults") {
    const Modulation cosine = Modulation::cosine(0.5, 1.0, 3.0, 0.5);
    CHECK(IntegrationConfig::defaults_for(cosine).dt ==
          doctest::Approx(cosine.period() / 1000.0).epsilon(1e-15));
    CHECK(IntegrationConfig::defaults_for(Modulation::sech2(0.7, 0.5)).dt == 1e-3);
}

TEST_CASE("zero-length integration returns the initial state") {
    const Modulation mod = Modulation::cosine(0.5, 1.0, 3.0, 0.5);
    const StateSeries s =
        integrate_state(kUpper, mod, 0.0, IntegrationConfig::defaults_for(mod), 7);
    REQUIRE(s.samples.size() == 1);
    CHECK(dev(s.samples.front(), kUpper) == 0.0);
}

TEST_CASE("output grid covers the span uniformly") {
    const Modulation mod = Modulation::cosine(0.5, 1.0, 3.0, 0.5);
    const IntegrationConfig cfg = IntegrationConfig::defaults_for(mod);
    const StateSeries s = integrate_state(kUpper, mod, 2.0, cfg, 8);
    REQUIRE(s.samples.size() == 9);
    CHECK(s.samples.front().t == 0.0);
    CHECK(s.samples.back().t == doctest::Approx(2.0).epsilon(1e-15));
    for (std::size_t k = 0; k < s.samples.size(); ++k) {
        CHECK(s.samples[k].t == doctest::Approx(0.25 * k).epsilon(1e-13));
    }
    // The sampled run rounds the substep count per output interval, so its
    // grid differs slightly from the single-interval one: agreement is to
    // truncation accuracy, not bitwise.
    CHECK(dev(s.final_state(), integrate_final(kUpper, mod, 2.0, cfg)) < 1e-12);
}

TEST_CASE("fixed-step RK4 tracks the closed form in all regimes") {
    for (const double ratio : {0.0, 0.5, 1.0, 1.2}) {
        const Modulation mod = Modulation::cosine(0.5, 1.0, 3.0, ratio);
        IntegrationConfig cfg = IntegrationConfig::defaults_for(mod);
        cfg.dt = mod.period() / 2000.0;
        const TwoLevelState got = integrate_final(kUpper, mod, 10.0, cfg);
        const TwoLevelState want = propagate_analytic(kUpper, mod, 10.0);
        CHECK(dev(got, want) < 1e-8);
    }
    const Modulation pulse = Modulation::sech2(0.7, 0.5);
    const TwoLevelState lower{Complex{}, Complex{1.0, 0.0}, -20.0};
    const TwoLevelState got =
        integrate_final(lower, pulse, 20.0, IntegrationConfig::defaults_for(pulse));
    const PulsePopulations want = sech2_final_populations(0.7, 0.5);
    CHECK(abs2(got.c1) == doctest::Approx(want.p1_inf).epsilon(1e-8));
    CHECK(abs2(got.c2) == doctest::Approx(want.p2_inf).epsilon(1e-6));
}

TEST_CASE("global error decreases by ~2^4 per step halving") {
    const Modulation mod = Modulation::cosine(0.5, 1.0, 3.0, 0.5);
    const TwoLevelState want = propagate_analytic(kUpper, mod, 10.0);
    IntegrationConfig cfg;
    cfg.dt = mod.period() / 250.0;
    const double coarse = dev(integrate_final(kUpper, mod, 10.0, cfg), want);
    cfg.dt = mod.period() / 500.0;
    const double fine = dev(integrate_final(kUpper, mod, 10.0, cfg), want);
    CHECK(coarse / fine > 12.0);
    CHECK(coarse / fine < 20.0);
}

TEST_CASE("propagator: identity, unimodularity, composition, state consistency") {
    const Modulation mod = Modulation::cosine(0.5, 1.0, 3.0, 1.2);
    const IntegrationConfig cfg = IntegrationConfig::defaults_for(mod);

    CHECK(norm_max(integrate_propagator(mod, 1.0, 1.0, cfg) - Mat2::identity()) == 0.0);

    const Mat2 u10 = integrate_propagator(mod, 0.0, 1.0, cfg);
    const Mat2 u21 = integrate_propagator(mod, 1.0, 2.0, cfg);
    const Mat2 u20 = integrate_propagator(mod, 0.0, 2.0, cfg);
    CHECK(norm_max(u21 * u10 - u20) < 1e-9);
    CHECK(std::abs(u20.det() - Complex{1.0, 0.0}) < 1e-10);

    const TwoLevelState direct = integrate_final(kUpper, mod, 2.0, cfg);
    const Vec2 via = u20 * Vec2{kUpper.c1, kUpper.c2};
    CHECK(std::abs(via.a - direct.c1) < 1e-9);
    CHECK(std::abs(via.b - direct.c2) < 1e-9);
}

TEST_CASE("adaptive stepping matches the fixed-step result") {
    const Modulation mod = Modulation::cosine(0.5, 1.0, 3.0, 0.5);
    IntegrationConfig adaptive = IntegrationConfig::defaults_for(mod);
    adaptive.adaptive = true;
    adaptive.tol = 1e-12;
    const TwoLevelState got = integrate_final(kUpper, mod, 12.0, adaptive);
    const TwoLevelState want = propagate_analytic(kUpper, mod, 12.0);
    CHECK(dev(got, want) < 1e-9);

    // Sampled variant hits the same grid points.
    const StateSeries s = integrate_state(kUpper, mod, 12.0, adaptive, 6);
    REQUIRE(s.samples.size() == 7);
    for (const TwoLevelState& sample : s.samples) {
        CHECK(dev(sample, propagate_analytic(kUpper, mod, sample.t)) < 1e-9);
    }
}

TEST_CASE("adaptive stepping stops a trajectory with unbounded gain") {
    // Constant super-critical drive: |C| ~ e^{8.66 t} crosses the 1e300
    // acceptance ceiling near t = 79.8; the march must raise a numerical
    // error there instead of grinding toward the floating-point maximum.
    const Modulation mod = Modulation::cosine(5.0, 0.0, 1.0, 2.0);
    IntegrationConfig cfg;
    cfg.adaptive = true;
    cfg.tol = 1e-10;
    CHECK_THROWS_AS(integrate_final(kUpper, mod, 200.0, cfg), NumericalError);
    try {
        integrate_final(kUpper, mod, 200.0, cfg);
    } catch (const NumericalError& e) {
        const std::string what = e.what();
        CHECK(what.find("unbounded gain") != std::string::npos);
        // ln(1e300)/8.66 = 79.8, give or take controller granularity.
        CHECK(what.find("t = 7") != std::string::npos);
    }
}

TEST_CASE("adaptive stepping reports step underflow when the error never resolves") {
    // A non-finite amplitude poisons every error estimate, so the controller
    // can only shrink; the guard must convert that into a typed error carrying
    // the time at which progress stopped.
    const Modulation mod = Modulation::cosine(0.5, 1.0, 3.0, 0.5);
    IntegrationConfig cfg;
    cfg.adaptive = true;
    const TwoLevelState bad{Complex{std::numeric_limits<double>::infinity(), 0.0},
                            Complex{0.0, 0.0}, 0.0};
    CHECK_THROWS_AS(integrate_final(bad, mod, 1.0, cfg), StepUnderflowError);
    try {
        integrate_final(bad, mod, 1.0, cfg);
    } catch (const StepUnderflowError& e) {
        CHECK(e.t == 0.0);
    }
}

TEST_CASE("invalid requests are rejected") {
    const Modulation mod = Modulation::cosine(0.5, 1.0, 3.0, 0.5);
    IntegrationConfig cfg = IntegrationConfig::defaults_for(mod);

    CHECK_THROWS_AS(integrate_final(kUpper, mod, -1.0, cfg), std::invalid_argument);
    CHECK_THROWS_AS(integrate_state(kUpper, mod, 1.0, cfg, 0), std::invalid_argument);
    CHECK_THROWS_AS(
        integrate_final(kUpper, mod, std::numeric_limits<double>::infinity(), cfg),
        std::invalid_argument);

    cfg.dt = 0.0;
    CHECK_THROWS_AS(integrate_final(kUpper, mod, 1.0, cfg), std::invalid_argument);
    cfg.dt = 1e-3;
    cfg.tol = -1.0;
    cfg.adaptive = true;
    CHECK_THROWS_AS(integrate_final(kUpper, mod, 1.0, cfg), std::invalid_argument);
}
