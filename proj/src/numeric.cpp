#include "ptsync/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace ptsync {

namespace {

struct Deriv {
    Complex d1;
    Complex d2;
};

// i dC/dt = H C written out: dC1/dt = g C1 + i nu C2, dC2/dt = i nu C1 - g C2
// with g = R nu.  Kept in complex form so the arithmetic matches the
// straightforward textbook evaluation step for step.
inline Deriv rhs(const Modulation& mod, double ratio, double t, const Complex& c1,
                 const Complex& c2) {
    const double nu = mod.nu(t);
    const double g = ratio * nu;
    const Complex inu{0.0, nu};
    return Deriv{g * c1 + inu * c2, inu * c1 - g * c2};
}

// One classic RK4 step of size h from (t, y).
inline void rk4_step(const Modulation& mod, double ratio, double t, double h,
                     Complex& c1, Complex& c2) {
    const Deriv k1 = rhs(mod, ratio, t, c1, c2);
    const Deriv k2 = rhs(mod, ratio, t + h / 2, c1 + h / 2 * k1.d1, c2 + h / 2 * k1.d2);
    const Deriv k3 = rhs(mod, ratio, t + h / 2, c1 + h / 2 * k2.d1, c2 + h / 2 * k2.d2);
    const Deriv k4 = rhs(mod, ratio, t + h, c1 + h * k3.d1, c2 + h * k3.d2);
    c1 = c1 + h / 6 * (((k1.d1 + 2.0 * k2.d1) + 2.0 * k3.d1) + k4.d1);
    c2 = c2 + h / 6 * (((k1.d2 + 2.0 * k2.d2) + 2.0 * k3.d2) + k4.d2);
}

// Fixed-step march over [t0, t1] with n uniform steps; node times are formed
// as t0 + k*h (not accumulated) so they carry no compounding rounding.
inline void march_fixed(const Modulation& mod, double t0, double t1, long n,
                        Complex& c1, Complex& c2) {
    const double ratio = mod.ratio();
    const double h = (t1 - t0) / static_cast<double>(n);
    for (long k = 0; k < n; ++k) {
        rk4_step(mod, ratio, t0 + static_cast<double>(k) * h, h, c1, c2);
    }
}

inline double err_inf(const Complex& a1, const Complex& a2, const Complex& b1,
                      const Complex& b2) {
    return std::max(std::abs(a1 - b1), std::abs(a2 - b2));
}

// Largest state norm the adaptive controller will accept before declaring the
// trajectory divergent.  Far below DBL_MAX so every trial-step intermediate
// stays representable.
constexpr double kAmplitudeCeiling = 1e300;

// Step-doubling march: each trial step is taken once at h and twice at h/2;
// the difference estimates the local error.  The halved result is kept (no
// Richardson extrapolation -- keeps the accepted solution plain RK4).
inline void march_adaptive(const Modulation& mod, double t0, double t1,
                           const IntegrationConfig& cfg, Complex& c1, Complex& c2) {
    const double ratio = mod.ratio();
    double t = t0;
    double h = std::min(cfg.dt, t1 - t0);
    while (t < t1) {
        // The underflow test looks at the controller-driven step, not the
        // span-clamped one: a tiny final sliver is normal termination.
        if (h < 1e-14 * std::max(1.0, std::abs(t))) {
            throw StepUnderflowError(t);
        }
        const bool last = (h >= t1 - t);
        const double hs = last ? (t1 - t) : h;
        Complex b1 = c1, b2 = c2;
        rk4_step(mod, ratio, t, hs, b1, b2);
        Complex s1 = c1, s2 = c2;
        rk4_step(mod, ratio, t, hs / 2, s1, s2);
        rk4_step(mod, ratio, t + hs / 2, hs / 2, s1, s2);
        const double err = err_inf(b1, b2, s1, s2);
        const double scale = cfg.tol * std::max(1.0, std::max(std::abs(s1), std::abs(s2)));
        if (std::isfinite(err) && err <= scale) {
            c1 = s1;
            c2 = s2;
            t = last ? t1 : t + hs;
            // Gain-dominated trajectories grow without bound; once the norm
            // nears the floating-point ceiling the error estimate loses all
            // resolution (sub-ulp increments round away), so stop while the
            // arithmetic is still meaningful.  (NaN fails the < too.)
            if (!(std::abs(c1) + std::abs(c2) < kAmplitudeCeiling)) {
                throw NumericalError(
                    "adaptive integration: state norm exceeded 1e300 near t = " +
                    std::to_string(t) + " (unbounded gain)");
            }
            // Local error ~ h^5: grow by the fifth-root ratio, capped at 5x.
            const double fac =
                (err > 0.0) ? 0.9 * std::pow(scale / err, 0.2) : 5.0;
            h = hs * std::clamp(fac, 1.0, 5.0);
        } else {
            // A non-finite error estimate (state overflowed) cannot steer the
            // controller; shrink hard and let the underflow guard terminate.
            const double shrink = std::isfinite(err)
                                      ? std::clamp(0.9 * std::pow(scale / err, 0.2), 0.2, 0.9)
                                      : 0.2;
            h = hs * shrink;
        }
    }
}

void check_config(const IntegrationConfig& cfg) {
    if (!(cfg.dt > 0.0) || !std::isfinite(cfg.dt)) {
        throw std::invalid_argument("IntegrationConfig.dt must be positive and finite");
    }
    if (!(cfg.tol > 0.0) || !std::isfinite(cfg.tol)) {
        throw std::invalid_argument("IntegrationConfig.tol must be positive and finite");
    }
}

}  // namespace

IntegrationConfig IntegrationConfig::defaults_for(const Modulation& mod) {
    IntegrationConfig cfg;
    if (mod.family() == DriveFamily::Cosine) {
        cfg.dt = mod.period() / 1000.0;
    } else {
        cfg.dt = 1e-3;
    }
    return cfg;
}

StepUnderflowError::StepUnderflowError(double t_at)
    : NumericalError("adaptive step size underflow at t = " + std::to_string(t_at)),
      t(t_at) {}

StateSeries integrate_state(const TwoLevelState& initial, const Modulation& mod,
                            double t_end, const IntegrationConfig& cfg,
                            int output_samples) {
    check_config(cfg);
    if (!std::isfinite(initial.t) || !std::isfinite(t_end)) {
        throw std::invalid_argument(
            "integrate_state: endpoints must be finite (use t_max_sech for pulse tails)");
    }
    if (t_end < initial.t) {
        throw std::invalid_argument("integrate_state: t_end must be >= initial.t");
    }
    if (output_samples < 1) {
        throw std::invalid_argument("integrate_state: output_samples must be >= 1");
    }

    StateSeries series;
    if (t_end == initial.t) {
        series.samples.push_back(initial);
        return series;
    }

    const double t0 = initial.t;
    const double span = t_end - t0;
    const double sample_dt = span / output_samples;
    series.samples.reserve(static_cast<std::size_t>(output_samples) + 1);
    series.samples.push_back(initial);

    Complex c1 = initial.c1, c2 = initial.c2;
    if (cfg.adaptive) {
        for (int j = 0; j < output_samples; ++j) {
            const double ta = t0 + j * sample_dt;
            const double tb = (j + 1 == output_samples) ? t_end : t0 + (j + 1) * sample_dt;
            march_adaptive(mod, ta, tb, cfg, c1, c2);
            series.samples.push_back(TwoLevelState{c1, c2, tb});
        }
    } else {
        // Substeps per output interval; the grid is globally uniform with
        // h = span / (m * output_samples) <= cfg.dt (up to a rounding guard
        // that keeps an exact-integer span/dt from picking up a spare step).
        const long m = std::max<long>(
            1, static_cast<long>(std::ceil(sample_dt / cfg.dt - 1e-9)));
        const long n_total = m * output_samples;
        const double h = span / static_cast<double>(n_total);
        const double ratio = mod.ratio();
        for (long k = 0; k < n_total; ++k) {
            rk4_step(mod, ratio, t0 + static_cast<double>(k) * h, h, c1, c2);
            if ((k + 1) % m == 0) {
                series.samples.push_back(
                    TwoLevelState{c1, c2, t0 + static_cast<double>(k + 1) * h});
            }
        }
    }
    return series;
}

TwoLevelState integrate_final(const TwoLevelState& initial, const Modulation& mod,
                              double t_end, const IntegrationConfig& cfg) {
    return integrate_state(initial, mod, t_end, cfg, 1).final_state();
}

Mat2 integrate_propagator(const Modulation& mod, double t0, double t1,
                          const IntegrationConfig& cfg) {
    check_config(cfg);
    if (!std::isfinite(t0) || !std::isfinite(t1)) {
        throw std::invalid_argument("integrate_propagator: endpoints must be finite");
    }
    if (t1 < t0) {
        throw std::invalid_argument("integrate_propagator: t1 must be >= t0");
    }
    if (t1 == t0) {
        return Mat2::identity();
    }

    // Columnwise: each column of U evolves like a state started from a basis
    // vector.
    Mat2 u = Mat2::identity();
    for (int col = 0; col < 2; ++col) {
        Complex c1 = (col == 0) ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
        Complex c2 = (col == 0) ? Complex{0.0, 0.0} : Complex{1.0, 0.0};
        if (cfg.adaptive) {
            march_adaptive(mod, t0, t1, cfg, c1, c2);
        } else {
            const long n = std::max<long>(
                1, static_cast<long>(std::ceil((t1 - t0) / cfg.dt - 1e-9)));
            march_fixed(mod, t0, t1, n, c1, c2);
        }
        if (col == 0) {
            u.m00 = c1;
            u.m10 = c2;
        } else {
            u.m01 = c1;
            u.m11 = c2;
        }
    }
    return u;
}

}  // namespace ptsync
