#include "ptsync/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ptsync/analytic.hpp"

namespace ptsync {

namespace {

// Sampling density: follow the integrator resolution, never below 200
// samples per period (1000 at the default step of period/1000).
int samples_per_period_for(const Modulation& mod, const IntegrationConfig& cfg) {
    const double per_step = mod.period() / cfg.dt;
    const long spp = std::lround(per_step);
    return static_cast<int>(std::max<long>(200, spp));
}

double checked_ratio_p1_over_p(double p1, double p) {
    if (!(p > 0.0) || !std::isfinite(p)) {
        throw NumericalError("localization: total population vanished or overflowed");
    }
    return p1 / p;
}

void require_cosine(const Modulation& mod, const char* who) {
    if (mod.family() != DriveFamily::Cosine) {
        throw std::invalid_argument(std::string(who) +
                                    ": requires a periodic (cosine) modulation");
    }
}

}  // namespace

Populations populations(const TwoLevelState& state) {
    Populations out;
    out.p1 = abs2(state.c1);
    out.p2 = abs2(state.c2);
    out.p = out.p1 + out.p2;
    return out;
}

LocalizationResult localization(const Modulation& mod, const TwoLevelState& initial,
                                int window_periods, const IntegrationConfig& cfg) {
    require_cosine(mod, "localization");
    if (window_periods < 0) {
        throw std::invalid_argument("localization: window_periods must be >= 0");
    }

    LocalizationResult out;
    out.t_start = initial.t;
    out.samples_per_period = samples_per_period_for(mod, cfg);

    const Populations pops0 = populations(initial);
    double min_ratio = checked_ratio_p1_over_p(pops0.p1, pops0.p);
    if (window_periods == 0) {
        out.t_end = initial.t;
        out.value = min_ratio;
        return out;
    }

    const double t_end = initial.t + window_periods * mod.period();
    const int n_samples = window_periods * out.samples_per_period;
    const StateSeries series = integrate_state(initial, mod, t_end, cfg, n_samples);
    for (const TwoLevelState& s : series.samples) {
        const Populations pops = populations(s);
        min_ratio = std::min(min_ratio, checked_ratio_p1_over_p(pops.p1, pops.p));
    }
    out.t_end = t_end;
    out.value = min_ratio;
    return out;
}

namespace {

// Closed-form localization: evaluate the exact solution on the same node
// grid the integrator engine would use.
double localization_closed_form(const Modulation& mod, const TwoLevelState& initial,
                                int window_periods, int spp) {
    const AnalyticSolution sol(initial, mod);
    const double sample_dt = mod.period() / spp;
    const long n = static_cast<long>(window_periods) * spp;
    double min_ratio = std::numeric_limits<double>::infinity();
    for (long k = 0; k <= n; ++k) {
        const Populations pops =
            populations(sol.at(initial.t + static_cast<double>(k) * sample_dt));
        min_ratio = std::min(min_ratio, checked_ratio_p1_over_p(pops.p1, pops.p));
    }
    return min_ratio;
}

std::vector<SweepRecord> cdt_scan_integrator(const Modulation& mod_template,
                                             ScanVariable vary,
                                             const std::vector<double>& grid,
                                             const TwoLevelState& initial,
                                             int window_periods, int spp) {
    const std::size_t n = grid.size();
    std::vector<SweepRecord> out(n);
    const kernels::StateBatch init = kernels::StateBatch::broadcast(initial, n);
    kernels::LaneParams lanes;
    lanes.ratio.resize(n);
    lanes.h.resize(n);
    lanes.scale.assign(n, 1.0);

    kernels::DriveTable tab;
    if (vary == ScanVariable::Omega) {
        for (std::size_t i = 0; i < n; ++i) {
            // Validate each frequency through the factory before the march.
            const Modulation m = Modulation::cosine(mod_template.nu0(), mod_template.nu1(),
                                                    grid[i], mod_template.ratio());
            lanes.ratio[i] = m.ratio();
            lanes.h[i] = m.period() / spp;
        }
        if (initial.t == 0.0) {
            // All lanes share the drive through the phase grid:
            // omega_i (k h_i) = 2 pi k / spp independent of omega_i.
            tab = kernels::DriveTable::tabulate_phase(mod_template.nu0(),
                                                      mod_template.nu1(), spp,
                                                      window_periods);
        } else {
            // Phases differ lane by lane away from t = 0; march each lane
            // with its own table.
            for (std::size_t i = 0; i < n; ++i) {
                const Modulation m = Modulation::cosine(
                    mod_template.nu0(), mod_template.nu1(), grid[i], mod_template.ratio());
                const double t1 = initial.t + window_periods * m.period();
                const kernels::DriveTable own = kernels::DriveTable::tabulate(
                    m, initial.t, t1, static_cast<long>(window_periods) * spp);
                kernels::StateBatch one = kernels::StateBatch::broadcast(initial, 1);
                kernels::LaneParams lp;
                lp.ratio = {m.ratio()};
                lp.h = {m.period() / spp};
                lp.scale = {1.0};
                const kernels::BatchResult r = kernels::rk4_batch(one, own, lp);
                out[i] = SweepRecord{grid[i], r.min_ratio[0]};
            }
            return out;
        }
    } else {
        const double t1 = initial.t + window_periods * mod_template.period();
        tab = kernels::DriveTable::tabulate(mod_template, initial.t, t1,
                                            static_cast<long>(window_periods) * spp);
        for (std::size_t i = 0; i < n; ++i) {
            const Modulation m = Modulation::cosine(mod_template.nu0(), mod_template.nu1(),
                                                    mod_template.omega(), grid[i]);
            lanes.ratio[i] = m.ratio();
            lanes.h[i] = m.period() / spp;
        }
    }

    const kernels::BatchResult res = kernels::rk4_batch(init, tab, lanes);
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = SweepRecord{grid[i], res.min_ratio[i]};
    }
    return out;
}

}  // namespace

std::vector<SweepRecord> cdt_scan(const Modulation& mod_template, ScanVariable vary,
                                  const std::vector<double>& grid,
                                  const TwoLevelState& initial, int window_periods,
                                  const IntegrationConfig& cfg, ScanEngine engine) {
    require_cosine(mod_template, "cdt_scan");
    if (mod_template.nu0() != 0.0) {
        throw std::invalid_argument(
            "cdt_scan: the suppression study requires zero static drive (nu0 = 0)");
    }
    if (window_periods < 1) {
        throw std::invalid_argument("cdt_scan: window_periods must be >= 1");
    }

    const int spp = samples_per_period_for(mod_template, cfg);

    if (engine == ScanEngine::Integrator) {
        std::vector<SweepRecord> out =
            cdt_scan_integrator(mod_template, vary, grid, initial, window_periods, spp);
        for (const SweepRecord& rec : out) {
            if (!(rec.localization >= 0.0 && rec.localization <= 1.0)) {
                throw NumericalError("cdt_scan: localization left [0, 1]");
            }
        }
        return out;
    }

    std::vector<SweepRecord> out;
    out.reserve(grid.size());
    for (const double g : grid) {
        const Modulation m =
            (vary == ScanVariable::Omega)
                ? Modulation::cosine(mod_template.nu0(), mod_template.nu1(), g,
                                     mod_template.ratio())
                : Modulation::cosine(mod_template.nu0(), mod_template.nu1(),
                                     mod_template.omega(), g);
        out.push_back(
            SweepRecord{g, localization_closed_form(m, initial, window_periods, spp)});
    }
    return out;
}

CpiSolution cpi_amplitude(double ratio, int n) {
    if (!(ratio >= 0.0) || !std::isfinite(ratio)) {
        throw std::invalid_argument("cpi_amplitude: ratio must be finite and >= 0");
    }
    if (n < 0) {
        throw std::invalid_argument("cpi_amplitude: n must be >= 0");
    }
    const RegimeParams rp = regime_of(ratio);

    CpiSolution out;
    out.ratio = ratio;
    out.n = n;
    switch (rp.regime) {
        case Regime::Oscillatory:
            out.branch = CpiBranch::SubCritical;
            out.amplitude = ((n + 0.5) * M_PI - rp.theta) / (2.0 * std::cos(rp.theta));
            break;
        case Regime::Critical:
            if (n > 0) {
                throw std::invalid_argument(
                    "cpi_amplitude: only the n = 0 solution exists at the critical ratio");
            }
            out.branch = CpiBranch::Critical;
            out.amplitude = 0.5;
            break;
        case Regime::Hyperbolic:
            if (n > 0) {
                throw std::invalid_argument(
                    "cpi_amplitude: only one solution exists above the critical ratio");
            }
            out.branch = CpiBranch::SuperCritical;
            out.amplitude = rp.phi / (2.0 * std::sinh(rp.phi));
            break;
    }
    return out;
}

double return_amplitude(double ratio, int n) {
    if (!(ratio >= 0.0) || !std::isfinite(ratio)) {
        throw std::invalid_argument("return_amplitude: ratio must be finite and >= 0");
    }
    if (n < 1) {
        throw std::invalid_argument("return_amplitude: n must be >= 1");
    }
    const RegimeParams rp = regime_of(ratio);
    if (rp.regime != Regime::Oscillatory) {
        throw std::invalid_argument(
            "return_amplitude: defined below the critical ratio only");
    }
    return n * M_PI / (2.0 * std::cos(rp.theta));
}

std::vector<CpiSolution> cpi_curve(double r_min, double r_max, int steps) {
    if (!(r_min >= 0.0) || !(r_min < r_max) || !std::isfinite(r_max)) {
        throw std::invalid_argument("cpi_curve: need 0 <= r_min < r_max, both finite");
    }
    if (steps < 2) {
        throw std::invalid_argument("cpi_curve: steps must be >= 2");
    }
    std::vector<CpiSolution> out;
    out.reserve(static_cast<std::size_t>(steps));
    const double dr = (r_max - r_min) / (steps - 1);
    for (int k = 0; k < steps; ++k) {
        const double r = (k == steps - 1) ? r_max : r_min + k * dr;
        out.push_back(cpi_amplitude(r, 0));
    }
    return out;
}

}  // namespace ptsync
