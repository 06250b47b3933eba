#pragma once

#include <vector>

#include "ptsync/core.hpp"
#include "ptsync/kernels.hpp"
#include "ptsync/numeric.hpp"

namespace ptsync {

/// Level populations; P = P1 + P2 is not conserved under gain/loss.
struct Populations {
    double p1 = 0.0;
    double p2 = 0.0;
    double p = 0.0;
};

Populations populations(const TwoLevelState& state);

/// min over a time window of P1/P: 1 means the initial level never leaks
/// (relative) population, 0 means it empties completely at some instant.
struct LocalizationResult {
    double value = 1.0;
    double t_start = 0.0;
    double t_end = 0.0;
    int samples_per_period = 0;
};

/// Track P1/P on a dense uniform grid over `window_periods` drive periods
/// starting at initial.t and return the minimum.  Sampling density follows
/// the integrator step (>= 200 samples per period, 1000 at the default
/// configuration); the window endpoints and density are recorded in the
/// result.  Periodic (cosine) family only.
LocalizationResult localization(const Modulation& mod, const TwoLevelState& initial,
                                int window_periods, const IntegrationConfig& cfg);

/// One localization scan point.
struct SweepRecord {
    double param = 0.0;
    double localization = 0.0;
};

enum class ScanVariable { Omega, Ratio };

enum class ScanEngine {
    ClosedForm,  ///< evaluate the exact solution on the sample grid
    Integrator,  ///< batched RK4 lanes (cross-check of the closed form)
};

/// Localization versus drive frequency or gain/loss ratio at zero static
/// drive component (the drive-induced suppression study is defined for
/// nu0 = 0; other template parameters are taken from mod_template).
std::vector<SweepRecord> cdt_scan(const Modulation& mod_template, ScanVariable vary,
                                  const std::vector<double>& grid,
                                  const TwoLevelState& initial, int window_periods,
                                  const IntegrationConfig& cfg,
                                  ScanEngine engine = ScanEngine::ClosedForm);

/// Pulse-area solutions for complete population inversion under the sech^2
/// pulse.  The branch records which closed form produced the amplitude.
enum class CpiBranch { SubCritical, Critical, SuperCritical };

struct CpiSolution {
    double ratio = 0.0;
    double amplitude = 0.0;
    CpiBranch branch = CpiBranch::SubCritical;
    int n = 0;  ///< solution index (sub-critical family only)
};

/// Amplitude A for complete inversion at gain/loss ratio R:
///   R < 1:  A = ((n + 1/2) pi - theta) / (2 cos theta)
///   R = 1:  A = 1/2
///   R > 1:  A = phi / (2 sinh phi)
/// n indexes the sub-critical family; above the critical ratio only a single
/// solution exists, so n > 0 is rejected there.
CpiSolution cpi_amplitude(double ratio, int n = 0);

/// Amplitude returning all population to the initial level: A = n pi /
/// (2 cos theta), defined for 0 <= R < 1, n >= 1.
double return_amplitude(double ratio, int n = 1);

/// The inversion amplitude A(R) sampled on a uniform ratio grid, stitching
/// the three branches (continuous at the critical ratio, where both one-sided
/// limits give A = 1/2).
std::vector<CpiSolution> cpi_curve(double r_min, double r_max, int steps);

}  // namespace ptsync
