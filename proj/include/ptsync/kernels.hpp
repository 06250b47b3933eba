#pragma once

#include <cstddef>
#include <vector>

#include "ptsync/core.hpp"

namespace ptsync::kernels {

/// Structure-of-arrays batch of two-level amplitudes: lane i holds
/// (c1, c2) = (c1_re[i] + i c1_im[i], c2_re[i] + i c2_im[i]).  Sweeps map one
/// grid point (or one propagator column) to one lane.
struct StateBatch {
    std::vector<double> c1_re, c1_im, c2_re, c2_im;

    std::size_t size() const { return c1_re.size(); }
    void resize(std::size_t n);
    static StateBatch broadcast(const TwoLevelState& s, std::size_t n);
};

/// Drive profile pretabulated on the uniform step grid: node[k] = nu at step
/// start k, mid[k] = nu at the step midpoint.  One table serves every lane
/// whose drive values coincide on the grid -- a ratio sweep trivially, and a
/// frequency sweep through the phase grid (omega_i * t_k = 2 pi k / spp for
/// all lanes when each lane steps at h_i = period_i / spp).
struct DriveTable {
    std::vector<double> node;  ///< steps + 1 entries
    std::vector<double> mid;   ///< steps entries

    long steps() const { return static_cast<long>(mid.size()); }

    /// Evaluate mod.nu on the grid t0 + k h, h = (t1 - t0)/steps.
    static DriveTable tabulate(const Modulation& mod, double t0, double t1, long steps);

    /// Phase-grid table for cosine drives: nu0 + nu1 cos(2 pi k / spp) over
    /// `periods` periods, frequency-independent by construction.
    static DriveTable tabulate_phase(double nu0, double nu1, long steps_per_period,
                                     int periods);
};

/// Per-lane march parameters; each vector has one entry per lane.
struct LaneParams {
    std::vector<double> ratio;  ///< gain/loss ratio R
    std::vector<double> h;      ///< RK4 step (lanes may step at different rates)
    std::vector<double> scale;  ///< drive scale: lane drive = scale * table value
};

/// Output of a batched march: final amplitudes plus, per lane, the minimum of
/// P1/P over all visited grid nodes (the initial node included).
struct BatchResult {
    StateBatch final;
    std::vector<double> min_ratio;
};

enum class Kernel { Auto, Scalar, Avx2 };

/// True when `k` can execute on this build/CPU.
bool kernel_available(Kernel k);

/// The kernel Auto resolves to: the widest available SIMD variant, unless the
/// PTSYNC_KERNEL environment variable ("scalar", "avx2", "auto") overrides.
Kernel active_kernel();

const char* kernel_name(Kernel k);

/// March every lane through `drive.steps()` RK4 steps.  All lanes share the
/// step count and the drive table; ratio/step/scale are per lane.  The
/// variants are arithmetic clones of one another (identical operation order,
/// contraction disabled), so the kernel choice cannot change results.
BatchResult rk4_batch(const StateBatch& initial, const DriveTable& drive,
                      const LaneParams& lanes, Kernel kernel = Kernel::Auto);

/// One-period propagators for a batch of ratios sharing a cosine drive
/// profile: lane pair (2i, 2i+1) integrates the two identity columns for
/// ratios[i].
std::vector<Mat2> monodromy_batch(const Modulation& mod_template,
                                  const std::vector<double>& ratios,
                                  long steps_per_period, Kernel kernel = Kernel::Auto);

namespace detail {

/// Raw marches used by rk4_batch; exposed for the equivalence tests.
void rk4_batch_scalar(std::size_t n, const double* node, const double* mid, long steps,
                      const double* ratio, const double* h, const double* scale,
                      double* ar, double* ai, double* br, double* bi, double* minr);

#if defined(PTSYNC_HAVE_AVX2)
/// Requires n % 4 == 0; the public entry point routes tail lanes to the
/// scalar march.
void rk4_batch_avx2(std::size_t n, const double* node, const double* mid, long steps,
                    const double* ratio, const double* h, const double* scale,
                    double* ar, double* ai, double* br, double* bi, double* minr);
#endif

}  // namespace detail

}  // namespace ptsync::kernels
