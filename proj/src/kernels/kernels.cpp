#include "ptsync/kernels.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

namespace ptsync::kernels {

void StateBatch::resize(std::size_t n) {
    c1_re.resize(n);
    c1_im.resize(n);
    c2_re.resize(n);
    c2_im.resize(n);
}

StateBatch StateBatch::broadcast(const TwoLevelState& s, std::size_t n) {
    StateBatch b;
    b.c1_re.assign(n, s.c1.real());
    b.c1_im.assign(n, s.c1.imag());
    b.c2_re.assign(n, s.c2.real());
    b.c2_im.assign(n, s.c2.imag());
    return b;
}

DriveTable DriveTable::tabulate(const Modulation& mod, double t0, double t1, long steps) {
    if (steps < 1) {
        throw std::invalid_argument("DriveTable::tabulate: steps must be >= 1");
    }
    DriveTable tab;
    const double h = (t1 - t0) / static_cast<double>(steps);
    tab.node.resize(static_cast<std::size_t>(steps) + 1);
    tab.mid.resize(static_cast<std::size_t>(steps));
    for (long k = 0; k <= steps; ++k) {
        // Same node-time arithmetic as the plain integrator: t0 + k h.
        tab.node[static_cast<std::size_t>(k)] = mod.nu(t0 + static_cast<double>(k) * h);
    }
    for (long k = 0; k < steps; ++k) {
        const double t = t0 + static_cast<double>(k) * h;
        tab.mid[static_cast<std::size_t>(k)] = mod.nu(t + h / 2);
    }
    return tab;
}

DriveTable DriveTable::tabulate_phase(double nu0, double nu1, long steps_per_period,
                                      int periods) {
    if (steps_per_period < 1 || periods < 1) {
        throw std::invalid_argument("DriveTable::tabulate_phase: counts must be >= 1");
    }
    DriveTable tab;
    const long steps = steps_per_period * periods;
    const double dphi = 2.0 * M_PI / static_cast<double>(steps_per_period);
    tab.node.resize(static_cast<std::size_t>(steps) + 1);
    tab.mid.resize(static_cast<std::size_t>(steps));
    for (long k = 0; k <= steps; ++k) {
        tab.node[static_cast<std::size_t>(k)] =
            nu0 + nu1 * std::cos(static_cast<double>(k) * dphi);
    }
    for (long k = 0; k < steps; ++k) {
        tab.mid[static_cast<std::size_t>(k)] =
            nu0 + nu1 * std::cos((static_cast<double>(k) + 0.5) * dphi);
    }
    return tab;
}

bool kernel_available(Kernel k) {
    switch (k) {
        case Kernel::Auto:
        case Kernel::Scalar:
            return true;
        case Kernel::Avx2:
#if defined(PTSYNC_HAVE_AVX2)
            return __builtin_cpu_supports("avx2") != 0;
#else
            return false;
#endif
    }
    return false;
}

namespace {

Kernel resolve_kernel() {
    const char* env = std::getenv("PTSYNC_KERNEL");
    if (env != nullptr && env[0] != '\0') {
        const std::string v(env);
        if (v == "scalar") {
            return Kernel::Scalar;
        }
        if (v == "avx2") {
            if (!kernel_available(Kernel::Avx2)) {
                throw std::runtime_error(
                    "PTSYNC_KERNEL=avx2 requested but AVX2 is unavailable");
            }
            return Kernel::Avx2;
        }
        if (v != "auto") {
            throw std::invalid_argument("PTSYNC_KERNEL must be one of auto|scalar|avx2");
        }
    }
    return kernel_available(Kernel::Avx2) ? Kernel::Avx2 : Kernel::Scalar;
}

}  // namespace

Kernel active_kernel() {
    static const Kernel k = resolve_kernel();
    return k;
}

const char* kernel_name(Kernel k) {
    switch (k) {
        case Kernel::Auto:
            return "auto";
        case Kernel::Scalar:
            return "scalar";
        case Kernel::Avx2:
            return "avx2";
    }
    return "unknown";
}

BatchResult rk4_batch(const StateBatch& initial, const DriveTable& drive,
                      const LaneParams& lanes, Kernel kernel) {
    const std::size_t n = initial.size();
    if (lanes.ratio.size() != n || lanes.h.size() != n || lanes.scale.size() != n) {
        throw std::invalid_argument("rk4_batch: lane parameter sizes must match batch");
    }
    if (drive.node.size() != drive.mid.size() + 1) {
        throw std::invalid_argument("rk4_batch: malformed drive table");
    }
    if (kernel == Kernel::Auto) {
        kernel = active_kernel();
    }
    if (!kernel_available(kernel)) {
        throw std::runtime_error(std::string("rk4_batch: kernel unavailable: ") +
                                 kernel_name(kernel));
    }

    BatchResult out;
    out.final = initial;
    out.min_ratio.assign(n, 0.0);
    if (n == 0) {
        return out;
    }

    const long steps = drive.steps();
    double* ar = out.final.c1_re.data();
    double* ai = out.final.c1_im.data();
    double* br = out.final.c2_re.data();
    double* bi = out.final.c2_im.data();
    double* mr = out.min_ratio.data();

#if defined(PTSYNC_HAVE_AVX2)
    if (kernel == Kernel::Avx2) {
        const std::size_t n4 = n - n % 4;
        if (n4 > 0) {
            detail::rk4_batch_avx2(n4, drive.node.data(), drive.mid.data(), steps,
                                   lanes.ratio.data(), lanes.h.data(), lanes.scale.data(),
                                   ar, ai, br, bi, mr);
        }
        if (n4 < n) {
            detail::rk4_batch_scalar(n - n4, drive.node.data(), drive.mid.data(), steps,
                                     lanes.ratio.data() + n4, lanes.h.data() + n4,
                                     lanes.scale.data() + n4, ar + n4, ai + n4, br + n4,
                                     bi + n4, mr + n4);
        }
        return out;
    }
#endif
    detail::rk4_batch_scalar(n, drive.node.data(), drive.mid.data(), steps,
                             lanes.ratio.data(), lanes.h.data(), lanes.scale.data(), ar,
                             ai, br, bi, mr);
    return out;
}

std::vector<Mat2> monodromy_batch(const Modulation& mod_template,
                                  const std::vector<double>& ratios,
                                  long steps_per_period, Kernel kernel) {
    if (mod_template.family() != DriveFamily::Cosine) {
        throw std::invalid_argument("monodromy_batch: requires the periodic family");
    }
    const std::size_t nr = ratios.size();
    const double period = mod_template.period();
    const DriveTable tab = DriveTable::tabulate(mod_template, 0.0, period, steps_per_period);
    const double h = period / static_cast<double>(steps_per_period);

    // Lane pair (2i, 2i+1): the two identity columns for ratios[i].
    StateBatch init;
    init.resize(2 * nr);
    LaneParams lanes;
    lanes.ratio.resize(2 * nr);
    lanes.h.assign(2 * nr, h);
    lanes.scale.assign(2 * nr, 1.0);
    for (std::size_t i = 0; i < nr; ++i) {
        init.c1_re[2 * i] = 1.0;
        init.c2_re[2 * i + 1] = 1.0;
        lanes.ratio[2 * i] = ratios[i];
        lanes.ratio[2 * i + 1] = ratios[i];
    }

    const BatchResult res = rk4_batch(init, tab, lanes, kernel);
    std::vector<Mat2> out(nr);
    for (std::size_t i = 0; i < nr; ++i) {
        const std::size_t a = 2 * i, b = 2 * i + 1;
        out[i] = Mat2{Complex{res.final.c1_re[a], res.final.c1_im[a]},
                      Complex{res.final.c1_re[b], res.final.c1_im[b]},
                      Complex{res.final.c2_re[a], res.final.c2_im[a]},
                      Complex{res.final.c2_re[b], res.final.c2_im[b]}};
    }
    return out;
}

}  // namespace ptsync::kernels
