#pragma once

#include <optional>
#include <string>
#include <vector>

namespace ptsync::verify {

/// Outcome of one self-check: the measured figure, the documented bound it
/// was held against, and a one-line account of what was compared.
struct CheckResult {
    std::string name;
    bool pass = false;
    double measured = 0.0;
    double bound = 0.0;
    std::string detail;
};

struct VerifyOptions {
    /// Step override for the integrator-driven checks (rk4-vs-analytic,
    /// cpi-forward, return-forward, rosen-zener); the remaining checks run
    /// their fixed documented protocols.
    std::optional<double> dt;
};

/// All check names, in execution order.
std::vector<std::string> check_names();

/// Run the named checks (execution order follows the registry, not the
/// selection).  Unknown names are rejected; an empty selection runs nothing.
std::vector<CheckResult> run_verify_checks(const std::vector<std::string>& selection,
                                           const VerifyOptions& opts);

/// Run every check.
std::vector<CheckResult> run_all_checks(const VerifyOptions& opts);

}  // namespace ptsync::verify
