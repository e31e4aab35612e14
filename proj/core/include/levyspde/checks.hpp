#pragma once

#include "levyspde/report.hpp"

#include <cstdint>

namespace levyspde {

/// Knobs for the acceptance suite.  trial_scale multiplies every Monte Carlo
/// trial count; SE-based tolerances widen automatically.
struct AcceptanceOptions {
    std::uint64_t seed = 42;
    unsigned workers = 1;
    double trial_scale = 1.0;
    bool include_determinism = true;  // criterion 15 re-runs 1-14 at reduced
                                      // scale with worker counts {1, 8}
};

/// Runs the full acceptance suite; one record per criterion.
Report run_acceptance(const AcceptanceOptions& opt);

} // namespace levyspde
