#pragma once

#include <string>
#include <vector>

#include "amplikit/core.hpp"

namespace amplikit::verify {

struct CheckResult {
    std::string section;
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Section names accepted by run() and the CLI --section flag.
const std::vector<std::string>& sections();

/// Runs every check in the given sections (all of them when empty),
/// in registry order. Grid sweeps fan out across worker threads.
std::vector<CheckResult> run(const std::vector<std::string>& which);

/// det(M) = e^{i2(theta+phi)} within tol. Exposed separately so tests can
/// feed in a corrupted matrix and watch the check trip.
bool determinant_identity_holds(const IterationMatrix& m,
                                const PhaseConfig& cfg, double tol);

}  // namespace amplikit::verify
