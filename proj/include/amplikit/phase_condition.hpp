#pragma once

#include <optional>
#include <vector>

#include "amplikit/core.hpp"

namespace amplikit {

/// Outcome of the certainty condition sin(delta) <= |beta|.
struct PhaseVerdict {
    double sin_delta = 0.0;
    double beta_norm = 0.0;             // |beta| = 2p|cos phi|
    double ratio = 0.0;                 // sin(delta) / |beta|
    bool satisfied = false;
    std::optional<double> k_opt_real;   // (1/delta) arcsin(ratio)
    std::optional<long> k_opt_int;      // floor of the above
    double period = 0.0;                // pi / delta
};

PhaseVerdict check_condition(const PhaseConfig& cfg);

struct OptimalStep {
    double k_real = 0.0;
    long k_int = 0;
};

/// Throws ConditionUnsatisfied when sin(delta) > |beta|.
OptimalStep optimal_k(const PhaseConfig& cfg);

/// arccos(2 p^2 cos(theta)cos(phi) + sqrt(1 - 4 p^2 cos^2 phi)); under the
/// quadrant hypotheses the condition holds iff |theta - phi| stays within
/// this angle. Throws HypothesisViolated outside the hypothesis region and
/// NumericalDomain when 4 p^2 cos^2 phi > 1.
double corollary1_bound(const PhaseConfig& cfg);

/// True iff |sin(theta - phi)| > |beta|, which under the quadrant/sign
/// hypotheses rules out reaching the desired state with certainty.
bool corollary2_excludes(const PhaseConfig& cfg);

/// phi = 0 special case: satisfiable iff |sin theta| <= 2p^2 / |1 - 2p^2|
/// (always satisfiable at p = sqrt(2)/2 where the bound diverges).
bool special_phi_zero(double theta, double p);

/// theta = 0 special case: satisfiable iff cos^2 phi >= 1 / (1 + 4p^4).
bool special_theta_zero(double phi, double p);

/// Period of |b_k| as a |sin| function of continuous k: T = pi / delta.
double period(const PhaseConfig& cfg);

/// Verifies |b_k| strictly increases over integer k = 0..floor(k_o) and on
/// a dense real grid in [0, k_o]. Requires the condition to be satisfied.
bool monotone_window_check(const PhaseConfig& cfg);

/// Optimal step count for theta = phi = 0:
///   arcsin(sqrt(1-p^2)) / arcsin(2p sqrt(1-p^2)).
double grover_k(double p);

/// First-order small-p approximation pi / (4p).
double grover_k_approx(double p);

/// Optimal step count for theta = phi:
///   arcsin(sqrt(1-p^2 cos^2 phi)) / arcsin(2p|cos phi| sqrt(1-p^2 cos^2 phi)).
double identical_k(double phi, double p);

struct ComparisonRow {
    double phi = 0.0;
    double k_grover = 0.0;
    double k_identical = 0.0;
};

struct ComparisonReport {
    double p = 0.0;
    std::vector<ComparisonRow> rows;
    // k_grover <= k_identical on every row, equal only where |cos phi| = 1.
    bool grover_never_slower = false;
    // central-difference slope of identical_k positive across (0, pi/2)
    bool slope_positive_first_half = false;
};

ComparisonReport compare_grover_identical(double p,
                                          const std::vector<double>& phi_grid);

}  // namespace amplikit
