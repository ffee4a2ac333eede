#include "amplikit/phase_condition.hpp"

#include <cassert>
#include <cmath>

#include "amplikit/closed_form.hpp"
#include "amplikit/operator_builder.hpp"

namespace amplikit {

namespace {

// Quadrant membership as the corollary proofs use it. The sine product may
// sit on the axis (phi = 0 or pi is still "in quadrant" with theta).
bool same_quadrant(double theta, double phi) {
    return std::cos(theta) * std::cos(phi) > 0.0 &&
           std::sin(theta) * std::sin(phi) >= 0.0;
}

}  // namespace

PhaseVerdict check_condition(const PhaseConfig& cfg) {
    const SpectralData s = spectral_decompose(cfg);
    PhaseVerdict v;
    v.sin_delta = s.sin_delta;
    v.beta_norm = 2.0 * cfg.p * std::abs(std::cos(cfg.phi));
    v.ratio = v.sin_delta / v.beta_norm;
    v.satisfied = v.ratio <= 1.0;
    v.period = kPi / s.delta;
    if (v.satisfied) {
        const double k_real = std::asin(v.ratio) / s.delta;
        v.k_opt_real = k_real;
        v.k_opt_int = static_cast<long>(std::floor(k_real));
    }

#ifndef NDEBUG
    // Matrix route: sqrt(1 - |alpha+delta|^2 / 4) must agree.
    const IterationMatrix m = build_iteration_matrix(cfg);
    const double via_trace =
        std::sqrt(std::max(0.0, 1.0 - 0.25 * std::norm(m.trace())));
    assert(std::abs(via_trace - v.sin_delta) < 1e-12);
    assert((via_trace <= v.beta_norm) == v.satisfied ||
           std::abs(via_trace - v.beta_norm) < 1e-12);
#endif
    return v;
}

OptimalStep optimal_k(const PhaseConfig& cfg) {
    const PhaseVerdict v = check_condition(cfg);
    if (!v.satisfied) {
        throw ConditionUnsatisfied("sin(delta) exceeds |beta|; no step count "
                                   "reaches the desired state with certainty");
    }
    return OptimalStep{*v.k_opt_real, *v.k_opt_int};
}

double corollary1_bound(const PhaseConfig& cfg) {
    const double ct = std::cos(cfg.theta);
    const double cf = std::cos(cfg.phi);
    const bool alt = std::abs(cfg.theta - cfg.phi) < kPi / 2.0 && ct * cf < 0.0;
    if (!same_quadrant(cfg.theta, cfg.phi) && !alt) {
        throw HypothesisViolated(
            "needs same-quadrant angles or |theta-phi| < pi/2 with "
            "cos(theta)cos(phi) < 0");
    }
    const double radicand = 1.0 - 4.0 * cfg.p * cfg.p * cf * cf;
    if (radicand < 0.0) {
        throw NumericalDomain("4 p^2 cos^2 phi exceeds 1; use the direct "
                              "condition instead");
    }
    double arg = 2.0 * cfg.p * cfg.p * ct * cf + std::sqrt(radicand);
    // arg > 1 means cos(theta-phi) can never reach it: bound collapses to 0.
    if (arg > 1.0) arg = 1.0;
    return std::acos(arg);
}

bool corollary2_excludes(const PhaseConfig& cfg) {
    const double cc = std::cos(cfg.theta) * std::cos(cfg.phi);
    const double ss = std::sin(cfg.theta) * std::sin(cfg.phi);
    if (!same_quadrant(cfg.theta, cfg.phi) && !(cc < 0.0 && ss < 0.0)) {
        throw HypothesisViolated(
            "needs same-quadrant angles or cos and sin products both negative");
    }
    const double beta_norm = 2.0 * cfg.p * std::abs(std::cos(cfg.phi));
    return std::abs(std::sin(cfg.theta - cfg.phi)) > beta_norm;
}

bool special_phi_zero(double theta, double p) {
    if (!(p > 0.0) || !(p < 1.0)) throw InvalidOverlap("p must lie in (0, 1)");
    const double denom = std::abs(1.0 - 2.0 * p * p);
    if (denom == 0.0) return true;  // bound diverges; every theta works
    return std::abs(std::sin(theta)) <= 2.0 * p * p / denom;
}

bool special_theta_zero(double phi, double p) {
    if (!(p > 0.0) || !(p < 1.0)) throw InvalidOverlap("p must lie in (0, 1)");
    const double c = std::cos(phi);
    return c * c >= 1.0 / (1.0 + 4.0 * p * p * p * p);
}

double period(const PhaseConfig& cfg) {
    return kPi / spectral_decompose(cfg).delta;
}

bool monotone_window_check(const PhaseConfig& cfg) {
    const OptimalStep opt = optimal_k(cfg);
    double prev = amplitude_closed(cfg, 0.0).b_norm;
    for (long k = 1; k <= opt.k_int; ++k) {
        const double cur = amplitude_closed(cfg, static_cast<double>(k)).b_norm;
        if (!(cur > prev)) return false;
        prev = cur;
    }
    constexpr int kGrid = 512;
    prev = 0.0;
    for (int i = 1; i <= kGrid; ++i) {
        const double k = opt.k_real * static_cast<double>(i) / kGrid;
        const double cur = amplitude_closed(cfg, k).b_norm;
        if (!(cur > prev)) return false;
        prev = cur;
    }
    return true;
}

double grover_k(double p) {
    if (!(p > 0.0) || !(p < 1.0)) throw InvalidOverlap("p must lie in (0, 1)");
    const double root = std::sqrt(1.0 - p * p);
    return std::asin(root) / std::asin(2.0 * p * root);
}

double grover_k_approx(double p) {
    if (!(p > 0.0) || !(p < 1.0)) throw InvalidOverlap("p must lie in (0, 1)");
    return kPi / (4.0 * p);
}

double identical_k(double phi, double p) {
    if (!(p > 0.0) || !(p < 1.0)) throw InvalidOverlap("p must lie in (0, 1)");
    const double c = std::abs(std::cos(phi));
    if (c < kDegenerateCosPhi) throw DegeneratePhase("cos(phi) vanishes");
    const double root = std::sqrt(1.0 - p * p * c * c);
    return std::asin(root) / std::asin(2.0 * p * c * root);
}

ComparisonReport compare_grover_identical(double p,
                                          const std::vector<double>& phi_grid) {
    ComparisonReport report;
    report.p = p;
    const double kg = grover_k(p);
    report.grover_never_slower = true;
    for (double phi : phi_grid) {
        ComparisonRow row;
        row.phi = phi;
        row.k_grover = kg;
        row.k_identical = identical_k(phi, p);
        if (std::abs(std::abs(std::cos(phi)) - 1.0) < 1e-12) {
            if (std::abs(row.k_identical - kg) > 1e-9 * kg) {
                report.grover_never_slower = false;
            }
        } else if (!(row.k_identical > kg)) {
            report.grover_never_slower = false;
        }
        report.rows.push_back(row);
    }

    // The strict increase on (0, pi/2), probed by central differences.
    report.slope_positive_first_half = true;
    constexpr double kStep = 1e-4;
    constexpr int kProbes = 50;
    for (int i = 1; i <= kProbes; ++i) {
        const double phi = (kPi / 2.0) * static_cast<double>(i) / (kProbes + 1);
        const double slope =
            (identical_k(phi + kStep, p) - identical_k(phi - kStep, p)) /
            (2.0 * kStep);
        if (!(slope > 0.0)) report.slope_positive_first_half = false;
    }
    return report;
}

}  // namespace amplikit
