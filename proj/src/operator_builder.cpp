#include "amplikit/operator_builder.hpp"

#include <cassert>
#include <cmath>

namespace amplikit {

IterationMatrix build_iteration_matrix(const PhaseConfig& cfg) {
    const Complex e2t = std::polar(1.0, 2.0 * cfg.theta);
    const Complex e2f = std::polar(1.0, 2.0 * cfg.phi);
    const double p2 = cfg.p * cfg.p;

    IterationMatrix m;
    m.alpha = e2t - (e2t + 1.0) * (e2f + 1.0) * p2;
    m.beta = (e2f + 1.0) * cfg.u_tau_gamma;
    m.lambda = -e2f * (e2t + 1.0) * std::conj(cfg.u_tau_gamma);
    m.delta = e2f;
    m.sum_phase = cfg.theta + cfg.phi;

#ifndef NDEBUG
    const IterationMatrix t = build_iteration_matrix_trig(cfg);
    assert(std::abs(m.alpha - t.alpha) < 1e-14);
    assert(std::abs(m.beta - t.beta) < 1e-14);
    assert(std::abs(m.lambda - t.lambda) < 1e-14);
    assert(std::abs(m.delta - t.delta) < 1e-14);
#endif
    return m;
}

IterationMatrix build_iteration_matrix_trig(const PhaseConfig& cfg) {
    const Complex ct = 2.0 * std::cos(cfg.theta) * std::polar(1.0, cfg.theta);
    const Complex cf = 2.0 * std::cos(cfg.phi) * std::polar(1.0, cfg.phi);
    const double p2 = cfg.p * cfg.p;

    IterationMatrix m;
    m.alpha = -(1.0 - ct + ct * cf * p2);
    m.beta = cf * cfg.u_tau_gamma;
    m.lambda = ct * (1.0 - cf) * std::conj(cfg.u_tau_gamma);
    m.delta = cf - 1.0;
    m.sum_phase = cfg.theta + cfg.phi;
    return m;
}

Complex trace_closed_form(const PhaseConfig& cfg) {
    const double t = std::cos(cfg.theta - cfg.phi) -
                     2.0 * cfg.p * cfg.p * std::cos(cfg.theta) * std::cos(cfg.phi);
    return 2.0 * t * std::polar(1.0, cfg.theta + cfg.phi);
}

bool trace_magnitude_bound_check(const PhaseConfig& cfg) {
    const double cc = std::cos(cfg.theta) * std::cos(cfg.phi);
    const double value =
        std::abs(std::cos(cfg.theta - cfg.phi) - 2.0 * cfg.p * cfg.p * cc);
    if (value > 1.0 + kClampSlack) return false;
    if (std::abs(cc) > 1e-12 && !(value < 1.0)) return false;
    return true;
}

}  // namespace amplikit
