#include "amplikit/closed_form.hpp"

#include <cassert>
#include <cmath>

#include "amplikit/operator_builder.hpp"

namespace amplikit {

namespace {

double clamped_sqrt_arg(double x) {
    if (x < 0.0) {
        if (x < -kClampSlack) {
            throw NumericalDomain("radicand " + std::to_string(x) +
                                  " too far below zero");
        }
        return 0.0;
    }
    if (x > 1.0) {
        if (x > 1.0 + kClampSlack) {
            throw NumericalDomain("radicand " + std::to_string(x) +
                                  " too far above one");
        }
        return 1.0;
    }
    return x;
}

double clamped_asin(double x) {
    if (x > 1.0) {
        if (x > 1.0 + kClampSlack) {
            throw NumericalDomain("arcsin argument " + std::to_string(x) +
                                  " out of range");
        }
        x = 1.0;
    } else if (x < -1.0) {
        if (x < -1.0 - kClampSlack) {
            throw NumericalDomain("arcsin argument " + std::to_string(x) +
                                  " out of range");
        }
        x = -1.0;
    }
    return std::asin(x);
}

}  // namespace

SpectralData spectral_decompose(const PhaseConfig& cfg) {
    if (cfg.degenerate) {
        throw DegeneratePhase("cos(phi) vanishes; eigenphases may coincide");
    }
    const double cc = std::cos(cfg.theta) * std::cos(cfg.phi);
    const double half = 0.5 * (cfg.theta - cfg.phi);
    const double sh = std::sin(half);
    const double ch = std::cos(half);
    // sin^2(delta) = (1 - t)(1 + t) with each factor in half-angle form;
    // evaluating 1 - t^2 directly loses all precision as |t| -> 1.
    const double one_minus_t = 2.0 * sh * sh + 2.0 * cfg.p * cfg.p * cc;
    const double one_plus_t = 2.0 * ch * ch - 2.0 * cfg.p * cfg.p * cc;
    const double sin2 = clamped_sqrt_arg(one_minus_t * one_plus_t);
    const double sin_delta = std::sqrt(sin2);
    if (!(sin_delta > 0.0)) {
        throw NumericalDomain("eigenphase gap underflowed to zero");
    }
    // asin(sqrt(1-t^2)) = pi/2 - asin(|t|); the right-hand form keeps full
    // precision where |t| is small and the arcsin of sin_delta goes flat.
    const double t =
        std::cos(cfg.theta - cfg.phi) - 2.0 * cfg.p * cfg.p * cc;
    const double delta = std::abs(t) < 0.75
                             ? kPi / 2.0 - std::asin(std::abs(t))
                             : clamped_asin(sin_delta);

    SpectralData s;
    s.sum_phase = cfg.theta + cfg.phi;
    s.delta = delta;
    s.sin_delta = sin_delta;
    s.psi1 = s.sum_phase + delta;
    s.psi2 = s.sum_phase - delta;

#ifndef NDEBUG
    // Numeric eigendecomposition agrees on every branch-free quantity.
    const IterationMatrix m = build_iteration_matrix(cfg);
    const auto [z1, z2] = characteristic_roots(m);
    assert(std::abs(std::abs(z1) - 1.0) < 1e-10);
    assert(std::abs(std::abs(z2) - 1.0) < 1e-10);
    assert(std::abs(z1 * z2 - m.determinant()) < 1e-10);
    const double gap = std::arg(z1) - std::arg(z2);
    assert(std::abs(std::cos(gap) - (2.0 * t * t - 1.0)) < 1e-9);
#endif
    return s;
}

std::pair<Complex, Complex> characteristic_roots(const IterationMatrix& m) {
    const Complex s = m.trace();
    const Complex d = m.determinant();
    const Complex disc = std::sqrt(s * s - 4.0 * d);
    return {0.5 * (s + disc), 0.5 * (s - disc)};
}

ClosedAmplitude amplitude_closed(const PhaseConfig& cfg, double k) {
    if (k < 0.0) throw IndexOutOfRange("step must be nonnegative");
    const SpectralData s = spectral_decompose(cfg);
    const double ratio = std::sin(k * s.delta) / s.sin_delta;
    const double beta_norm = 2.0 * cfg.p * std::abs(std::cos(cfg.phi));
    ClosedAmplitude out;
    out.r = ratio * std::polar(1.0, (k - 1.0) * s.sum_phase);
    out.b_norm = beta_norm * std::abs(ratio);
    return out;
}

double grover_amplitude(double p, double k) {
    if (!(p > 0.0) || !(p < 1.0)) {
        throw InvalidOverlap("p must lie in (0, 1)");
    }
    const double root = std::sqrt(1.0 - p * p);
    const double delta = clamped_asin(2.0 * p * root);
    return std::abs(std::sin(k * delta)) / root;
}

double identical_angle_amplitude(double phi, double p, double k) {
    if (!(p > 0.0) || !(p < 1.0)) {
        throw InvalidOverlap("p must lie in (0, 1)");
    }
    const double c = std::abs(std::cos(phi));
    if (c < kDegenerateCosPhi) {
        throw DegeneratePhase("cos(phi) vanishes");
    }
    const double root = std::sqrt(1.0 - p * p * c * c);
    const double delta = clamped_asin(2.0 * p * c * root);
    return std::abs(std::sin(k * delta)) / root;
}

}  // namespace amplikit
