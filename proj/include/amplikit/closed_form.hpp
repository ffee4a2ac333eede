#pragma once

#include <utility>

#include "amplikit/core.hpp"

namespace amplikit {

/// Unit-circle eigenphase data of the iteration matrix.
/// psi_{1,2} = (theta+phi) +- delta with delta in (0, pi/2], the principal
/// half-gap: sin(delta) = sqrt(1 - t^2) for the trace term
/// t = cos(theta-phi) - 2 p^2 cos(theta) cos(phi). |sin(k delta)| at integer
/// k does not depend on which of the two conjugate half-gap branches t's
/// sign selects, so every norm formula downstream is branch-free.
struct SpectralData {
    double psi1 = 0.0;
    double psi2 = 0.0;
    double delta = 0.0;      // (psi1 - psi2) / 2
    double sin_delta = 0.0;  // in (0, 1]
    double sum_phase = 0.0;  // theta + phi
};

/// Throws DegeneratePhase when cos(phi) vanishes (the roots may coincide
/// and the sine form has no denominator).
SpectralData spectral_decompose(const PhaseConfig& cfg);

/// Roots of z^2 - (alpha+delta) z + (alpha delta - beta lambda) = 0,
/// solved directly in complex arithmetic. Serves as the numeric
/// eigendecomposition cross-check for the trigonometric path.
std::pair<Complex, Complex> characteristic_roots(const IterationMatrix& m);

struct ClosedAmplitude {
    Complex r{};          // sin(k delta)/sin(delta) e^{i(k-1)(theta+phi)}
    double b_norm = 0.0;  // |beta| |sin(k delta)| / sin(delta)
};

/// Sine-form amplitude at real-valued step k >= 0. Real k is allowed
/// because the optimal step count is generally not an integer.
ClosedAmplitude amplitude_closed(const PhaseConfig& cfg, double k);

/// |b_k| for theta = phi = 0:  |sin(k arcsin(2p sqrt(1-p^2)))| / sqrt(1-p^2).
double grover_amplitude(double p, double k);

/// |b_k| for theta = phi:
///   |sin(k arcsin(2p|cos phi| sqrt(1-p^2 cos^2 phi)))| / sqrt(1-p^2 cos^2 phi).
double identical_angle_amplitude(double phi, double p, double k);

}  // namespace amplikit
