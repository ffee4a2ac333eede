#pragma once

#include "amplikit/core.hpp"

namespace amplikit {

/// Entries of M for Q = -I_gamma U^-1 I_tau U in the exponential form
///   alpha = e^{i2theta} - (e^{i2theta}+1)(e^{i2phi}+1) p^2
///   beta  = (e^{i2phi}+1) U_tg
///   lambda= -e^{i2phi} (e^{i2theta}+1) conj(U_tg)
///   delta = e^{i2phi}
/// In debug builds the trigonometric entry form is evaluated too and the
/// two are asserted equal to 1e-14.
IterationMatrix build_iteration_matrix(const PhaseConfig& cfg);

/// Same matrix through the 2cos(x)e^{ix} entry form; algebraically
/// identical since 2cos(x)e^{ix} = e^{i2x} + 1.
IterationMatrix build_iteration_matrix_trig(const PhaseConfig& cfg);

/// trace(M) = 2(cos(theta-phi) - 2 p^2 cos(theta) cos(phi)) e^{i(theta+phi)}.
Complex trace_closed_form(const PhaseConfig& cfg);

/// True iff |cos(theta-phi) - 2 p^2 cos(theta) cos(phi)| <= 1. The bound is
/// strict whenever cos(theta)cos(phi) is nonzero, and that strictness is
/// checked here as well (numeric threshold 1e-12 on |cos(theta)cos(phi)|).
bool trace_magnitude_bound_check(const PhaseConfig& cfg);

}  // namespace amplikit
