#pragma once

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace amplikit {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

// |cos phi| below this is treated as a vanishing beta: the sine-form
// denominator is no longer trustworthy and spectral operations refuse.
inline constexpr double kDegenerateCosPhi = 1e-12;

// arcsin/arccos arguments may land this far outside [-1, 1] from rounding
// and are clamped; anything farther out raises NumericalDomain.
inline constexpr double kClampSlack = 1e-12;

struct MalformedAngle : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct MalformedInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct InvalidOverlap : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct DegeneratePhase : std::domain_error {
    using std::domain_error::domain_error;
};
struct ConditionUnsatisfied : std::domain_error {
    using std::domain_error::domain_error;
};
struct NumericalDomain : std::domain_error {
    using std::domain_error::domain_error;
};
struct HypothesisViolated : std::domain_error {
    using std::domain_error::domain_error;
};
struct IndexOutOfRange : std::out_of_range {
    using std::out_of_range::out_of_range;
};
struct StepTooLarge : std::out_of_range {
    using std::out_of_range::out_of_range;
};
struct SingularGram : std::domain_error {
    using std::domain_error::domain_error;
};

/// Problem parameters of the generalized search: rotation angles of the
/// initial-state and desired-state phase operators plus the overlap
/// U_tg = <tau|U|gamma> of the driving unitary.
struct PhaseConfig {
    double theta = 0.0;
    double phi = 0.0;
    Complex u_tau_gamma{};
    double p = 0.0;           // |u_tau_gamma|, in (0, 1)
    bool degenerate = false;  // |cos phi| < kDegenerateCosPhi
};

/// Validates 0 < |u_tau_gamma| < 1 and fills the derived fields.
/// Angles are taken as given; nothing is normalized to [0, 2pi).
PhaseConfig make_config(double theta, double phi, Complex u_tau_gamma);

/// The 2x2 matrix of Q on the invariant plane spanned by |gamma> and
/// U^-1|tau>, stored entry by entry.
struct IterationMatrix {
    Complex alpha{};
    Complex beta{};
    Complex lambda{};
    Complex delta{};
    double sum_phase = 0.0;  // theta + phi

    Complex trace() const { return alpha + delta; }
    Complex determinant() const { return alpha * delta - beta * lambda; }
};

/// Amplitudes (a_k, b_k) of Q^k|gamma> on |gamma> and U^-1|tau>.
struct AmplitudePair {
    Complex a{1.0, 0.0};
    Complex b{0.0, 0.0};
    int k = 0;
};

struct TraceSample {
    int k = 0;
    AmplitudePair recurrence;                 // 2x2 coupled recurrence
    std::optional<AmplitudePair> extracted;   // state-vector projection
    std::optional<double> b_closed;           // sine-form |b_k|
    std::optional<double> b_poly;             // polynomial-form |b_k|, k <= 40
    double residual = 0.0;                    // max cross-method disagreement
};

struct AmplitudeTrace {
    std::vector<TraceSample> samples;  // k strictly increasing
};

/// Parses "0.75", "pi", "-pi/6", "2pi/3", "0.5pi" into radians.
/// Throws MalformedAngle on anything else.
double parse_angle(const std::string& text);

/// Shortest decimal form that parse_angle round-trips exactly.
std::string format_angle(double radians);

}  // namespace amplikit
