#include "amplikit/core.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace amplikit {

PhaseConfig make_config(double theta, double phi, Complex u_tau_gamma) {
    const double p = std::abs(u_tau_gamma);
    if (!(p > 0.0) || !(p < 1.0)) {
        throw InvalidOverlap("overlap modulus must lie in (0, 1), got " +
                             std::to_string(p));
    }
    PhaseConfig cfg;
    cfg.theta = theta;
    cfg.phi = phi;
    cfg.u_tau_gamma = u_tau_gamma;
    cfg.p = p;
    cfg.degenerate = std::abs(std::cos(phi)) < kDegenerateCosPhi;
    return cfg;
}

namespace {

// Strict full-string double parse.
bool parse_number(const std::string& s, double& out) {
    if (s.empty()) return false;
    const char* begin = s.c_str();
    char* end = nullptr;
    out = std::strtod(begin, &end);
    return end == begin + s.size();
}

std::string trimmed(const std::string& text) {
    std::size_t a = 0;
    std::size_t b = text.size();
    while (a < b && std::isspace(static_cast<unsigned char>(text[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(text[b - 1]))) --b;
    return text.substr(a, b - a);
}

}  // namespace

double parse_angle(const std::string& text) {
    const std::string s = trimmed(text);
    if (s.empty()) throw MalformedAngle("empty angle");

    const std::size_t at = s.find("pi");
    if (at == std::string::npos) {
        double value = 0.0;
        if (!parse_number(s, value)) {
            throw MalformedAngle("cannot parse angle '" + text + "'");
        }
        return value;
    }

    double coefficient = 1.0;
    const std::string head = s.substr(0, at);
    if (head == "-") {
        coefficient = -1.0;
    } else if (!head.empty() && head != "+") {
        if (!parse_number(head, coefficient)) {
            throw MalformedAngle("bad multiplier in angle '" + text + "'");
        }
    }

    double divisor = 1.0;
    const std::string tail = s.substr(at + 2);
    if (!tail.empty()) {
        if (tail[0] != '/' || tail.size() < 2) {
            throw MalformedAngle("bad divisor in angle '" + text + "'");
        }
        if (!parse_number(tail.substr(1), divisor) || divisor == 0.0) {
            throw MalformedAngle("bad divisor in angle '" + text + "'");
        }
    }
    return coefficient * kPi / divisor;
}

std::string format_angle(double radians) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", radians);
    return buf;
}

}  // namespace amplikit
