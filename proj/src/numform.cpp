#include "amplikit/numform.hpp"

#include <cmath>
#include <cstdio>

namespace amplikit {

std::string format_real(double x) {
    char buf[48];
    if (x == 0.0) return "0";
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    const double mag = std::abs(x);
    if (mag < 1e-4 || mag >= 1e6) {
        std::snprintf(buf, sizeof(buf), "%.11e", x);
        return buf;
    }
    const int exponent = static_cast<int>(std::floor(std::log10(mag)));
    const int decimals = 11 - exponent;
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, x);
    return buf;
}

std::string format_bool(bool b) { return b ? "true" : "false"; }

}  // namespace amplikit
