#pragma once

#include <string>

namespace amplikit {

/// 12 significant digits; lowercase scientific when |x| < 1e-4 or >= 1e6.
/// Byte-stable across runs, so CSV output diffs cleanly.
std::string format_real(double x);

std::string format_bool(bool b);

}  // namespace amplikit
