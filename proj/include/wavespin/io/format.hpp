#pragma once

#include <cmath>
#include <cstdio>
#include <string>

namespace wavespin {

// Lowercase scientific with 12 significant digits, locale independent.
// The fixed precision makes emitted files byte-stable and the 12-digit
// round-trip idempotent (parse then re-format reproduces the same bytes).
inline std::string format_sci(double v) {
    if (std::isnan(v)) return "nan";
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.11e", v);
    return buf;
}

inline std::string format_int(long long v) { return std::to_string(v); }

} // namespace wavespin
