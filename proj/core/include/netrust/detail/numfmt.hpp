#pragma once

#include <charconv>
#include <cstdio>
#include <string>

namespace netrust::detail {

/// Shortest round-trip decimal representation of a double.
inline std::string format_double(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, ptr);
}

/// Fixed display precision (3 decimals) for text reports.
inline std::string format_fixed3(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", v);
    return buf;
}

/// Percentages at Table-style precision (1 decimal).
inline std::string format_percent1(double frac) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.1f%%", frac * 100.0);
    return buf;
}

}  // namespace netrust::detail
