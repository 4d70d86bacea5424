#pragma once

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace sotmem {

// Binary mega throughout: 1 MB = 2^20 bytes.
inline constexpr double kBytesPerMb = 1048576.0;

inline constexpr double bytes_to_mb(double bytes) { return bytes / kBytesPerMb; }
inline constexpr double mb_to_bytes(double mb) { return mb * kBytesPerMb; }

/// Invalid configuration, parameter set, or input file.
class config_error : public std::runtime_error {
public:
    explicit config_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A named model/technology/file could not be resolved.
class lookup_error : public std::runtime_error {
public:
    explicit lookup_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Shortest round-trippable decimal representation; stable across runs so
/// emitted tables are byte-identical for identical inputs.
inline std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    char buf[64];
    for (int prec = 1; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
        if (std::strtod(buf, nullptr) == v) break;
    }
    return buf;
}

} // namespace sotmem
