#pragma once

#include <array>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <string_view>

#include "errors.hpp"

// Unit-suffixed value parsing and number formatting. All quantities are kept
// in SI base units internally (Hz, seconds, bits/s); suffixes exist only at
// the text boundary. A nonzero magnitude without a suffix is rejected so that
// "2" can never silently mean 2 Hz where 2 GHz was intended.

namespace uwbcap::units {

namespace detail {

struct unit_entry {
    const char* suffix;
    double scale;
};

inline std::string to_lower(std::string_view s) {
    std::string out(s);
    for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

template <std::size_t N>
double parse_suffixed(std::string_view text, const std::array<unit_entry, N>& table,
                      const char* quantity, const char* example) {
    const std::string buf{trim(text)};
    if (buf.empty()) throw parse_error(std::string("empty ") + quantity + " value");
    if (buf.size() > 1 && buf[0] == '0' && (buf[1] == 'x' || buf[1] == 'X'))
        throw parse_error("'" + buf + "': hexadecimal numbers are not accepted");
    char* end = nullptr;
    const double value = std::strtod(buf.c_str(), &end);
    if (end == buf.c_str())
        throw parse_error("'" + buf + "': cannot parse a " + quantity + " value");
    const std::string suffix = to_lower(trim(std::string_view(end)));
    if (suffix.empty()) {
        if (value == 0.0) return 0.0;
        throw parse_error("'" + buf + "': explicit " + quantity + " unit suffix required (e.g. " +
                          example + ")");
    }
    for (const auto& u : table)
        if (suffix == u.suffix) return value * u.scale;
    throw parse_error("'" + buf + "': unknown " + quantity + " unit '" + suffix + "'");
}

}  // namespace detail

/// "2GHz", "500MHz", "2GSPS", "0" -> Hz.
inline double parse_frequency(std::string_view text) {
    static constexpr std::array<detail::unit_entry, 9> table{{
        {"hz", 1.0}, {"khz", 1e3}, {"mhz", 1e6}, {"ghz", 1e9}, {"thz", 1e12},
        {"sps", 1.0}, {"ksps", 1e3}, {"msps", 1e6}, {"gsps", 1e9},
    }};
    return detail::parse_suffixed(text, table, "frequency", "2GHz, 500MHz, 10GSPS");
}

/// "17ns", "92ps", "0" -> seconds.
inline double parse_time(std::string_view text) {
    static constexpr std::array<detail::unit_entry, 5> table{{
        {"s", 1.0}, {"ms", 1e-3}, {"us", 1e-6}, {"ns", 1e-9}, {"ps", 1e-12},
    }};
    return detail::parse_suffixed(text, table, "time", "17ns, 92ps");
}

/// "52.63Mbps", "1Gbps", "0" -> bits/s.
inline double parse_rate(std::string_view text) {
    static constexpr std::array<detail::unit_entry, 4> table{{
        {"bps", 1.0}, {"kbps", 1e3}, {"mbps", 1e6}, {"gbps", 1e9},
    }};
    return detail::parse_suffixed(text, table, "rate", "90Mbps, 1Gbps");
}

/// Fixed-point with the requested number of decimals.
inline std::string format_fixed(double value, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, value);
    return buf;
}

/// Compact general format, enough digits for display of times and ratios.
inline std::string format_compact(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

/// Shortest decimal string, in the unit defined by load_scale, that converts
/// back to exactly `value_si` under `parsed * load_scale`. Keeps delimited
/// files human-friendly ("92", not "91.99999999999999") without losing the
/// load/save round trip.
inline std::string format_si_roundtrip(double value_si, double load_scale) {
    const double in_unit = value_si / load_scale;
    char buf[64];
    for (int digits = 1; digits <= 17; ++digits) {
        std::snprintf(buf, sizeof(buf), "%.*g", digits, in_unit);
        if (std::strtod(buf, nullptr) * load_scale == value_si) return buf;
    }
    std::snprintf(buf, sizeof(buf), "%.17g", in_unit);
    return buf;
}

}  // namespace uwbcap::units
