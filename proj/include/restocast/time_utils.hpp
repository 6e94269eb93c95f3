#pragma once

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>

#include "restocast/errors.hpp"

namespace restocast {

/// All timestamps are civil (no timezone), second resolution.
using Timestamp = std::chrono::sys_seconds;

inline constexpr std::int64_t kSecondsPerHour = 3600;

inline std::int64_t to_epoch_seconds(Timestamp ts) {
    return ts.time_since_epoch().count();
}

inline Timestamp from_epoch_seconds(std::int64_t sec) {
    return Timestamp{std::chrono::seconds{sec}};
}

/// Parse "YYYY-MM-DDTHH:MM:SS" (a single space is accepted in place of 'T').
inline Timestamp parse_timestamp(std::string_view text) {
    int y = 0, mo = 0, d = 0, h = 0, mi = 0, s = 0;
    char sep = 0;
    const std::string buf(text);
    const int got = std::sscanf(buf.c_str(), "%4d-%2d-%2d%c%2d:%2d:%2d",
                                &y, &mo, &d, &sep, &h, &mi, &s);
    if (got != 7 || (sep != 'T' && sep != ' '))
        throw ValidationError("invalid timestamp '" + buf + "': expected YYYY-MM-DDTHH:MM:SS");

    const std::chrono::year_month_day ymd{std::chrono::year{y},
                                          std::chrono::month{static_cast<unsigned>(mo)},
                                          std::chrono::day{static_cast<unsigned>(d)}};
    if (!ymd.ok() || h < 0 || h > 23 || mi < 0 || mi > 59 || s < 0 || s > 60)
        throw ValidationError("invalid timestamp '" + buf + "': out-of-range field");

    const auto days = std::chrono::sys_days{ymd};
    return Timestamp{days.time_since_epoch() + std::chrono::hours{h} +
                     std::chrono::minutes{mi} + std::chrono::seconds{s}};
}

/// Canonical "YYYY-MM-DDTHH:MM:SS".
inline std::string format_timestamp(Timestamp ts) {
    const auto days = std::chrono::floor<std::chrono::days>(ts);
    const std::chrono::year_month_day ymd{days};
    const std::chrono::hh_mm_ss hms{ts - days};
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%04d-%02u-%02uT%02lld:%02lld:%02lld",
                  static_cast<int>(ymd.year()),
                  static_cast<unsigned>(ymd.month()),
                  static_cast<unsigned>(ymd.day()),
                  static_cast<long long>(hms.hours().count()),
                  static_cast<long long>(hms.minutes().count()),
                  static_cast<long long>(hms.seconds().count()));
    return buf;
}

/// Nearest hour boundary; exact half hours round up.
inline Timestamp round_to_hour(Timestamp ts) {
    const std::int64_t sec = to_epoch_seconds(ts) + kSecondsPerHour / 2;
    std::int64_t q = sec / kSecondsPerHour;
    if (sec % kSecondsPerHour < 0) --q; // floor division for pre-epoch times
    return from_epoch_seconds(q * kSecondsPerHour);
}

inline bool is_hour_aligned(Timestamp ts) {
    return to_epoch_seconds(ts) % kSecondsPerHour == 0;
}

/// Signed whole hours from `a` to `b`; both must be hour-aligned.
inline std::int64_t whole_hours_between(Timestamp a, Timestamp b) {
    return (to_epoch_seconds(b) - to_epoch_seconds(a)) / kSecondsPerHour;
}

inline Timestamp add_hours(Timestamp ts, std::int64_t hours) {
    return from_epoch_seconds(to_epoch_seconds(ts) + hours * kSecondsPerHour);
}

} // namespace restocast
