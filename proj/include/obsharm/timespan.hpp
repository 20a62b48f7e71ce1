#pragma once

#include <string>
#include <string_view>
#include <variant>

namespace obsharm {

struct UnknownDuration {
    bool operator==(const UnknownDuration&) const = default;
};

/// Non-negative, finite duration in seconds.
struct Seconds {
    double value = 0;
    bool operator==(const Seconds&) const = default;
};

using DurationValue = std::variant<Seconds, UnknownDuration>;

/// `<number> <unit>` with unit ms/millisecond(s), s/sec/second(s),
/// min/minute(s) or h/hr/hour(s); or the literal "unknown". The result is the
/// double nearest to the exact decimal product, so "0.033 minute" is exactly
/// the double 1.98. Throws ParseError.
DurationValue parse_duration(std::string_view text);

/// "1.98 s" (at most three decimals) or "unknown".
std::string format_duration(const DurationValue& d);

} // namespace obsharm
