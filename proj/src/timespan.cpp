#include "obsharm/timespan.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>

#include "obsharm/detail/text.hpp"
#include "obsharm/error.hpp"

namespace obsharm {

namespace {

struct Unit {
    std::string_view name;
    int multiplier;     // seconds per unit, or 1 for milliseconds
    int exponent_shift; // -3 for milliseconds
};

constexpr std::array<Unit, 17> kUnits{{
    {"ms", 1, -3},       {"msec", 1, -3},   {"millisecond", 1, -3}, {"milliseconds", 1, -3},
    {"s", 1, 0},         {"sec", 1, 0},     {"secs", 1, 0},         {"second", 1, 0},
    {"seconds", 1, 0},   {"min", 60, 0},    {"mins", 60, 0},        {"minute", 60, 0},
    {"minutes", 60, 0},  {"h", 3600, 0},    {"hr", 3600, 0},        {"hour", 3600, 0},
    {"hours", 3600, 0},
}};

// Decimal digits times a small integer, exactly.
std::string multiply(const std::string& digits, int factor) {
    std::string out(digits.size(), '0');
    long carry = 0;
    for (std::size_t i = digits.size(); i-- > 0;) {
        long v = (digits[i] - '0') * static_cast<long>(factor) + carry;
        out[i] = static_cast<char>('0' + v % 10);
        carry = v / 10;
    }
    while (carry > 0) {
        out.insert(out.begin(), static_cast<char>('0' + carry % 10));
        carry /= 10;
    }
    return out;
}

} // namespace

DurationValue parse_duration(std::string_view text) {
    auto s = detail::trim(text);
    const std::size_t base = static_cast<std::size_t>(s.data() - text.data());
    if (s.empty()) throw ParseError(0, "empty duration");
    if (detail::iequals(s, "unknown")) return UnknownDuration{};

    std::size_t i = 0;
    if (s[i] == '-') throw ParseError(base, "duration must not be negative");
    if (s[i] == '+') ++i;

    // significand digits and decimal exponent of the written number
    std::string digits;
    int exponent = 0;
    bool any_digit = false;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        digits += s[i++];
        any_digit = true;
    }
    if (i < s.size() && s[i] == '.') {
        ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            digits += s[i++];
            --exponent;
            any_digit = true;
        }
    }
    if (!any_digit) throw ParseError(base, "duration must start with a number");
    if (i < s.size() && (s[i] == 'e' || s[i] == 'E') && i + 1 < s.size() &&
        (std::isdigit(static_cast<unsigned char>(s[i + 1])) || s[i + 1] == '-' || s[i + 1] == '+')) {
        int e = 0;
        const char* first = s.data() + i + 1;
        if (*first == '+') ++first;
        auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), e);
        if (ec != std::errc{}) throw ParseError(base + i, "malformed exponent");
        exponent += e;
        i = static_cast<std::size_t>(ptr - s.data());
    }

    const std::size_t unit_at = i;
    auto unit = detail::to_lower(detail::trim(s.substr(i)));
    if (unit.empty()) throw ParseError(base + unit_at, "duration needs a unit");
    const Unit* match = nullptr;
    for (const auto& u : kUnits)
        if (u.name == unit) match = &u;
    if (!match) throw ParseError(base + unit_at, "unrecognized duration unit '" + unit + "'");

    const std::string scaled = multiply(digits, match->multiplier);
    const std::string decimal = scaled + "e" + std::to_string(exponent + match->exponent_shift);
    double seconds = 0;
    auto [ptr, ec] = std::from_chars(decimal.data(), decimal.data() + decimal.size(), seconds);
    if (ec != std::errc{} || !std::isfinite(seconds)) throw ParseError(base, "duration out of range");
    return Seconds{seconds};
}

std::string format_duration(const DurationValue& d) {
    if (std::holds_alternative<UnknownDuration>(d)) return "unknown";
    std::array<char, 64> buf{};
    std::snprintf(buf.data(), buf.size(), "%.3f", std::get<Seconds>(d).value);
    std::string out(buf.data());
    while (out.back() == '0') out.pop_back();
    if (out.back() == '.') out.pop_back();
    if (out == "-0") out = "0";
    return out + " s";
}

} // namespace obsharm
