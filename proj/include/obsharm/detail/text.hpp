#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

// Small string helpers shared by the parsers.
namespace obsharm::detail {

std::string_view trim(std::string_view s) noexcept;
std::string to_lower(std::string_view s);

/// Lowercase, trim and collapse runs of whitespace into one space.
std::string normalize_key(std::string_view s);

std::vector<std::string_view> split(std::string_view s, char sep);

/// Parses the whole of `s` (after trimming) as a finite double.
std::optional<double> parse_number(std::string_view s);

/// Shortest decimal text that round-trips to `v`.
std::string format_number(double v);

bool iequals(std::string_view a, std::string_view b) noexcept;
bool starts_with_icase(std::string_view s, std::string_view prefix) noexcept;

} // namespace obsharm::detail
