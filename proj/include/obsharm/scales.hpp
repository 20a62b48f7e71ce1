#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "obsharm/outcome.hpp"
#include "obsharm/rulekit.hpp"

namespace obsharm {

/// Numeric scale with equal spacing, e.g. experience rated 1 to 10.
struct IntervalScale {
    double min = 0;
    double max = 1;
    bool integer_only = false;

    /// Throws std::invalid_argument unless min < max.
    void validate() const;

    bool operator==(const IntervalScale&) const = default;
};

/// Ordered labels without metric spacing, e.g. beginner < intermediate < expert.
struct OrdinalScale {
    std::vector<std::string> labels;

    /// Throws std::invalid_argument for fewer than two labels, empty or duplicate labels.
    void validate() const;
    std::size_t size() const noexcept { return labels.size(); }
    /// Case-insensitive label lookup; returns size() when absent.
    std::size_t index_of(std::string_view label) const noexcept;

    bool operator==(const OrdinalScale&) const = default;
};

using Scale = std::variant<IntervalScale, OrdinalScale>;

/// A reading on an interval or ordinal scale.
class ScaleValue {
public:
    /// Throws std::invalid_argument if the value lies outside the scale or,
    /// for integer-only scales, is not an integer.
    static ScaleValue interval(IntervalScale scale, double value);
    /// Throws std::invalid_argument if the label is not on the scale.
    static ScaleValue ordinal(OrdinalScale scale, std::string_view label);
    static ScaleValue ordinal(OrdinalScale scale, std::size_t index);

    const Scale& scale() const noexcept { return scale_; }
    bool is_interval() const noexcept { return std::holds_alternative<IntervalScale>(scale_); }
    bool is_ordinal() const noexcept { return !is_interval(); }

    /// Numeric value; only for interval scales.
    double number() const;
    /// Label index; only for ordinal scales.
    std::size_t rank() const;
    /// Label text; only for ordinal scales.
    const std::string& label() const;

    /// Normalized position in [0, 1] (rank / (k - 1) for ordinal values).
    double position() const;

    bool operator==(const ScaleValue&) const = default;

private:
    ScaleValue(Scale scale, double number, std::size_t rank) : scale_(std::move(scale)), number_(number), rank_(rank) {}

    Scale scale_;
    double number_ = 0;
    std::size_t rank_ = 0;
};

struct ConvertOptions {
    /// Allow ordinal to interval conversion by returning the bin midpoint.
    bool midpoint_mode = false;
};

/// Order-preserving conversion between scales.
///
/// interval -> interval is affine (Exact, or Lossy when rounding onto an
/// integer-only target moves the value). interval -> ordinal bins the
/// normalized position p into k equal-width bins, index min(floor(p k), k-1),
/// always Lossy. ordinal -> ordinal bins rank / (k - 1) the same way.
/// ordinal -> interval throws ReverseMappingError unless midpoint mode is on.
MappingOutcome<ScaleValue> convert(const ScaleValue& v, const Scale& target, ConvertOptions options = {});

/// Portion of the normalized [0, 1] axis a value stands for: a point for
/// continuous interval values, a half-unit rounding cell for integer-only
/// values, and the equal-width bin for ordinal labels (last bin closed).
rulekit::Interval normalized_region(const ScaleValue& v);

/// Descriptor text: `interval(1, 10, integer)`, `interval(0, 1)`,
/// `ordinal(beginner < intermediate < expert)`. Throws ParseError.
Scale parse_scale(std::string_view descriptor);
std::string format_scale(const Scale& s);

/// Reads a raw cell on the given scale: a number for interval scales, a
/// label for ordinal scales. Throws ParseError.
ScaleValue parse_scale_value(std::string_view text, const Scale& scale);
std::string format_scale_value(const ScaleValue& v);

} // namespace obsharm
