#pragma once

#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "obsharm/colors.hpp"
#include "obsharm/compass.hpp"
#include "obsharm/geoloc.hpp"
#include "obsharm/scales.hpp"
#include "obsharm/timespan.hpp"

namespace obsharm {

/// A value whose meaning is explicitly unknown in the source ("unknown").
struct Unknown {
    bool operator==(const Unknown&) const = default;
};

/// Sectors covered after widening, ascending by index.
struct SectorSet {
    std::vector<Sector> sectors;
    bool operator==(const SectorSet&) const = default;
};

/// Every harmonized value kind.
using CanonicalValue = std::variant<Unknown, AngleDeg, Sector, SectorSpan, BearingSpan, SectorSet, RelativeDirection,
                                    RelativeSpan, ColorValue, ColorSequence, ScaleValue, GeoPoint, Seconds>;

CanonicalValue to_canonical(const Direction& d);
CanonicalValue to_canonical(const ParsedColor& c);
CanonicalValue to_canonical(const DurationValue& d);

/// Short kind tag: "angle", "sector", "color", "scale_level", ...
std::string_view kind_of(const CanonicalValue& v);

/// Human-readable canonical text.
std::string format_canonical(const CanonicalValue& v);

nlohmann::json to_json(const CanonicalValue& v);
nlohmann::json to_json(const Direction& d);
nlohmann::json to_json(const ParsedColor& c);
nlohmann::json to_json(const LocationValue& v);
nlohmann::json to_json(const DurationValue& d);
nlohmann::json to_json(const ScaleValue& v);
nlohmann::json to_json(const Sector& s);
nlohmann::json to_json(const rulekit::PartitionReport& r);

} // namespace obsharm
