#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace obsharm {

/// How much information a conversion kept.
///
/// The enumerators are ordered from most to least faithful, so `worst(a, b)`
/// is simply the larger of the two.
enum class Lossiness {
    Exact,    ///< invertible
    Widened,  ///< precision reduced to an interval or a set of sectors
    Lossy,    ///< information discarded
    Unmapped  ///< no sound canonical form
};

std::string_view to_string(Lossiness l) noexcept;
Lossiness lossiness_from_string(std::string_view s);

inline Lossiness worst(Lossiness a, Lossiness b) noexcept { return a < b ? b : a; }

/// Where a value came from.
struct Provenance {
    std::string source_id;
    std::string raw;

    bool operator==(const Provenance&) const = default;
};

/// A converted value plus its lossiness grade and provenance.
/// `value` is empty only when `lossiness == Lossiness::Unmapped`.
template <typename T>
struct MappingOutcome {
    std::optional<T> value;
    Lossiness lossiness = Lossiness::Unmapped;
    Provenance provenance;

    static MappingOutcome unmapped(Provenance p = {}) { return {std::nullopt, Lossiness::Unmapped, std::move(p)}; }
};

} // namespace obsharm
