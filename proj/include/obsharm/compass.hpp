#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "obsharm/outcome.hpp"
#include "obsharm/rulekit.hpp"

namespace obsharm {

/// An angle in decimal degrees, normalized to [0, 360).
class AngleDeg {
public:
    /// Throws DomainError for non-finite input.
    explicit AngleDeg(double degrees);

    double value() const noexcept { return value_; }

    friend auto operator<=>(const AngleDeg&, const AngleDeg&) = default;

private:
    double value_;
};

class Sector;

/// Compass granularity: 4, 8 or 16 sectors.
class CompassRose {
public:
    /// Throws GranularityError for any other count.
    explicit CompassRose(int sector_count);

    int count() const noexcept { return count_; }
    double sector_width() const noexcept { return 360.0 / count_; }
    std::vector<Sector> sectors() const;

    friend auto operator<=>(const CompassRose&, const CompassRose&) = default;

private:
    int count_;
};

/// A named wind sector within a rose. `index` counts clockwise from north.
class Sector {
public:
    Sector(CompassRose rose, int index);

    /// Abbreviation such as "NNE" (case-insensitive). Throws ParseError if the
    /// name does not exist in the given rose.
    static Sector from_abbreviation(std::string_view abbreviation, CompassRose rose);

    const CompassRose& rose() const noexcept { return rose_; }
    int index() const noexcept { return index_; }
    AngleDeg center() const noexcept { return AngleDeg(index_ * rose_.sector_width()); }

    /// "NNE"
    std::string_view abbreviation() const noexcept;
    /// "north-northeast"
    std::string_view name() const noexcept;

    /// The same direction expressed in a finer (or equal) rose.
    Sector promoted(CompassRose finer) const;

    friend auto operator<=>(const Sector&, const Sector&) = default;

private:
    CompassRose rose_;
    int index_;
};

/// Coarsest rose in which the abbreviation names a sector (4 for "N", 16 for "NNE").
CompassRose minimal_rose(std::string_view abbreviation);

struct SectorSpan {
    Sector from;
    Sector to;

    /// Throws GranularityError if the endpoints come from different roses.
    SectorSpan(Sector from_sector, Sector to_sector);

    bool operator==(const SectorSpan&) const = default;
};

/// Span between two exact bearings.
struct BearingSpan {
    AngleDeg from;
    AngleDeg to;

    bool operator==(const BearingSpan&) const = default;
};

enum class VerticalTerm { None, Up, Down };
enum class LateralTerm { None, Left, Right };
enum class DepthTerm { None, Forward, Backward };

/// Body-relative direction: one term, or a two-term composite from
/// different axes ("top-left", "forward-right").
struct RelativeDirection {
    VerticalTerm vertical = VerticalTerm::None;
    LateralTerm lateral = LateralTerm::None;
    DepthTerm depth = DepthTerm::None;

    bool has_vertical() const noexcept { return vertical != VerticalTerm::None; }
    std::string name() const;

    /// Throws std::invalid_argument unless one or two terms are set.
    void validate() const;

    bool operator==(const RelativeDirection&) const = default;
};

struct RelativeSpan {
    RelativeDirection from;
    RelativeDirection to;

    bool operator==(const RelativeSpan&) const = default;
};

using Direction = std::variant<AngleDeg, Sector, SectorSpan, BearingSpan, RelativeDirection, RelativeSpan>;

/// Circular interval running clockwise from `start` to `end`.
/// A closed arc with start == end is a single bearing.
struct Arc {
    double start = 0;
    double end = 0;
    bool start_open = false;
    bool end_open = false;

    /// Linear pieces inside [0, 360); a wrapping arc yields two.
    std::vector<rulekit::Interval> pieces() const;
    bool contains(AngleDeg a) const;
    /// Clockwise extent in degrees.
    double width() const noexcept;

    bool operator==(const Arc&) const = default;
};

bool intersects(const Arc& a, const Arc& b);
std::string to_string(const Arc& a);

/// Parses an angle ("57°", "112.5"), a wind name at any granularity
/// ("north", "east-northeast", "NNE", "northeast[16]"), a body-relative
/// direction ("top-left") or an "A to B" span of any of these.
/// Case-insensitive. Throws ParseError.
Direction parse_direction(std::string_view text);

/// Canonical text: "57°", "east-northeast[16]", "east[8] to southeast[8]".
std::string format_direction(const Direction& d);
std::string format_angle(AngleDeg a);
std::string format_sector(const Sector& s);

/// The unique sector whose half-open interval contains `a`.
Sector sector_of_angle(AngleDeg a, CompassRose rose);

/// `[center - w/2, center + w/2)`, wrapping through north where needed.
Arc interval_of_sector(const Sector& s);

/// Every sector of the coarser `target` rose overlapping `s`, ascending by index.
/// Throws GranularityError unless target is strictly coarser than s.rose().
std::vector<Sector> coarsen(const Sector& s, CompassRose target);

/// Clockwise offset of a horizontal relative direction from the facing
/// bearing. Throws UnmappableError for directions with a vertical term.
double relative_offset(const RelativeDirection& r);

/// Exact when facing a bearing.
MappingOutcome<AngleDeg> relative_to_cardinal(const RelativeDirection& r, AngleDeg facing);
/// Widened: every sector covered by the offset facing interval.
MappingOutcome<std::vector<Sector>> relative_to_cardinal(const RelativeDirection& r, const Sector& facing);
/// Exact span of bearings. Throws UnmappableError if either end has a vertical term.
MappingOutcome<BearingSpan> relative_to_cardinal(const RelativeSpan& r, AngleDeg facing);
/// Widened sector span, or Unmapped when an endpoint covers more than one sector.
MappingOutcome<SectorSpan> relative_to_cardinal(const RelativeSpan& r, const Sector& facing);

/// Circular midpoint of the two sector centers along the shorter arc.
/// Throws AmbiguousSpanError for antipodal centers.
AngleDeg span_midpoint(const SectorSpan& span);
AngleDeg span_midpoint(const BearingSpan& span);

/// Closed arc between the two bearings along the shorter way round.
/// Throws AmbiguousSpanError for antipodal bearings.
Arc shorter_arc(AngleDeg from, AngleDeg to);

} // namespace obsharm
