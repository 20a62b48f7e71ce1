#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "obsharm/outcome.hpp"

namespace obsharm {

/// Coordinate frame a latitude/longitude pair is expressed in. Only
/// geographic points are ever resolved; the others are carried as tags.
enum class Frame { Geographic, Ecliptic, Galactic, Supergalactic, Equatorial };

std::string_view to_string(Frame f) noexcept;

/// Latitude in [-90, 90], longitude in (-180, 180].
class GeoPoint {
public:
    /// Accepts longitudes in [-180, 360) and folds them into (-180, 180].
    /// Throws std::out_of_range otherwise.
    GeoPoint(double lat, double lon, Frame frame = Frame::Geographic);

    double lat() const noexcept { return lat_; }
    double lon() const noexcept { return lon_; }
    Frame frame() const noexcept { return frame_; }

    bool operator==(const GeoPoint&) const = default;

private:
    double lat_;
    double lon_;
    Frame frame_;
};

struct PlaceName {
    std::string name;
    bool operator==(const PlaceName&) const = default;
};

struct PostalCode {
    std::string code;
    std::optional<std::string> place;
    bool operator==(const PostalCode&) const = default;
};

/// Celestial right ascension / declination, in degrees.
struct RaDec {
    double ra = 0;  // [0, 360)
    double dec = 0; // [-90, 90]
    bool operator==(const RaDec&) const = default;
};

using LocationValue = std::variant<GeoPoint, PlaceName, PostalCode, RaDec>;

/// `d + m/60 + s/3600`, with the sign of `negative` applied.
double dms_to_degrees(double degrees, double minutes, double seconds, bool negative = false) noexcept;

/// Recognizes, in order:
///   - "RA 150.1, Dec -20.5"                    right ascension / declination
///   - "<frame>: lat, lon"                      frame one of ecliptic, galactic, supergalactic, equatorial
///   - "50.9271° N, 11.5892° E", "50.9271, 11.5892", "50° 55′ 37.56″ N, 11° 35′ 21.12″ E"
///   - "07745, Jena", "07745"                   leading postal code
///   - anything else                            place name
/// Throws ParseError for out-of-range coordinates.
LocationValue parse_location(std::string_view text);

/// Canonical text: "50.9271° N, 11.5892° E"; non-geographic frames are
/// prefixed ("galactic: ...").
std::string format_location(const LocationValue& v);
std::string format_point(const GeoPoint& p);

/// Offline lookup of place names and postal codes.
class Gazetteer {
public:
    virtual ~Gazetteer() = default;
    /// `key` is compared after trimming, lowercasing and collapsing whitespace.
    virtual std::optional<GeoPoint> resolve(std::string_view key) const = 0;
};

/// Gazetteer backed by `key <TAB> lat <TAB> lon` lines.
class FlatFileGazetteer final : public Gazetteer {
public:
    FlatFileGazetteer() = default;

    /// Throws ParseError.
    static FlatFileGazetteer read(std::istream& in);
    static FlatFileGazetteer parse(std::string_view text);
    /// The small dataset shipped with the library.
    static const FlatFileGazetteer& bundled();

    std::optional<GeoPoint> resolve(std::string_view key) const override;
    std::size_t size() const noexcept { return entries_.size(); }

private:
    std::map<std::string, GeoPoint, std::less<>> entries_;
};

/// Points pass through Exact. Place names and postal codes are looked up and
/// graded Lossy, since a name denotes an area. RA/Dec values are Unmapped.
/// Throws NotFoundError when the gazetteer lacks the name.
MappingOutcome<GeoPoint> resolve_location(const LocationValue& v, const Gazetteer& gazetteer);

} // namespace obsharm
