#include "obsharm/geoloc.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "obsharm/bundled.hpp"
#include "obsharm/detail/text.hpp"
#include "obsharm/error.hpp"

namespace obsharm {

using detail::format_number;

std::string_view to_string(Frame f) noexcept {
    switch (f) {
    case Frame::Geographic: return "geographic";
    case Frame::Ecliptic: return "ecliptic";
    case Frame::Galactic: return "galactic";
    case Frame::Supergalactic: return "supergalactic";
    case Frame::Equatorial: return "equatorial";
    }
    return "geographic";
}

GeoPoint::GeoPoint(double lat, double lon, Frame frame) : lat_(lat), lon_(lon), frame_(frame) {
    if (!std::isfinite(lat) || lat < -90 || lat > 90)
        throw std::out_of_range("latitude " + format_number(lat) + " outside [-90, 90]");
    if (!std::isfinite(lon) || lon < -180 || lon >= 360)
        throw std::out_of_range("longitude " + format_number(lon) + " outside [-180, 360)");
    if (lon_ > 180) lon_ -= 360;
    if (lon_ == -180) lon_ = 180;
    if (lon_ == 0) lon_ = 0;
    if (lat_ == 0) lat_ = 0;
}

double dms_to_degrees(double degrees, double minutes, double seconds, bool negative) noexcept {
    const double v = degrees + minutes / 60.0 + seconds / 3600.0;
    return negative ? -v : v;
}

namespace {

struct Coordinate {
    double value;
    char hemisphere; // 'N', 'S', 'E', 'W' or 0
};

bool is_hemisphere(char c) {
    char u = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return u == 'N' || u == 'S' || u == 'E' || u == 'W';
}

// Markers accepted after the n-th number of a DMS group.
constexpr std::array<std::array<std::string_view, 3>, 3> kMarkers{{
    {"\xC2\xB0", "\xC2\xBA", "d"},    // degree sign, ordinal indicator, d
    {"\xE2\x80\xB2", "'", "m"},       // prime, apostrophe, m
    {"\xE2\x80\xB3", "\"", "''"},     // double prime, quote, two apostrophes
}};

void skip_space(std::string_view s, std::size_t& i) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

// Parses one latitude or longitude component. Returns nullopt when the text
// does not look like a coordinate at all; throws ParseError when it does but
// is malformed (minutes >= 60, sign clashing with a hemisphere, ...).
std::optional<Coordinate> parse_coordinate(std::string_view raw, std::size_t base) {
    auto s = detail::trim(raw);
    base += static_cast<std::size_t>(s.data() - raw.data());
    if (s.empty()) return std::nullopt;

    char hemisphere = 0;
    std::size_t i = 0;
    if (is_hemisphere(s[0]) && s.size() > 1 &&
        (std::isdigit(static_cast<unsigned char>(s[1])) || std::isspace(static_cast<unsigned char>(s[1])))) {
        hemisphere = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
        ++i;
        skip_space(s, i);
    }

    bool negative = false;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
        negative = s[i] == '-';
        ++i;
    }

    std::array<double, 3> parts{0, 0, 0};
    int count = 0;
    while (count < 3) {
        skip_space(s, i);
        if (i >= s.size() || !(std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '.')) break;
        double v = 0;
        auto [ptr, ec] = std::from_chars(s.data() + i, s.data() + s.size(), v);
        if (ec != std::errc{}) return std::nullopt;
        i = static_cast<std::size_t>(ptr - s.data());
        parts[count] = v;
        skip_space(s, i);
        // A marker is optional but, when present, must match the position.
        for (int m = 0; m < 3; ++m) {
            for (auto marker : kMarkers[m]) {
                if (s.substr(i).starts_with(marker)) {
                    if (m != count) throw ParseError(base + i, "unexpected unit marker in coordinate");
                    i += marker.size();
                    goto marked;
                }
            }
        }
    marked:
        ++count;
    }
    if (count == 0) return std::nullopt;

    skip_space(s, i);
    if (i < s.size() && is_hemisphere(s[i]) && i + 1 == s.size()) {
        if (hemisphere) throw ParseError(base + i, "coordinate has two hemisphere letters");
        hemisphere = static_cast<char>(std::toupper(static_cast<unsigned char>(s[i])));
        ++i;
    }
    if (i != s.size()) return std::nullopt;

    if (hemisphere && negative) throw ParseError(base, "coordinate combines a sign with a hemisphere letter");
    if (count > 1 && std::floor(parts[0]) != parts[0])
        throw ParseError(base, "fractional degrees cannot be followed by minutes");
    if (count > 2 && std::floor(parts[1]) != parts[1])
        throw ParseError(base, "fractional minutes cannot be followed by seconds");
    if (parts[1] >= 60) throw ParseError(base, "minutes must be below 60");
    if (parts[2] >= 60) throw ParseError(base, "seconds must be below 60");

    negative = negative || hemisphere == 'S' || hemisphere == 'W';
    return Coordinate{dms_to_degrees(parts[0], parts[1], parts[2], negative), hemisphere};
}

// Splits "lat, lon". Without a comma, splits after a trailing N/S hemisphere
// letter ("50.9 N 11.5 E").
std::optional<std::pair<std::size_t, std::size_t>> coordinate_split(std::string_view s) {
    auto comma = s.find_first_of(",;");
    if (comma != std::string_view::npos) {
        if (s.find_first_of(",;", comma + 1) != std::string_view::npos) return std::nullopt;
        return std::pair{comma, comma + 1};
    }
    for (std::size_t i = 1; i + 1 < s.size(); ++i) {
        char u = static_cast<char>(std::toupper(static_cast<unsigned char>(s[i])));
        if ((u == 'N' || u == 'S') && std::isspace(static_cast<unsigned char>(s[i + 1])) &&
            !std::isalpha(static_cast<unsigned char>(s[i - 1])))
            return std::pair{i + 1, i + 1};
    }
    return std::nullopt;
}

bool is_lat_letter(char h) { return h == 'N' || h == 'S'; }
bool is_lon_letter(char h) { return h == 'E' || h == 'W'; }

std::optional<GeoPoint> parse_point(std::string_view s, std::size_t base, Frame frame) {
    auto split = coordinate_split(s);
    if (!split) return std::nullopt;
    auto first = parse_coordinate(s.substr(0, split->first), base);
    auto second = parse_coordinate(s.substr(split->second), base + split->second);
    if (!first || !second) return std::nullopt;

    Coordinate lat = *first, lon = *second;
    if (is_lon_letter(first->hemisphere) || is_lat_letter(second->hemisphere)) std::swap(lat, lon);
    if (is_lon_letter(lat.hemisphere) || is_lat_letter(lon.hemisphere))
        throw ParseError(base, "both coordinates name the same axis");

    if (lat.value < -90 || lat.value > 90)
        throw ParseError(base, "latitude " + format_number(lat.value) + " outside [-90, 90]");
    if (lon.value < -180 || lon.value >= 360)
        throw ParseError(base, "longitude " + format_number(lon.value) + " outside [-180, 360)");
    return GeoPoint(lat.value, lon.value, frame);
}

std::optional<double> parse_degrees(std::string_view s) {
    s = detail::trim(s);
    for (std::string_view marker : {"\xC2\xB0", "\xC2\xBA"})
        if (s.ends_with(marker)) s.remove_suffix(marker.size());
    return detail::parse_number(s);
}

// "RA 150.1, Dec -20.5"
std::optional<RaDec> parse_radec(std::string_view s) {
    if (!detail::starts_with_icase(s, "ra") || s.size() < 3 || std::isalpha(static_cast<unsigned char>(s[2])))
        return std::nullopt;
    auto comma = s.find(',');
    if (comma == std::string_view::npos) throw ParseError(0, "RA needs a following Dec component");
    auto ra_text = detail::trim(s.substr(2, comma - 2));
    if (!ra_text.empty() && (ra_text.front() == ':' || ra_text.front() == '=')) ra_text.remove_prefix(1);
    auto dec_text = detail::trim(s.substr(comma + 1));
    if (!detail::starts_with_icase(dec_text, "dec")) throw ParseError(comma + 1, "expected 'Dec' after RA");
    dec_text = detail::trim(dec_text.substr(3));
    if (!dec_text.empty() && (dec_text.front() == ':' || dec_text.front() == '=')) dec_text.remove_prefix(1);

    auto ra = parse_degrees(ra_text);
    auto dec = parse_degrees(dec_text);
    if (!ra || !dec) throw ParseError(0, "RA and Dec must be decimal degrees");
    if (*ra < 0 || *ra >= 360) throw ParseError(0, "right ascension outside [0, 360)");
    if (*dec < -90 || *dec > 90) throw ParseError(comma + 1, "declination outside [-90, 90]");
    return RaDec{*ra, *dec};
}

bool is_postal_code(std::string_view s) {
    return s.size() >= 3 && s.size() <= 10 &&
           std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

} // namespace

LocationValue parse_location(std::string_view text) {
    auto s = detail::trim(text);
    const std::size_t base = static_cast<std::size_t>(s.data() - text.data());
    if (s.empty()) throw ParseError(0, "empty location");

    if (auto radec = parse_radec(s)) return *radec;

    static constexpr std::array<std::pair<std::string_view, Frame>, 5> frames{{{"supergalactic", Frame::Supergalactic},
                                                                               {"galactic", Frame::Galactic},
                                                                               {"ecliptic", Frame::Ecliptic},
                                                                               {"equatorial", Frame::Equatorial},
                                                                               {"geographic", Frame::Geographic}}};
    for (const auto& [word, frame] : frames) {
        if (!detail::starts_with_icase(s, word)) continue;
        auto rest = s.substr(word.size());
        if (rest.empty() || !(rest.front() == ':' || std::isspace(static_cast<unsigned char>(rest.front())))) continue;
        if (rest.front() == ':') rest.remove_prefix(1);
        const std::size_t off = base + static_cast<std::size_t>(rest.data() - s.data());
        if (auto p = parse_point(rest, off, frame)) return *p;
        throw ParseError(off, "expected 'lat, lon' after frame '" + std::string(word) + "'");
    }

    if (auto p = parse_point(s, base, Frame::Geographic)) return *p;

    auto comma = s.find(',');
    auto head = detail::trim(s.substr(0, comma));
    if (is_postal_code(head)) {
        PostalCode postal{std::string(head), std::nullopt};
        if (comma != std::string_view::npos) {
            auto place = detail::trim(s.substr(comma + 1));
            if (!place.empty()) postal.place = std::string(place);
        }
        return postal;
    }
    return PlaceName{std::string(s)};
}

std::string format_point(const GeoPoint& p) {
    std::string out;
    if (p.frame() != Frame::Geographic) {
        out += to_string(p.frame());
        out += ": ";
    }
    out += format_number(std::fabs(p.lat())) + "\xC2\xB0 " + (p.lat() < 0 ? "S" : "N");
    out += ", ";
    out += format_number(std::fabs(p.lon())) + "\xC2\xB0 " + (p.lon() < 0 ? "W" : "E");
    return out;
}

std::string format_location(const LocationValue& v) {
    struct Visitor {
        std::string operator()(const GeoPoint& p) const { return format_point(p); }
        std::string operator()(const PlaceName& p) const { return p.name; }
        std::string operator()(const PostalCode& p) const { return p.place ? p.code + ", " + *p.place : p.code; }
        std::string operator()(const RaDec& r) const {
            return "RA " + format_number(r.ra) + "\xC2\xB0, Dec " + format_number(r.dec) + "\xC2\xB0";
        }
    };
    return std::visit(Visitor{}, v);
}

FlatFileGazetteer FlatFileGazetteer::read(std::istream& in) {
    FlatFileGazetteer g;
    std::string line;
    std::size_t offset = 0;
    while (std::getline(in, line)) {
        const std::size_t line_offset = offset;
        offset += line.size() + 1;
        auto body = detail::trim(line);
        if (body.empty() || body.front() == '#') continue;
        auto fields = detail::split(body, '\t');
        if (fields.size() != 3) throw ParseError(line_offset, "expected 'key<TAB>lat<TAB>lon'");
        auto lat = detail::parse_number(fields[1]);
        auto lon = detail::parse_number(fields[2]);
        if (!lat || !lon) throw ParseError(line_offset, "gazetteer coordinates must be numbers");
        auto key = detail::normalize_key(fields[0]);
        if (key.empty()) throw ParseError(line_offset, "empty gazetteer key");
        try {
            g.entries_.insert_or_assign(key, GeoPoint(*lat, *lon));
        } catch (const std::out_of_range& e) {
            throw ParseError(line_offset, e.what());
        }
    }
    return g;
}

FlatFileGazetteer FlatFileGazetteer::parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    return read(in);
}

const FlatFileGazetteer& FlatFileGazetteer::bundled() {
    static const FlatFileGazetteer g = parse(bundled::gazetteer());
    return g;
}

std::optional<GeoPoint> FlatFileGazetteer::resolve(std::string_view key) const {
    auto it = entries_.find(detail::normalize_key(key));
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

MappingOutcome<GeoPoint> resolve_location(const LocationValue& v, const Gazetteer& gazetteer) {
    if (const auto* p = std::get_if<GeoPoint>(&v)) return {*p, Lossiness::Exact, {}};
    if (std::holds_alternative<RaDec>(v)) return MappingOutcome<GeoPoint>::unmapped();

    std::vector<std::string> keys;
    if (const auto* place = std::get_if<PlaceName>(&v)) {
        keys.push_back(place->name);
    } else {
        const auto& postal = std::get<PostalCode>(v);
        if (postal.place) keys.push_back(postal.code + ", " + *postal.place);
        keys.push_back(postal.code);
        if (postal.place) keys.push_back(*postal.place);
    }
    for (const auto& key : keys)
        if (auto hit = gazetteer.resolve(key)) return {*hit, Lossiness::Lossy, {}};
    throw NotFoundError("gazetteer has no entry for '" + format_location(v) + "'");
}

} // namespace obsharm
