#include "obsharm/compass.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <optional>
#include <stdexcept>

#include "obsharm/detail/text.hpp"
#include "obsharm/error.hpp"

namespace obsharm {

namespace {

// 16-wind table, clockwise from north. A rose with n sectors uses every
// (16 / n)-th entry.
constexpr std::array<std::string_view, 16> kAbbreviations{
    "N", "NNE", "NE", "ENE", "E", "ESE", "SE", "SSE", "S", "SSW", "SW", "WSW", "W", "WNW", "NW", "NNW"};
constexpr std::array<std::string_view, 16> kNames{
    "north", "north-northeast", "northeast", "east-northeast", "east", "east-southeast", "southeast", "south-southeast",
    "south", "south-southwest", "southwest", "west-southwest", "west", "west-northwest", "northwest", "north-northwest"};

std::optional<int> wind_index(std::string_view abbreviation) {
    for (int i = 0; i < 16; ++i)
        if (detail::iequals(kAbbreviations[i], abbreviation)) return i;
    return std::nullopt;
}

double normalize_degrees(double d) {
    double v = std::fmod(d, 360.0);
    if (v < 0) v += 360.0;
    if (v >= 360.0 || v == 0) v = 0; // -tiny + 360 can round up to 360; also folds -0
    return v;
}

} // namespace

AngleDeg::AngleDeg(double degrees) {
    if (!std::isfinite(degrees)) throw DomainError("angle must be finite");
    value_ = normalize_degrees(degrees);
}

CompassRose::CompassRose(int sector_count) : count_(sector_count) {
    if (sector_count != 4 && sector_count != 8 && sector_count != 16)
        throw GranularityError("compass rose must have 4, 8 or 16 sectors, got " + std::to_string(sector_count));
}

std::vector<Sector> CompassRose::sectors() const {
    std::vector<Sector> out;
    out.reserve(count_);
    for (int i = 0; i < count_; ++i) out.emplace_back(*this, i);
    return out;
}

Sector::Sector(CompassRose rose, int index) : rose_(rose), index_(index) {
    if (index < 0 || index >= rose.count())
        throw std::out_of_range("sector index " + std::to_string(index) + " outside " +
                                std::to_string(rose.count()) + "-sector rose");
}

Sector Sector::from_abbreviation(std::string_view abbreviation, CompassRose rose) {
    auto idx = wind_index(abbreviation);
    if (!idx) throw ParseError(0, "unknown wind name '" + std::string(abbreviation) + "'");
    const int step = 16 / rose.count();
    if (*idx % step != 0)
        throw ParseError(0, "'" + std::string(abbreviation) + "' is not a sector of a " +
                                std::to_string(rose.count()) + "-sector rose");
    return Sector(rose, *idx / step);
}

std::string_view Sector::abbreviation() const noexcept { return kAbbreviations[index_ * (16 / rose_.count())]; }
std::string_view Sector::name() const noexcept { return kNames[index_ * (16 / rose_.count())]; }

Sector Sector::promoted(CompassRose finer) const {
    if (finer.count() < rose_.count())
        throw GranularityError("cannot promote a " + std::to_string(rose_.count()) + "-rose sector to a " +
                               std::to_string(finer.count()) + "-rose");
    return Sector(finer, index_ * (finer.count() / rose_.count()));
}

CompassRose minimal_rose(std::string_view abbreviation) {
    auto idx = wind_index(abbreviation);
    if (!idx) throw ParseError(0, "unknown wind name '" + std::string(abbreviation) + "'");
    if (*idx % 4 == 0) return CompassRose(4);
    if (*idx % 2 == 0) return CompassRose(8);
    return CompassRose(16);
}

SectorSpan::SectorSpan(Sector from_sector, Sector to_sector) : from(from_sector), to(to_sector) {
    if (from.rose() != to.rose()) throw GranularityError("span endpoints must share one compass rose");
}

std::string RelativeDirection::name() const {
    const bool composite = (vertical != VerticalTerm::None) + (lateral != LateralTerm::None) +
                               (depth != DepthTerm::None) > 1;
    std::string out;
    auto add = [&](std::string_view term) {
        if (!out.empty()) out += '-';
        out += term;
    };
    if (vertical == VerticalTerm::Up) add(composite ? "top" : "up");
    if (vertical == VerticalTerm::Down) add(composite ? "bottom" : "down");
    if (depth == DepthTerm::Forward) add("forward");
    if (depth == DepthTerm::Backward) add("backward");
    if (lateral == LateralTerm::Left) add("left");
    if (lateral == LateralTerm::Right) add("right");
    return out;
}

void RelativeDirection::validate() const {
    const int terms = (vertical != VerticalTerm::None) + (lateral != LateralTerm::None) + (depth != DepthTerm::None);
    if (terms < 1 || terms > 2) throw std::invalid_argument("relative direction needs one or two terms");
}

std::vector<rulekit::Interval> Arc::pieces() const {
    if (start < end) return {{start, end, start_open, end_open}};
    if (start == end) {
        if (!start_open && !end_open) return {rulekit::Interval::closed(start, start)};
        return {};
    }
    std::vector<rulekit::Interval> out{{start, 360.0, start_open, true}};
    rulekit::Interval tail{0.0, end, false, end_open};
    if (!tail.empty()) out.push_back(tail);
    return out;
}

bool Arc::contains(AngleDeg a) const {
    for (const auto& p : pieces())
        if (p.contains(a.value())) return true;
    return false;
}

double Arc::width() const noexcept { return start <= end ? end - start : 360.0 - start + end; }

bool intersects(const Arc& a, const Arc& b) {
    for (const auto& pa : a.pieces())
        for (const auto& pb : b.pieces())
            if (rulekit::intersects(pa, pb)) return true;
    return false;
}

std::string to_string(const Arc& a) {
    std::string s;
    for (const auto& p : a.pieces()) {
        if (!s.empty()) s += " u ";
        s += rulekit::to_string(p);
    }
    return s.empty() ? "{}" : s;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

enum class WordKind { Wind, Relative, Other };

struct Token {
    std::string_view text;
    std::size_t offset;
};

std::vector<Token> tokenize(std::string_view s, std::size_t base) {
    std::vector<Token> out;
    std::size_t i = 0;
    auto is_sep = [](char c) { return c == '-' || c == '_' || c == ' ' || c == '\t'; };
    while (i < s.size()) {
        while (i < s.size() && is_sep(s[i])) ++i;
        std::size_t j = i;
        while (j < s.size() && !is_sep(s[j])) ++j;
        if (j > i) out.push_back({s.substr(i, j - i), base + i});
        i = j;
    }
    return out;
}

std::optional<std::string> wind_letters(std::string_view token) {
    static constexpr std::array<std::pair<std::string_view, std::string_view>, 8> words{{{"north", "N"},
                                                                                          {"east", "E"},
                                                                                          {"south", "S"},
                                                                                          {"west", "W"},
                                                                                          {"northeast", "NE"},
                                                                                          {"northwest", "NW"},
                                                                                          {"southeast", "SE"},
                                                                                          {"southwest", "SW"}}};
    for (const auto& [word, letters] : words)
        if (detail::iequals(token, word)) return std::string(letters);
    if (token.size() <= 3) {
        std::string letters;
        for (char c : token) {
            char u = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
            if (u != 'N' && u != 'E' && u != 'S' && u != 'W') return std::nullopt;
            letters += u;
        }
        return letters;
    }
    return std::nullopt;
}

bool apply_relative_word(std::string_view token, RelativeDirection& r, bool& duplicate) {
    auto w = detail::to_lower(token);
    auto set = [&](auto& slot, auto value) {
        using T = std::decay_t<decltype(slot)>;
        if (slot != T::None) duplicate = true;
        slot = value;
        return true;
    };
    if (w == "left") return set(r.lateral, LateralTerm::Left);
    if (w == "right") return set(r.lateral, LateralTerm::Right);
    if (w == "up" || w == "top" || w == "upper" || w == "above") return set(r.vertical, VerticalTerm::Up);
    if (w == "down" || w == "bottom" || w == "lower" || w == "below") return set(r.vertical, VerticalTerm::Down);
    if (w == "forward" || w == "forwards" || w == "front" || w == "ahead") return set(r.depth, DepthTerm::Forward);
    if (w == "backward" || w == "backwards" || w == "back" || w == "behind" || w == "rear")
        return set(r.depth, DepthTerm::Backward);
    return false;
}

bool is_relative_word(std::string_view token) {
    RelativeDirection scratch;
    bool dup = false;
    return apply_relative_word(token, scratch, dup);
}

using Term = std::variant<AngleDeg, Sector, RelativeDirection>;

std::optional<AngleDeg> parse_angle(std::string_view s, std::size_t base) {
    std::string_view num = s;
    if (!num.empty() && num.front() == '+') num.remove_prefix(1);
    double v = 0;
    auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), v);
    if (ec != std::errc{} || ptr == num.data()) return std::nullopt;

    const std::size_t unit_at = static_cast<std::size_t>(ptr - s.data());
    auto unit = detail::trim(s.substr(unit_at));
    const std::size_t unit_offset = base + static_cast<std::size_t>(unit.data() - s.data());
    if (unit.empty() || unit == "\xC2\xB0" || unit == "\xC2\xBA" || detail::iequals(unit, "deg") ||
        detail::iequals(unit, "degree") || detail::iequals(unit, "degrees")) {
        if (!std::isfinite(v)) throw ParseError(base, "angle must be finite");
        return AngleDeg(v);
    }
    auto lu = detail::to_lower(unit);
    if (lu == "rad" || lu == "rads" || lu == "radian" || lu == "radians")
        throw ParseError(unit_offset, "radians are not supported, give the angle in degrees");
    throw ParseError(unit_offset, "unrecognized angle unit '" + std::string(unit) + "'");
}

Term parse_term(std::string_view raw, std::size_t base) {
    auto s = detail::trim(raw);
    base += static_cast<std::size_t>(s.data() - raw.data());
    if (s.empty()) throw ParseError(base, "missing direction");

    const char first = s.front();
    if (std::isdigit(static_cast<unsigned char>(first)) || first == '-' || first == '+' || first == '.') {
        if (auto a = parse_angle(s, base)) return *a;
        throw ParseError(base, "malformed angle '" + std::string(s) + "'");
    }

    // Optional rose annotation: "north[16]".
    std::optional<CompassRose> forced;
    if (s.back() == ']') {
        auto open = s.rfind('[');
        if (open == std::string_view::npos) throw ParseError(base + s.size() - 1, "unbalanced ']'");
        auto inner = s.substr(open + 1, s.size() - open - 2);
        int count = 0;
        auto [p, ec] = std::from_chars(inner.data(), inner.data() + inner.size(), count);
        if (ec != std::errc{} || p != inner.data() + inner.size())
            throw ParseError(base + open, "malformed rose annotation '" + std::string(s.substr(open)) + "'");
        try {
            forced = CompassRose(count);
        } catch (const GranularityError& e) {
            throw ParseError(base + open, e.what());
        }
        s = detail::trim(s.substr(0, open));
    }

    auto tokens = tokenize(s, base);
    if (tokens.empty()) throw ParseError(base, "missing direction");

    const bool all_wind = std::all_of(tokens.begin(), tokens.end(), [](const Token& t) { return wind_letters(t.text); });
    if (all_wind) {
        std::string letters;
        for (const auto& t : tokens) letters += *wind_letters(t.text);
        if (!wind_index(letters)) throw ParseError(tokens.front().offset, "'" + std::string(s) + "' is not a wind name");
        CompassRose rose = minimal_rose(letters);
        if (forced) {
            if (forced->count() < rose.count())
                throw ParseError(tokens.front().offset, "'" + std::string(s) + "' does not exist in a " +
                                                            std::to_string(forced->count()) + "-sector rose");
            rose = *forced;
        }
        return Sector::from_abbreviation(letters, rose);
    }

    if (forced) throw ParseError(base, "rose annotation only applies to wind names");

    RelativeDirection r;
    bool duplicate = false;
    for (const auto& t : tokens) {
        if (!apply_relative_word(t.text, r, duplicate))
            throw ParseError(t.offset, "unrecognized direction term '" + std::string(t.text) + "'");
        if (duplicate) throw ParseError(t.offset, "direction axis repeated at '" + std::string(t.text) + "'");
    }
    try {
        r.validate();
    } catch (const std::invalid_argument& e) {
        throw ParseError(base, e.what());
    }
    return r;
}

struct SpanSplit {
    std::size_t left_end;
    std::size_t right_begin;
};

std::optional<SpanSplit> find_span_separator(std::string_view s) {
    auto lower = detail::to_lower(s);
    // " to " as a whole word
    for (std::size_t pos = lower.find("to"); pos != std::string::npos; pos = lower.find("to", pos + 1)) {
        bool left_ok = pos > 0 && std::isspace(static_cast<unsigned char>(lower[pos - 1]));
        bool right_ok = pos + 2 < lower.size() && std::isspace(static_cast<unsigned char>(lower[pos + 2]));
        if (left_ok && right_ok) return SpanSplit{pos, pos + 2};
    }
    for (std::string_view arrow : {"->", "\xE2\x86\x92"}) {
        if (auto pos = s.find(arrow); pos != std::string_view::npos) return SpanSplit{pos, pos + arrow.size()};
    }
    return std::nullopt;
}

} // namespace

Direction parse_direction(std::string_view text) {
    auto s = detail::trim(text);
    const std::size_t base = static_cast<std::size_t>(s.data() - text.data());
    if (s.empty()) throw ParseError(0, "empty direction");

    auto split = find_span_separator(s);
    if (!split) {
        Term t = parse_term(s, base);
        return std::visit([](auto&& v) -> Direction { return v; }, t);
    }

    Term from = parse_term(s.substr(0, split->left_end), base);
    Term to = parse_term(s.substr(split->right_begin), base + split->right_begin);

    if (auto* a = std::get_if<Sector>(&from)) {
        if (auto* b = std::get_if<Sector>(&to)) {
            CompassRose rose = std::max(a->rose(), b->rose());
            return SectorSpan(a->promoted(rose), b->promoted(rose));
        }
    }
    if (auto* a = std::get_if<AngleDeg>(&from)) {
        if (auto* b = std::get_if<AngleDeg>(&to)) return BearingSpan{*a, *b};
    }
    if (auto* a = std::get_if<RelativeDirection>(&from)) {
        if (auto* b = std::get_if<RelativeDirection>(&to)) return RelativeSpan{*a, *b};
    }
    throw ParseError(base + split->right_begin, "span endpoints must be of the same kind");
}

std::string format_angle(AngleDeg a) { return detail::format_number(a.value()) + "\xC2\xB0"; }

std::string format_sector(const Sector& s) {
    return std::string(s.name()) + "[" + std::to_string(s.rose().count()) + "]";
}

std::string format_direction(const Direction& d) {
    struct Visitor {
        std::string operator()(const AngleDeg& a) const { return format_angle(a); }
        std::string operator()(const Sector& s) const { return format_sector(s); }
        std::string operator()(const SectorSpan& s) const { return format_sector(s.from) + " to " + format_sector(s.to); }
        std::string operator()(const BearingSpan& s) const { return format_angle(s.from) + " to " + format_angle(s.to); }
        std::string operator()(const RelativeDirection& r) const { return r.name(); }
        std::string operator()(const RelativeSpan& r) const { return r.from.name() + " to " + r.to.name(); }
    };
    return std::visit(Visitor{}, d);
}

// ---------------------------------------------------------------------------
// Mapping

Sector sector_of_angle(AngleDeg a, CompassRose rose) {
    const double width = rose.sector_width();
    const double half = width / 2;
    const double v = a.value();
    // Sector bounds are exact multiples of width/2, so correcting the
    // estimate against them keeps boundary angles in the clockwise-next sector.
    int i = static_cast<int>(std::floor(v / width + 0.5));
    while (v < i * width - half) --i;
    while (v >= i * width + half) ++i;
    const int n = rose.count();
    return Sector(rose, ((i % n) + n) % n);
}

Arc interval_of_sector(const Sector& s) {
    const double half = s.rose().sector_width() / 2;
    const double center = s.center().value();
    return Arc{AngleDeg(center - half).value(), AngleDeg(center + half).value(), false, true};
}

std::vector<Sector> coarsen(const Sector& s, CompassRose target) {
    if (target.count() >= s.rose().count())
        throw GranularityError("coarsen needs a coarser rose: " + std::to_string(target.count()) + " vs " +
                               std::to_string(s.rose().count()));
    const Arc source = interval_of_sector(s);
    std::vector<Sector> out;
    for (const auto& candidate : target.sectors())
        if (intersects(source, interval_of_sector(candidate))) out.push_back(candidate);
    return out;
}

double relative_offset(const RelativeDirection& r) {
    r.validate();
    if (r.has_vertical())
        throw UnmappableError("'" + r.name() + "' is relative to the image plane and has no compass bearing");
    const bool fwd = r.depth == DepthTerm::Forward, back = r.depth == DepthTerm::Backward;
    const bool left = r.lateral == LateralTerm::Left, right = r.lateral == LateralTerm::Right;
    if (fwd && right) return 45;
    if (back && right) return 135;
    if (back && left) return 225;
    if (fwd && left) return 315;
    if (right) return 90;
    if (back) return 180;
    if (left) return 270;
    return 0;
}

MappingOutcome<AngleDeg> relative_to_cardinal(const RelativeDirection& r, AngleDeg facing) {
    return {AngleDeg(facing.value() + relative_offset(r)), Lossiness::Exact, {}};
}

MappingOutcome<std::vector<Sector>> relative_to_cardinal(const RelativeDirection& r, const Sector& facing) {
    const double offset = relative_offset(r);
    Arc arc = interval_of_sector(facing);
    arc.start = AngleDeg(arc.start + offset).value();
    arc.end = AngleDeg(arc.end + offset).value();
    std::vector<Sector> covered;
    for (const auto& candidate : facing.rose().sectors())
        if (intersects(arc, interval_of_sector(candidate))) covered.push_back(candidate);
    return {std::move(covered), Lossiness::Widened, {}};
}

MappingOutcome<BearingSpan> relative_to_cardinal(const RelativeSpan& r, AngleDeg facing) {
    auto from = relative_to_cardinal(r.from, facing);
    auto to = relative_to_cardinal(r.to, facing);
    return {BearingSpan{*from.value, *to.value}, Lossiness::Exact, {}};
}

MappingOutcome<SectorSpan> relative_to_cardinal(const RelativeSpan& r, const Sector& facing) {
    auto from = relative_to_cardinal(r.from, facing);
    auto to = relative_to_cardinal(r.to, facing);
    if (from.value->size() != 1 || to.value->size() != 1) return MappingOutcome<SectorSpan>::unmapped();
    return {SectorSpan(from.value->front(), to.value->front()), Lossiness::Widened, {}};
}

namespace {

// Signed clockwise difference in (-180, 180].
double signed_delta(double from, double to) {
    double d = to - from;
    if (d > 180) d -= 360;
    if (d <= -180) d += 360;
    return d;
}

} // namespace

Arc shorter_arc(AngleDeg from, AngleDeg to) {
    const double d = signed_delta(from.value(), to.value());
    if (d == 180)
        throw AmbiguousSpanError(format_angle(from) + " and " + format_angle(to) + " are antipodal");
    if (d >= 0) return Arc{from.value(), to.value(), false, false};
    return Arc{to.value(), from.value(), false, false};
}

AngleDeg span_midpoint(const BearingSpan& span) {
    const double d = signed_delta(span.from.value(), span.to.value());
    if (d == 180)
        throw AmbiguousSpanError(format_angle(span.from) + " and " + format_angle(span.to) + " are antipodal");
    return AngleDeg(span.from.value() + d / 2);
}

AngleDeg span_midpoint(const SectorSpan& span) {
    try {
        return span_midpoint(BearingSpan{span.from.center(), span.to.center()});
    } catch (const AmbiguousSpanError&) {
        throw AmbiguousSpanError("span " + format_sector(span.from) + " to " + format_sector(span.to) +
                                 " joins antipodal sectors");
    }
}

} // namespace obsharm
