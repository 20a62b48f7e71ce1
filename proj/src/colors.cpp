#include "obsharm/colors.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <istream>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "obsharm/bundled.hpp"
#include "obsharm/detail/text.hpp"
#include "obsharm/error.hpp"

namespace obsharm {

double rgb_distance(Rgb a, Rgb b) noexcept {
    const double dr = double(a.r) - double(b.r);
    const double dg = double(a.g) - double(b.g);
    const double db = double(a.b) - double(b.b);
    return std::sqrt(dr * dr + dg * dg + db * db);
}

std::string to_hex(Rgb c) {
    static constexpr char digits[] = "0123456789ABCDEF";
    std::string out = "#";
    for (std::uint8_t ch : {c.r, c.g, c.b}) {
        out += digits[ch >> 4];
        out += digits[ch & 0xF];
    }
    return out;
}

Hsv rgb_to_hsv(Rgb c) noexcept {
    const double r = c.r / 255.0, g = c.g / 255.0, b = c.b / 255.0;
    const double mx = std::max({r, g, b}), mn = std::min({r, g, b});
    const double delta = mx - mn;
    Hsv out{0, mx == 0 ? 0 : delta / mx, mx};
    if (delta == 0) return out;
    double h;
    if (mx == r)
        h = 60 * std::fmod((g - b) / delta, 6.0);
    else if (mx == g)
        h = 60 * ((b - r) / delta + 2);
    else
        h = 60 * ((r - g) / delta + 4);
    if (h < 0) h += 360;
    out.h = h;
    return out;
}

Rgb hsv_to_rgb(Hsv c) {
    if (!(c.s >= 0 && c.s <= 1 && c.v >= 0 && c.v <= 1 && std::isfinite(c.h)))
        throw std::invalid_argument("HSV saturation and value must lie in [0, 1]");
    double h = std::fmod(c.h, 360.0);
    if (h < 0) h += 360;
    const double chroma = c.v * c.s;
    const double x = chroma * (1 - std::fabs(std::fmod(h / 60, 2.0) - 1));
    const double m = c.v - chroma;
    double r = 0, g = 0, b = 0;
    switch (static_cast<int>(h / 60)) {
    case 0: r = chroma, g = x; break;
    case 1: r = x, g = chroma; break;
    case 2: g = chroma, b = x; break;
    case 3: g = x, b = chroma; break;
    case 4: r = x, b = chroma; break;
    default: r = chroma, b = x; break;
    }
    auto channel = [&](double v) { return static_cast<std::uint8_t>(std::lround(std::clamp((v + m) * 255, 0.0, 255.0))); };
    return {channel(r), channel(g), channel(b)};
}

namespace {

std::string lookup_key(std::string_view name) {
    std::string key;
    for (char c : name) {
        if (std::isspace(static_cast<unsigned char>(c)) || c == '-' || c == '_') continue;
        key += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    return key;
}

int hex_digit(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

// `text` excludes the leading '#'. Returns nullopt if malformed.
std::optional<Rgb> decode_hex(std::string_view text) {
    if (text.size() != 3 && text.size() != 6) return std::nullopt;
    std::uint8_t ch[3];
    for (std::size_t i = 0; i < 3; ++i) {
        int hi, lo;
        if (text.size() == 3) {
            hi = lo = hex_digit(text[i]);
        } else {
            hi = hex_digit(text[2 * i]);
            lo = hex_digit(text[2 * i + 1]);
        }
        if (hi < 0 || lo < 0) return std::nullopt;
        ch[i] = static_cast<std::uint8_t>(hi * 16 + lo);
    }
    return Rgb{ch[0], ch[1], ch[2]};
}

} // namespace

ColorLexicon::ColorLexicon(std::map<std::string, Rgb> entries) {
    for (auto& [name, rgb] : entries) {
        auto key = lookup_key(name);
        if (key.empty()) throw std::invalid_argument("empty color name");
        if (!entries_.emplace(key, rgb).second) throw std::invalid_argument("duplicate color name '" + key + "'");
    }
}

const ColorLexicon& ColorLexicon::standard() {
    static const ColorLexicon lexicon = parse(bundled::color_lexicon());
    return lexicon;
}

ColorLexicon ColorLexicon::read(std::istream& in) {
    std::map<std::string, Rgb> entries;
    std::string line;
    std::size_t offset = 0;
    while (std::getline(in, line)) {
        const std::size_t line_offset = offset;
        offset += line.size() + 1;
        auto body = detail::trim(line);
        if (body.empty() || body.front() == '#') continue;
        auto fields = detail::split(body, '\t');
        if (fields.size() != 2) throw ParseError(line_offset, "expected 'name<TAB>RRGGBB'");
        auto code = detail::trim(fields[1]);
        if (!code.empty() && code.front() == '#') code.remove_prefix(1);
        auto rgb = decode_hex(code);
        if (!rgb || code.size() != 6) throw ParseError(line_offset, "malformed color code '" + std::string(fields[1]) + "'");
        auto key = lookup_key(fields[0]);
        if (key.empty()) throw ParseError(line_offset, "empty color name");
        if (!entries.emplace(key, *rgb).second) throw ParseError(line_offset, "duplicate color name '" + key + "'");
    }
    return ColorLexicon(std::move(entries));
}

ColorLexicon ColorLexicon::parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    return read(in);
}

const Rgb* ColorLexicon::find(std::string_view name) const {
    auto it = entries_.find(lookup_key(name));
    return it == entries_.end() ? nullptr : &it->second;
}

namespace {

ColorValue parse_single(std::string_view raw, std::size_t base, const ColorLexicon& lexicon) {
    auto s = detail::trim(raw);
    base += static_cast<std::size_t>(s.data() - raw.data());
    if (s.empty()) throw ParseError(base, "empty color");
    if (s.front() == '#') {
        auto rgb = decode_hex(s.substr(1));
        if (!rgb) throw ParseError(base, "malformed hex color '" + std::string(s) + "'");
        return CodedColor{*rgb};
    }
    if (const Rgb* rgb = lexicon.find(s)) return NamedColor{lookup_key(s), *rgb};
    return UnresolvedColorName{detail::normalize_key(s)};
}

} // namespace

ParsedColor parse_color(std::string_view text, const ColorLexicon& lexicon) {
    if (detail::trim(text).empty()) throw ParseError(0, "empty color");
    auto items = detail::split(text, ',');
    if (items.size() == 1) return parse_single(text, 0, lexicon);
    ColorSequence seq;
    std::size_t offset = 0;
    for (auto item : items) {
        seq.colors.push_back(parse_single(item, offset, lexicon));
        offset += item.size() + 1;
    }
    return seq;
}

Rgb name_to_rgb(std::string_view name, const ColorLexicon& lexicon) {
    if (const Rgb* rgb = lexicon.find(name)) return *rgb;
    throw UnknownNameError("'" + std::string(detail::trim(name)) + "' is not in the color lexicon");
}

NearestName nearest_name(Rgb c, const ColorLexicon& lexicon) {
    if (lexicon.size() == 0) throw std::invalid_argument("empty color lexicon");
    // Entries iterate in name order, so strict < keeps the alphabetically first on ties.
    const std::string* best = nullptr;
    int best_sq = std::numeric_limits<int>::max();
    for (const auto& [name, rgb] : lexicon.entries()) {
        const int dr = int(c.r) - rgb.r, dg = int(c.g) - rgb.g, db = int(c.b) - rgb.b;
        const int sq = dr * dr + dg * dg + db * db;
        if (sq < best_sq) {
            best_sq = sq;
            best = &name;
        }
    }
    return {*best, std::sqrt(static_cast<double>(best_sq))};
}

const Rgb* rgb_of(const ColorValue& v) noexcept {
    if (const auto* n = std::get_if<NamedColor>(&v)) return &n->rgb;
    if (const auto* c = std::get_if<CodedColor>(&v)) return &c->rgb;
    return nullptr;
}

std::string format_color(const ColorValue& v) {
    if (const auto* n = std::get_if<NamedColor>(&v)) return n->name;
    if (const auto* c = std::get_if<CodedColor>(&v)) return to_hex(c->rgb);
    return std::get<UnresolvedColorName>(v).name;
}

std::string format_color(const ParsedColor& v) {
    if (const auto* single = std::get_if<ColorValue>(&v)) return format_color(*single);
    std::string out;
    for (const auto& c : std::get<ColorSequence>(v).colors) {
        if (!out.empty()) out += ", ";
        out += format_color(c);
    }
    return out;
}

} // namespace obsharm
