#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace obsharm {

struct Rgb {
    std::uint8_t r = 0;
    std::uint8_t g = 0;
    std::uint8_t b = 0;

    auto operator<=>(const Rgb&) const = default;
};

double rgb_distance(Rgb a, Rgb b) noexcept;

/// "#RRGGBB"
std::string to_hex(Rgb c);

struct Hsv {
    double h = 0; // degrees [0, 360)
    double s = 0; // [0, 1]
    double v = 0; // [0, 1]
};

Hsv rgb_to_hsv(Rgb c) noexcept;
/// Channels are rounded to the nearest integer.
Rgb hsv_to_rgb(Hsv c);

/// Color names to codes. Names are stored lowercase; several names may share
/// one code ("gray" and "grey").
class ColorLexicon {
public:
    ColorLexicon() = default;
    /// Throws std::invalid_argument on duplicate names.
    explicit ColorLexicon(std::map<std::string, Rgb> entries);

    /// The 148 CSS color keywords.
    static const ColorLexicon& standard();

    /// `name <TAB> RRGGBB` lines; `#` comments and blank lines are skipped.
    /// Throws ParseError.
    static ColorLexicon read(std::istream& in);
    static ColorLexicon parse(std::string_view text);

    std::size_t size() const noexcept { return entries_.size(); }
    const std::map<std::string, Rgb>& entries() const noexcept { return entries_; }

    /// Lookup after lowercasing, trimming and dropping inner spaces/hyphens.
    const Rgb* find(std::string_view name) const;

private:
    std::map<std::string, Rgb> entries_;
};

struct NamedColor {
    std::string name;
    Rgb rgb;
    bool operator==(const NamedColor&) const = default;
};
struct CodedColor {
    Rgb rgb;
    bool operator==(const CodedColor&) const = default;
};
/// A name outside the lexicon, such as "light blue-green".
struct UnresolvedColorName {
    std::string name;
    bool operator==(const UnresolvedColorName&) const = default;
};

using ColorValue = std::variant<NamedColor, CodedColor, UnresolvedColorName>;

/// Colors in the order the source listed them.
struct ColorSequence {
    std::vector<ColorValue> colors;
    bool operator==(const ColorSequence&) const = default;
};

using ParsedColor = std::variant<ColorValue, ColorSequence>;

/// Accepts "#RGB", "#RRGGBB", lexicon names and comma-separated lists of
/// those. Unknown names become UnresolvedColorName. Throws ParseError for
/// malformed hex or empty list items.
ParsedColor parse_color(std::string_view text, const ColorLexicon& lexicon = ColorLexicon::standard());

/// Throws UnknownNameError.
Rgb name_to_rgb(std::string_view name, const ColorLexicon& lexicon = ColorLexicon::standard());

struct NearestName {
    std::string name;
    double distance = 0;
};

/// Closest lexicon entry by Euclidean RGB distance, ties broken alphabetically.
/// Throws std::invalid_argument for an empty lexicon.
NearestName nearest_name(Rgb c, const ColorLexicon& lexicon = ColorLexicon::standard());

/// Resolved code, if the value has one.
const Rgb* rgb_of(const ColorValue& v) noexcept;

std::string format_color(const ColorValue& v);
std::string format_color(const ParsedColor& v);

} // namespace obsharm
