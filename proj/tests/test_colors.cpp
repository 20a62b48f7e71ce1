#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "frozen_values.hpp"
#include "obsharm/colors.hpp"
#include "obsharm/error.hpp"

using namespace obsharm;

namespace {

// Brute-force reference: full scan in floating point, first minimum wins.
NearestName scan(Rgb c, const ColorLexicon& lex) {
    NearestName best{"", std::numeric_limits<double>::infinity()};
    for (const auto& [name, rgb] : lex.entries()) {
        double d = std::sqrt(std::pow(c.r - rgb.r, 2) + std::pow(c.g - rgb.g, 2) + std::pow(c.b - rgb.b, 2));
        if (d < best.distance) best = {name, d};
    }
    return best;
}

Rgb rgb(int r, int g, int b) { return {static_cast<std::uint8_t>(r), static_cast<std::uint8_t>(g), static_cast<std::uint8_t>(b)}; }

} // namespace

TEST_CASE("lexicon contents") {
    const auto& lex = ColorLexicon::standard();
    CHECK(lex.size() == frozen::kLexiconSize);
    CHECK(name_to_rgb("red") == rgb(255, 0, 0));
    CHECK(name_to_rgb("lavender") == rgb(230, 230, 250));
    CHECK(name_to_rgb("REd") == rgb(255, 0, 0));
    CHECK(name_to_rgb("light sea green") == name_to_rgb("lightseagreen"));
    CHECK_THROWS_AS(name_to_rgb("blleu"), UnknownNameError);

    std::map<Rgb, int> groups;
    for (const auto& [name, c] : lex.entries()) ++groups[c];
    int shared = 0;
    for (const auto& [c, n] : groups) shared += n > 1;
    CHECK(shared == frozen::kAliasGroups);
}

TEST_CASE("parse_color") {
    auto coded = std::get<ColorValue>(parse_color("#FF0000"));
    CHECK(std::get<CodedColor>(coded).rgb == rgb(255, 0, 0));
    CHECK(std::get<CodedColor>(std::get<ColorValue>(parse_color("#FFF"))).rgb == rgb(255, 255, 255));
    auto seq = std::get<ColorSequence>(parse_color("yellow, blue, white"));
    REQUIRE(seq.colors.size() == 3);
    CHECK(std::get<NamedColor>(seq.colors[0]).name == "yellow");
    CHECK(std::get<NamedColor>(seq.colors[1]).name == "blue");
    CHECK(std::get<NamedColor>(seq.colors[2]).name == "white");
    auto odd = std::get<ColorValue>(parse_color("light blue-green"));
    CHECK(std::get<UnresolvedColorName>(odd).name == "light blue-green");
    CHECK_THROWS_AS(parse_color("#GG0000"), ParseError);
    CHECK_THROWS_AS(parse_color("#FF00"), ParseError);
    CHECK_THROWS_AS(parse_color("red,,blue"), ParseError);
    CHECK_THROWS_AS(parse_color(""), ParseError);
}

TEST_CASE("three-digit hex expands") {
    const char* digits = "0123456789abcdef";
    for (int i = 0; i < 16; i += 3)
        for (int j = 0; j < 16; j += 5)
            for (int k = 0; k < 16; k += 7) {
                std::string s3 = {'#', digits[i], digits[j], digits[k]};
                std::string s6 = {'#', digits[i], digits[i], digits[j], digits[j], digits[k], digits[k]};
                CHECK(parse_color(s3) == parse_color(s6));
            }
}

TEST_CASE("sequences keep length and order") {
    std::mt19937 rng(19);
    const auto& entries = ColorLexicon::standard().entries();
    std::vector<std::string> names;
    for (const auto& [n, c] : entries) names.push_back(n);
    std::uniform_int_distribution<std::size_t> pick(0, names.size() - 1);
    std::uniform_int_distribution<int> len(2, 7);
    for (int t = 0; t < 200; ++t) {
        std::vector<std::string> items(len(rng));
        std::string text;
        for (auto& it : items) {
            it = rng() % 3 == 0 ? to_hex(entries.at(names[pick(rng)])) : names[pick(rng)];
            text += (text.empty() ? "" : ", ") + it;
        }
        auto seq = std::get<ColorSequence>(parse_color(text));
        REQUIRE(seq.colors.size() == items.size());
        for (std::size_t i = 0; i < items.size(); ++i) CHECK(format_color(seq.colors[i]) == items[i]);
    }
}

TEST_CASE("nearest name fixtures") {
    auto red = nearest_name(rgb(255, 0, 0));
    CHECK(red.name == "red");
    CHECK(red.distance == 0);
    auto lav = nearest_name(rgb(230, 230, 250));
    CHECK(lav.name == "lavender");
    CHECK(lav.distance == 0);
    auto near = nearest_name(rgb(250, 5, 5));
    CHECK(near.name == frozen::kNearest250_5_5);
    CHECK(near.distance == doctest::Approx(frozen::kNearest250_5_5Distance));
    for (const auto& c : frozen::kNearestCases) {
        auto n = nearest_name(rgb(c.r, c.g, c.b));
        CHECK(n.name == c.name);
        CHECK(n.distance == doctest::Approx(c.distance));
    }
}

TEST_CASE("nearest name equals brute-force scan") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> ch(0, 255);
    const auto& lex = ColorLexicon::standard();
    for (int i = 0; i < 1000; ++i) {
        Rgb c = rgb(ch(rng), ch(rng), ch(rng));
        auto got = nearest_name(c);
        auto want = scan(c, lex);
        CHECK(got.name == want.name);
        CHECK(got.distance == doctest::Approx(want.distance));
    }
}

TEST_CASE("every name round trips up to aliases") {
    const auto& lex = ColorLexicon::standard();
    for (const auto& [name, c] : lex.entries()) {
        auto n = nearest_name(name_to_rgb(name));
        CHECK(n.distance == 0);
        CHECK(name_to_rgb(n.name) == c);
    }
}

TEST_CASE("hsv conversion") {
    auto h = rgb_to_hsv(rgb(255, 0, 0));
    CHECK(h.h == 0);
    CHECK(h.s == 1);
    CHECK(h.v == 1);
    std::mt19937 rng(29);
    std::uniform_int_distribution<int> ch(0, 255);
    for (int i = 0; i < 1000; ++i) {
        Rgb c = rgb(ch(rng), ch(rng), ch(rng));
        CHECK(hsv_to_rgb(rgb_to_hsv(c)) == c);
    }
}

TEST_CASE("custom lexicon") {
    auto lex = ColorLexicon::parse("# fireball tints\nsodium orange\tFF8C1A\nmagnesium\tE0F0FF\n");
    CHECK(lex.size() == 2);
    CHECK(std::get<NamedColor>(std::get<ColorValue>(parse_color("Sodium Orange", lex))).rgb == rgb(255, 140, 26));
    CHECK_THROWS_AS(ColorLexicon::parse("bad\tZZZZZZ\n"), ParseError);
    CHECK_THROWS_AS(nearest_name(rgb(0, 0, 0), ColorLexicon{}), std::invalid_argument);
}
