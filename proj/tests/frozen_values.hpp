// Generated by tests/oracles/derive_frozen.py. Do not edit.
#pragma once

#include <array>

namespace frozen {

// [lower, upper) of every sector, lower may exceed upper when wrapping north.
struct SectorBounds { const char* abbr; double lower; double upper; };
inline constexpr std::array<SectorBounds, 4> kRose4{{
    {"N", 315.0, 45.0},
    {"E", 45.0, 135.0},
    {"S", 135.0, 225.0},
    {"W", 225.0, 315.0},
}};
inline constexpr std::array<SectorBounds, 8> kRose8{{
    {"N", 337.5, 22.5},
    {"NE", 22.5, 67.5},
    {"E", 67.5, 112.5},
    {"SE", 112.5, 157.5},
    {"S", 157.5, 202.5},
    {"SW", 202.5, 247.5},
    {"W", 247.5, 292.5},
    {"NW", 292.5, 337.5},
}};
inline constexpr std::array<SectorBounds, 16> kRose16{{
    {"N", 348.75, 11.25},
    {"NNE", 11.25, 33.75},
    {"NE", 33.75, 56.25},
    {"ENE", 56.25, 78.75},
    {"E", 78.75, 101.25},
    {"ESE", 101.25, 123.75},
    {"SE", 123.75, 146.25},
    {"SSE", 146.25, 168.75},
    {"S", 168.75, 191.25},
    {"SSW", 191.25, 213.75},
    {"SW", 213.75, 236.25},
    {"WSW", 236.25, 258.75},
    {"W", 258.75, 281.25},
    {"WNW", 281.25, 303.75},
    {"NW", 303.75, 326.25},
    {"NNW", 326.25, 348.75},
}};

// coarsen(s16, 8) as 8-rose indices, -1 padding.
inline constexpr std::array<std::array<int, 2>, 16> kCoarsen16to8{{
    {0, -1},
    {0, 1},
    {1, -1},
    {1, 2},
    {2, -1},
    {2, 3},
    {3, -1},
    {3, 4},
    {4, -1},
    {4, 5},
    {5, -1},
    {5, 6},
    {6, -1},
    {6, 7},
    {7, -1},
    {0, 7},
}};

inline constexpr const char* kNearest250_5_5 = "red";
inline constexpr double kNearest250_5_5Distance = 8.660254037844387;
struct NearestCase { int r, g, b; const char* name; double distance; };
inline constexpr std::array<NearestCase, 5> kNearestCases{{
    {0, 0, 1, "black", 1.0},
    {128, 128, 129, "gray", 1.0},
    {200, 100, 50, "chocolate", 22.9128784747792},
    {17, 240, 3, "lime", 22.869193252058544},
    {255, 254, 250, "snow", 4.0},
}};
inline constexpr int kLexiconSize = 148;
inline constexpr int kAliasGroups = 9;

inline constexpr double kJenaLatDms = 50.9271;
inline constexpr double kJenaLonDms = 11.5892;

inline constexpr int kSevenOnTenToFiveLabels = 3;
inline constexpr int kThreeOnFiveToThreeLabels = 1;
inline constexpr double kThreeOnFiveToOneThree = 2.0;
inline constexpr int kSevenOnTenToThreeLabels = 2;

inline constexpr double kZeroPoint033Minute = 1.98;
inline constexpr double kOnePoint5Hour = 5400.0;
inline constexpr double kTwelveMs = 0.012;

} // namespace frozen
