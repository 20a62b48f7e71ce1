#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <random>

#include "frozen_values.hpp"
#include "obsharm/error.hpp"
#include "obsharm/timespan.hpp"

using namespace obsharm;

namespace {

double secs(std::string_view s) { return std::get<Seconds>(parse_duration(s)).value; }

} // namespace

TEST_CASE("sample durations") {
    CHECK(secs("0.033 minute") == frozen::kZeroPoint033Minute);
    CHECK(secs("0.033 minute") == 1.98);
    CHECK(secs("1 second") == 1.0);
    CHECK(std::holds_alternative<UnknownDuration>(parse_duration("unknown")));
    CHECK(std::holds_alternative<UnknownDuration>(parse_duration(" Unknown ")));
    CHECK(secs("0 s") == 0);
}

TEST_CASE("units") {
    CHECK(secs("1.5 h") == frozen::kOnePoint5Hour);
    CHECK(secs("1.5 hours") == frozen::kOnePoint5Hour);
    CHECK(secs("12 ms") == frozen::kTwelveMs);
    CHECK(secs("2min") == 120);
    CHECK(secs("3 sec") == 3);
    CHECK(secs("0.5 seconds") == 0.5);
}

TEST_CASE("rejects") {
    CHECK_THROWS_AS(parse_duration("1 parsec"), ParseError);
    CHECK_THROWS_AS(parse_duration("-1 s"), ParseError);
    CHECK_THROWS_AS(parse_duration("s"), ParseError);
    CHECK_THROWS_AS(parse_duration("5"), ParseError);
    CHECK_THROWS_AS(parse_duration(""), ParseError);
    CHECK_THROWS_AS(parse_duration("1e400 s"), ParseError);
}

TEST_CASE("minutes are sixty seconds") {
    std::mt19937_64 rng(43);
    std::uniform_int_distribution<int> num(0, 1 << 20), shift(0, 10);
    for (int i = 0; i < 1000; ++i) {
        double x = std::ldexp(num(rng), -shift(rng));
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.10f", x); // exact: x has at most 10 binary places
        std::string text = buf;
        CHECK(secs(text + " min") == 60 * secs(text + " s"));
    }
    std::uniform_int_distribution<int> milli(0, 100000);
    for (int i = 0; i < 1000; ++i) {
        int m = milli(rng);
        std::string text = std::to_string(m / 1000) + "." + std::to_string(1000 + m % 1000).substr(1);
        CHECK(secs(text + " min") == static_cast<double>(m * 60) / 1000);
    }
}

TEST_CASE("format then parse") {
    CHECK(format_duration(Seconds{1.98}) == "1.98 s");
    CHECK(format_duration(UnknownDuration{}) == "unknown");
    std::mt19937_64 rng(47);
    std::uniform_int_distribution<int> milli(0, 10000000);
    for (int i = 0; i < 1000; ++i) {
        double v = milli(rng) / 1000.0;
        CHECK(std::abs(secs(format_duration(Seconds{v})) - v) < 1e-9);
    }
}
