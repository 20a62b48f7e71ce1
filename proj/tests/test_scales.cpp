#include <doctest.h>

#include <random>

#include "frozen_values.hpp"
#include "obsharm/error.hpp"
#include "obsharm/scales.hpp"

using namespace obsharm;

namespace {

const OrdinalScale kThree{{"beginner", "intermediate", "expert"}};
const OrdinalScale kFive{{"poor", "fair", "average", "good", "excellent"}};
const IntervalScale kTen{1, 10, true};

std::size_t rank_of(const MappingOutcome<ScaleValue>& o) { return o.value->rank(); }

} // namespace

TEST_CASE("parse scale descriptors") {
    CHECK(std::get<IntervalScale>(parse_scale("interval(1, 10, integer)")) == kTen);
    CHECK(std::get<IntervalScale>(parse_scale("interval(0,1)")) == IntervalScale{0, 1, false});
    CHECK(std::get<OrdinalScale>(parse_scale("ordinal(beginner < intermediate < expert)")) == kThree);
    CHECK(format_scale(kFive) == "ordinal(poor < fair < average < good < excellent)");
    CHECK(format_scale(kTen) == "interval(1, 10, integer)");
    CHECK_THROWS_AS(parse_scale("interval(5, 1)"), ParseError);
    CHECK_THROWS_AS(parse_scale("interval(1.5, 10, integer)"), ParseError);
    CHECK_THROWS_AS(parse_scale("ordinal(only)"), ParseError);
    CHECK_THROWS_AS(parse_scale("ordinal(a < a)"), ParseError);
    CHECK_THROWS_AS(parse_scale("nominal(a < b)"), ParseError);
}

TEST_CASE("parse scale values") {
    CHECK(parse_scale_value("7", kTen).number() == 7);
    CHECK(parse_scale_value("Good", kFive).label() == "good");
    CHECK_THROWS_AS(parse_scale_value("7.5", kTen), ParseError);
    CHECK_THROWS_AS(parse_scale_value("11", kTen), ParseError);
    CHECK_THROWS_AS(parse_scale_value("superb", kFive), ParseError);
    CHECK_THROWS_AS(ScaleValue::interval(kTen, 0), std::invalid_argument);
}

TEST_CASE("interval to ordinal fixtures") {
    auto good = convert(ScaleValue::interval(kTen, 7), kFive);
    CHECK(rank_of(good) == frozen::kSevenOnTenToFiveLabels);
    CHECK(good.value->label() == "good");
    CHECK(good.lossiness == Lossiness::Lossy);

    IntervalScale five{1, 5, true};
    CHECK(rank_of(convert(ScaleValue::interval(five, 3), kThree)) == frozen::kThreeOnFiveToThreeLabels);
    CHECK(rank_of(convert(ScaleValue::interval(kTen, 7), kThree)) == frozen::kSevenOnTenToThreeLabels);
    CHECK(rank_of(convert(ScaleValue::interval(kTen, 1), kFive)) == 0);
    CHECK(rank_of(convert(ScaleValue::interval(kTen, 10), kFive)) == 4);
}

TEST_CASE("interval to interval") {
    IntervalScale five{1, 5, true}, three{1, 3, true};
    auto two = convert(ScaleValue::interval(five, 3), three);
    CHECK(two.value->number() == frozen::kThreeOnFiveToOneThree);
    CHECK(two.lossiness == Lossiness::Exact);
    auto rounded = convert(ScaleValue::interval(five, 2), three);
    CHECK(rounded.value->number() == 2);
    CHECK(rounded.lossiness == Lossiness::Lossy);
    auto same = convert(ScaleValue::interval(kTen, 4), kTen);
    CHECK(same.lossiness == Lossiness::Exact);
}

TEST_CASE("ordinal to ordinal") {
    auto o = convert(ScaleValue::ordinal(kThree, "expert"), kFive);
    CHECK(o.value->label() == "excellent");
    CHECK(convert(ScaleValue::ordinal(kThree, size_t{0}), kFive).value->label() == "poor");
    auto same = convert(ScaleValue::ordinal(kFive, "fair"), kFive);
    CHECK(same.lossiness == Lossiness::Exact);
}

TEST_CASE("reverse mapping is refused") {
    for (std::size_t i = 0; i < kThree.size(); ++i)
        CHECK_THROWS_AS(convert(ScaleValue::ordinal(kThree, i), IntervalScale{1, 5, false}), ReverseMappingError);
    auto mid = convert(ScaleValue::ordinal(kThree, "intermediate"), IntervalScale{1, 5, false}, ConvertOptions{true});
    CHECK(mid.value->number() == doctest::Approx(3.0));
    CHECK(mid.lossiness == Lossiness::Lossy);
}

TEST_CASE("monotone with endpoint fidelity") {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> lo_d(-50, 50), width_d(0.5, 100);
    std::uniform_int_distribution<int> k_d(2, 9);
    for (int trial = 0; trial < 200; ++trial) {
        IntervalScale src{lo_d(rng), 0, false};
        src.max = src.min + width_d(rng);
        OrdinalScale dst;
        int k = k_d(rng);
        for (int i = 0; i < k; ++i) dst.labels.push_back("l" + std::to_string(i));
        IntervalScale tgt{lo_d(rng), 0, false};
        tgt.max = tgt.min + width_d(rng);

        CHECK(rank_of(convert(ScaleValue::interval(src, src.min), dst)) == 0);
        CHECK(rank_of(convert(ScaleValue::interval(src, src.max), dst)) == dst.size() - 1);
        CHECK(convert(ScaleValue::interval(src, src.min), tgt).value->number() == doctest::Approx(tgt.min));
        CHECK(convert(ScaleValue::interval(src, src.max), tgt).value->number() == doctest::Approx(tgt.max));

        std::uniform_real_distribution<double> v_d(src.min, src.max);
        for (int j = 0; j < 20; ++j) {
            double x = v_d(rng), y = v_d(rng);
            if (x > y) std::swap(x, y);
            CHECK(rank_of(convert(ScaleValue::interval(src, x), dst)) <= rank_of(convert(ScaleValue::interval(src, y), dst)));
            CHECK(convert(ScaleValue::interval(src, x), tgt).value->number() <=
                  convert(ScaleValue::interval(src, y), tgt).value->number());
        }
    }
}

TEST_CASE("round trip through a third scale") {
    IntervalScale a{0, 100, false}, b{-3, 7, false};
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> v(0, 100);
    for (int i = 0; i < 500; ++i) {
        double x = v(rng);
        auto there = convert(ScaleValue::interval(a, x), b);
        auto back = convert(*there.value, a);
        CHECK(back.value->number() == doctest::Approx(x).epsilon(1e-12));
    }
    IntervalScale ints{1, 10, true}, wide{0, 900, true};
    for (int x = 1; x <= 10; ++x) {
        auto there = convert(ScaleValue::interval(ints, x), wide);
        CHECK(convert(*there.value, ints).value->number() == x);
    }
}

TEST_CASE("normalized regions") {
    auto r = normalized_region(ScaleValue::ordinal(kThree, "intermediate"));
    CHECK(r.lower == doctest::Approx(1.0 / 3));
    CHECK(r.upper == doctest::Approx(2.0 / 3));
    CHECK(r.upper_open);
    auto last = normalized_region(ScaleValue::ordinal(kThree, "expert"));
    CHECK_FALSE(last.upper_open);
    auto seven = normalized_region(ScaleValue::interval(kTen, 7));
    CHECK(seven.lower == doctest::Approx(5.5 / 9));
    CHECK(seven.upper == doctest::Approx(6.5 / 9));
    auto cont = normalized_region(ScaleValue::interval(IntervalScale{0, 4, false}, 1));
    CHECK(cont.lower == cont.upper);
}
