#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "obsharm/compass.hpp"
#include "obsharm/error.hpp"
#include "obsharm/rulekit.hpp"

using namespace obsharm;
using namespace obsharm::rulekit;

namespace {

// Naive membership scan, used as the oracle for classify.
std::set<std::string> scan(double v, const RuleSet& rs) {
    std::set<std::string> out;
    for (const auto& r : rs.rules()) {
        const auto& i = r.interval();
        bool lo = i.lower_open ? v > i.lower : v >= i.lower;
        bool hi = i.upper_open ? v < i.upper : v <= i.upper;
        if (lo && hi) out.insert(r.label());
    }
    return out;
}

const Interval* interval_for(const RuleSet& rs, const std::string& label, double probe) {
    for (const auto& r : rs.rules())
        if (r.label() == label && r.matches(probe)) return &r.interval();
    return nullptr;
}

} // namespace

TEST_CASE("literal NNE rule") {
    auto rs = literal_nne_rule();
    CHECK(classify(20, rs) == std::set<std::string>{"NNE"});
    CHECK(classify(12, rs).empty());
    CHECK(classify(33, rs).empty());
    CHECK(classify(12.001, rs) == std::set<std::string>{"NNE"});
    CHECK(classify(32.999, rs) == std::set<std::string>{"NNE"});
    CHECK(classify(std::nextafter(12.0, 13.0), rs).size() == 1);
    CHECK(classify(std::nextafter(33.0, 32.0), rs).size() == 1);
}

TEST_CASE("literal rule alone leaves gaps") {
    auto rep = check_partition(literal_nne_rule());
    CHECK_FALSE(rep.exhaustive);
    CHECK(rep.disjoint);
    REQUIRE(rep.gaps.size() == 2);
    CHECK(rep.gaps[0] == Interval::closed(0, 12));
    CHECK(rep.gaps[1] == Interval{33, 360, false, true});
}

TEST_CASE("constructed overlap is reported") {
    RuleSet rs({RangeRule("a", Interval::open(0, 10)), RangeRule("b", Interval::open(5, 15))}, Interval::closed(0, 20));
    auto rep = check_partition(rs);
    CHECK_FALSE(rep.disjoint);
    CHECK_FALSE(rep.exhaustive);
    REQUIRE(rep.overlaps.size() == 1);
    CHECK(rep.overlaps[0].region == Interval::open(5, 10));
    CHECK(rep.overlaps[0].first.label() == "a");
    CHECK(rep.overlaps[0].second.label() == "b");
}

TEST_CASE("single shared endpoint counts as overlap") {
    RuleSet rs({RangeRule("a", Interval::closed(0, 5)), RangeRule("b", Interval::closed(5, 10))}, Interval::closed(0, 10));
    auto rep = check_partition(rs);
    CHECK(rep.exhaustive);
    CHECK_FALSE(rep.disjoint);
    REQUIRE(rep.overlaps.size() == 1);
    CHECK(rep.overlaps[0].region == Interval::closed(5, 5));
}

TEST_CASE("open endpoints leave point gaps") {
    RuleSet rs({RangeRule("a", Interval::half_open(0, 5)), RangeRule("b", Interval::open(5, 10))}, Interval::closed(0, 10));
    auto rep = check_partition(rs);
    CHECK_FALSE(rep.exhaustive);
    REQUIRE(rep.gaps.size() == 2);
    CHECK(rep.gaps[0] == Interval::closed(5, 5));
    CHECK(rep.gaps[1] == Interval::closed(10, 10));
}

TEST_CASE("generated compass rules partition the circle") {
    for (int n : {4, 8, 16}) {
        auto rep = check_partition(compass_rules(n));
        CHECK(rep.exhaustive);
        CHECK(rep.disjoint);
        CHECK(rep.gaps.empty());
        CHECK(rep.overlaps.empty());
    }
    CHECK_THROWS_AS(compass_rules(12), GranularityError);
}

TEST_CASE("generated rule bounds") {
    auto r16 = compass_rules(16);
    const Interval* nne = interval_for(r16, "NNE", 22.5);
    REQUIRE(nne);
    CHECK(*nne == Interval::half_open(11.25, 33.75));

    auto r4 = compass_rules(4);
    const Interval* n_hi = interval_for(r4, "N", 359);
    const Interval* n_lo = interval_for(r4, "N", 0);
    REQUIRE(n_hi);
    REQUIRE(n_lo);
    CHECK(*n_hi == Interval::half_open(315, 360));
    CHECK(*n_lo == Interval::half_open(0, 45));
}

TEST_CASE("classify rejects values outside the domain") {
    auto rs = compass_rules(8);
    CHECK_THROWS_AS(classify(360, rs), DomainError);
    CHECK_THROWS_AS(classify(-0.5, rs), DomainError);
    CHECK_THROWS_AS(classify(std::nan(""), rs), DomainError);
}

TEST_CASE("classify matches a naive scan") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> angle(0, 360);
    std::vector<RuleSet> sets{compass_rules(4), compass_rules(8), compass_rules(16), literal_nne_rule()};
    sets.emplace_back(std::vector<RangeRule>{RangeRule("a", Interval::open(0, 10)), RangeRule("b", Interval::open(5, 15)),
                                             RangeRule("c", Interval::closed(200, 300))},
                      kCircleDomain);
    for (const auto& rs : sets) {
        for (int i = 0; i < 10000; ++i) {
            double v = angle(rng);
            CHECK(classify(v, rs) == scan(v, rs));
        }
        for (const auto& r : rs.rules())
            for (double v : {r.interval().lower, r.interval().upper})
                if (rs.domain().contains(v)) CHECK(classify(v, rs) == scan(v, rs));
    }
}

TEST_CASE("classify ignores rule order") {
    auto base = compass_rules(16);
    auto rules = base.rules();
    std::mt19937 rng(3);
    std::shuffle(rules.begin(), rules.end(), rng);
    RuleSet shuffled(rules, base.domain());
    for (int k = 0; k < 36000; ++k) {
        double v = k * 0.01;
        CHECK(classify(v, base) == classify(v, shuffled));
    }
}

TEST_CASE("rules must stay inside their domain") {
    CHECK_THROWS_AS(RuleSet({RangeRule("x", Interval::closed(350, 370))}, kCircleDomain), std::invalid_argument);
    CHECK_THROWS_AS(RangeRule("x", Interval::closed(5, 5)), std::invalid_argument);
    CHECK_THROWS_AS(RangeRule("", Interval::closed(0, 5)), std::invalid_argument);
}

TEST_CASE("rule table round trip") {
    auto rs = compass_rules(8);
    std::ostringstream out;
    write_rule_table(out, rs);
    auto back = parse_rule_table(out.str());
    CHECK(back.rules() == rs.rules());
    CHECK(back.domain() == rs.domain());

    auto custom = parse_rule_table("# expertise bands\n@domain\t1\t10\tfalse\tfalse\nlow\t1\t5\tfalse\ttrue\nhigh\t5\t10\t0\t0\n");
    CHECK(custom.domain() == Interval::closed(1, 10));
    CHECK(classify(5, custom) == std::set<std::string>{"high"});
    CHECK(check_partition(custom).exhaustive);
}

TEST_CASE("malformed rule tables") {
    CHECK_THROWS_AS(parse_rule_table("NNE\t12\n"), ParseError);
    CHECK_THROWS_AS(parse_rule_table("NNE\tx\t33\ttrue\ttrue\n"), ParseError);
    CHECK_THROWS_AS(parse_rule_table("NNE\t12\t33\tmaybe\ttrue\n"), ParseError);
    CHECK_THROWS_AS(parse_rule_table("NNE\t33\t12\ttrue\ttrue\n"), ParseError);
}
