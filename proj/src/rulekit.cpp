#include "obsharm/rulekit.hpp"

#include <algorithm>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "obsharm/compass.hpp"
#include "obsharm/detail/text.hpp"
#include "obsharm/error.hpp"

namespace obsharm::rulekit {

using detail::format_number;

Interval intersect(const Interval& a, const Interval& b) noexcept {
    Interval r;
    if (a.lower > b.lower) {
        r.lower = a.lower;
        r.lower_open = a.lower_open;
    } else if (b.lower > a.lower) {
        r.lower = b.lower;
        r.lower_open = b.lower_open;
    } else {
        r.lower = a.lower;
        r.lower_open = a.lower_open || b.lower_open;
    }
    if (a.upper < b.upper) {
        r.upper = a.upper;
        r.upper_open = a.upper_open;
    } else if (b.upper < a.upper) {
        r.upper = b.upper;
        r.upper_open = b.upper_open;
    } else {
        r.upper = a.upper;
        r.upper_open = a.upper_open || b.upper_open;
    }
    return r;
}

bool intersects(const Interval& a, const Interval& b) noexcept { return !intersect(a, b).empty(); }

std::string to_string(const Interval& i) {
    std::string s;
    s += i.lower_open ? '(' : '[';
    s += format_number(i.lower);
    s += ", ";
    s += format_number(i.upper);
    s += i.upper_open ? ')' : ']';
    return s;
}

RangeRule::RangeRule(std::string label, Interval interval) : label_(std::move(label)), interval_(interval) {
    if (label_.empty()) throw std::invalid_argument("rule label must be non-empty");
    if (!(interval_.lower < interval_.upper))
        throw std::invalid_argument("rule '" + label_ + "' needs lower < upper, got " + to_string(interval_));
}

namespace {

bool subset(const Interval& inner, const Interval& outer) noexcept {
    bool lower_ok = inner.lower > outer.lower || (inner.lower == outer.lower && (inner.lower_open || !outer.lower_open));
    bool upper_ok = inner.upper < outer.upper || (inner.upper == outer.upper && (inner.upper_open || !outer.upper_open));
    return lower_ok && upper_ok;
}

} // namespace

RuleSet::RuleSet(std::vector<RangeRule> rules, Interval domain) : rules_(std::move(rules)), domain_(domain) {
    if (domain_.empty()) throw std::invalid_argument("rule set domain is empty");
    for (const auto& r : rules_)
        if (!subset(r.interval(), domain_))
            throw std::invalid_argument("rule '" + r.label() + "' " + to_string(r.interval()) + " leaves domain " +
                                        to_string(domain_));
}

std::set<std::string> classify(double value, const RuleSet& rules) {
    if (!rules.domain().contains(value))
        throw DomainError(format_number(value) + " lies outside domain " + to_string(rules.domain()));
    std::set<std::string> labels;
    for (const auto& r : rules.rules())
        if (r.matches(value)) labels.insert(r.label());
    return labels;
}

PartitionReport check_partition(const RuleSet& rules) {
    const Interval& dom = rules.domain();

    std::vector<double> points{dom.lower, dom.upper};
    for (const auto& r : rules.rules()) {
        points.push_back(std::clamp(r.interval().lower, dom.lower, dom.upper));
        points.push_back(std::clamp(r.interval().upper, dom.lower, dom.upper));
    }
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());

    // Walk the elementary pieces {p0}, (p0, p1), {p1}, ... and merge the
    // uncovered ones into maximal gaps.
    PartitionReport report;
    std::optional<Interval> gap;
    auto close_gap = [&] {
        if (gap) report.gaps.push_back(*gap);
        gap.reset();
    };
    auto uncovered = [&](double lo, bool lo_open, double hi, bool hi_open) {
        if (!gap) gap = Interval{lo, hi, lo_open, hi_open};
        gap->upper = hi;
        gap->upper_open = hi_open;
    };

    for (std::size_t k = 0; k < points.size(); ++k) {
        const double p = points[k];
        if (dom.contains(p)) {
            bool covered = std::any_of(rules.rules().begin(), rules.rules().end(),
                                       [&](const RangeRule& r) { return r.matches(p); });
            covered ? close_gap() : uncovered(p, false, p, false);
        }
        if (k + 1 < points.size()) {
            const double q = points[k + 1];
            bool covered = std::any_of(rules.rules().begin(), rules.rules().end(), [&](const RangeRule& r) {
                return r.interval().lower <= p && r.interval().upper >= q;
            });
            covered ? close_gap() : uncovered(p, true, q, true);
        }
    }
    close_gap();

    const auto& rs = rules.rules();
    for (std::size_t i = 0; i < rs.size(); ++i)
        for (std::size_t j = i + 1; j < rs.size(); ++j) {
            Interval region = intersect(rs[i].interval(), rs[j].interval());
            if (!region.empty()) report.overlaps.push_back({rs[i], rs[j], region});
        }
    std::stable_sort(report.overlaps.begin(), report.overlaps.end(), [](const Overlap& a, const Overlap& b) {
        if (a.region.lower != b.region.lower) return a.region.lower < b.region.lower;
        return a.region.upper < b.region.upper;
    });

    report.exhaustive = report.gaps.empty();
    report.disjoint = report.overlaps.empty();
    return report;
}

RuleSet compass_rules(const CompassRose& rose) {
    const double width = rose.sector_width();
    const double half = width / 2;
    std::vector<RangeRule> rules;
    for (const auto& sector : rose.sectors()) {
        const double center = sector.center().value();
        if (sector.index() == 0) {
            rules.emplace_back(std::string(sector.abbreviation()), Interval::half_open(360.0 - half, 360.0));
            rules.emplace_back(std::string(sector.abbreviation()), Interval::half_open(0.0, half));
        } else {
            rules.emplace_back(std::string(sector.abbreviation()), Interval::half_open(center - half, center + half));
        }
    }
    return RuleSet(std::move(rules), kCircleDomain);
}

RuleSet compass_rules(int sector_count) { return compass_rules(CompassRose(sector_count)); }

RuleSet literal_nne_rule() { return RuleSet({RangeRule("NNE", Interval::open(12, 33))}, kCircleDomain); }

namespace {

bool parse_flag(std::string_view s, std::size_t offset) {
    auto t = detail::to_lower(detail::trim(s));
    if (t == "true" || t == "1") return true;
    if (t == "false" || t == "0") return false;
    throw ParseError(offset, "expected true/false, got '" + std::string(s) + "'");
}

double parse_bound(std::string_view s, std::size_t offset) {
    auto v = detail::parse_number(s);
    if (!v) throw ParseError(offset, "expected a number, got '" + std::string(s) + "'");
    return *v;
}

Interval parse_interval_fields(const std::vector<std::string_view>& f, std::size_t first, std::size_t offset) {
    return Interval{parse_bound(f[first], offset), parse_bound(f[first + 1], offset),
                    parse_flag(f[first + 2], offset), parse_flag(f[first + 3], offset)};
}

} // namespace

RuleSet read_rule_table(std::istream& in) {
    std::vector<RangeRule> rules;
    Interval domain = kCircleDomain;
    std::string line;
    std::size_t offset = 0;
    while (std::getline(in, line)) {
        const std::size_t line_offset = offset;
        offset += line.size() + 1;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto body = detail::trim(line);
        if (body.empty() || body.front() == '#') continue;

        auto fields = detail::split(line, '\t');
        if (fields.size() != 5)
            throw ParseError(line_offset, "expected 5 tab-separated fields, got " + std::to_string(fields.size()));
        auto label = detail::trim(fields[0]);
        if (label == "@domain") {
            domain = parse_interval_fields(fields, 1, line_offset);
            continue;
        }
        try {
            rules.emplace_back(std::string(label), parse_interval_fields(fields, 1, line_offset));
        } catch (const std::invalid_argument& e) {
            throw ParseError(line_offset, e.what());
        }
    }
    try {
        return RuleSet(std::move(rules), domain);
    } catch (const std::invalid_argument& e) {
        throw ParseError(0, e.what());
    }
}

RuleSet parse_rule_table(std::string_view text) {
    std::istringstream in{std::string(text)};
    return read_rule_table(in);
}

void write_rule_table(std::ostream& out, const RuleSet& rules) {
    auto flag = [](bool b) { return b ? "true" : "false"; };
    const auto& d = rules.domain();
    out << "@domain\t" << format_number(d.lower) << '\t' << format_number(d.upper) << '\t' << flag(d.lower_open)
        << '\t' << flag(d.upper_open) << '\n';
    for (const auto& r : rules.rules()) {
        const auto& i = r.interval();
        out << r.label() << '\t' << format_number(i.lower) << '\t' << format_number(i.upper) << '\t'
            << flag(i.lower_open) << '\t' << flag(i.upper_open) << '\n';
    }
}

} // namespace obsharm::rulekit
