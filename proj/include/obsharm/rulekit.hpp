#pragma once

#include <iosfwd>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace obsharm {
class CompassRose;
}

namespace obsharm::rulekit {

/// A real interval with independent openness on each end.
/// A closed interval with lower == upper denotes a single point.
struct Interval {
    double lower = 0;
    double upper = 0;
    bool lower_open = false;
    bool upper_open = false;

    static Interval closed(double lo, double hi) { return {lo, hi, false, false}; }
    static Interval open(double lo, double hi) { return {lo, hi, true, true}; }
    static Interval half_open(double lo, double hi) { return {lo, hi, false, true}; }

    bool contains(double v) const noexcept {
        return (lower_open ? v > lower : v >= lower) && (upper_open ? v < upper : v <= upper);
    }
    bool empty() const noexcept { return lower > upper || (lower == upper && (lower_open || upper_open)); }

    bool operator==(const Interval&) const = default;
};

/// Intersection of two intervals; may be empty.
Interval intersect(const Interval& a, const Interval& b) noexcept;
bool intersects(const Interval& a, const Interval& b) noexcept;

/// `[lo, hi)`, `(lo, hi]` and friends.
std::string to_string(const Interval& i);

/// Numeric interval mapped to a class label.
class RangeRule {
public:
    /// Throws std::invalid_argument unless lower < upper and label is non-empty.
    RangeRule(std::string label, Interval interval);

    const std::string& label() const noexcept { return label_; }
    const Interval& interval() const noexcept { return interval_; }
    bool matches(double v) const noexcept { return interval_.contains(v); }

    bool operator==(const RangeRule&) const = default;

private:
    std::string label_;
    Interval interval_;
};

/// An ordered collection of rules over a domain of valid inputs.
class RuleSet {
public:
    /// Throws std::invalid_argument if a rule leaves the domain.
    RuleSet(std::vector<RangeRule> rules, Interval domain);

    const std::vector<RangeRule>& rules() const noexcept { return rules_; }
    const Interval& domain() const noexcept { return domain_; }

private:
    std::vector<RangeRule> rules_;
    Interval domain_;
};

/// The full compass domain [0, 360).
inline constexpr Interval kCircleDomain{0.0, 360.0, false, true};

/// Every label whose interval contains `value`.
/// Throws DomainError if `value` lies outside `rules.domain()`.
std::set<std::string> classify(double value, const RuleSet& rules);

struct Overlap {
    RangeRule first;
    RangeRule second;
    Interval region;

    bool operator==(const Overlap&) const = default;
};

struct PartitionReport {
    bool exhaustive = false;
    bool disjoint = false;
    std::vector<Interval> gaps;    // maximal uncovered pieces of the domain, ascending
    std::vector<Overlap> overlaps; // one entry per overlapping rule pair, ascending by region
};

/// Checks whether the rules tile the domain. Endpoints are compared exactly,
/// no tolerance is applied.
PartitionReport check_partition(const RuleSet& rules);

/// Half-open rules `[center - w/2, center + w/2)` for every sector of the
/// rose, north split into two pieces sharing its label.
RuleSet compass_rules(const CompassRose& rose);
/// Same, for a raw sector count. Throws GranularityError unless 4, 8 or 16.
RuleSet compass_rules(int sector_count);

/// The single north-northeast rule with strict bounds (12, 33), kept as a
/// fixture for compatibility with the integer-bounded rule form.
RuleSet literal_nne_rule();

/// Text table, one rule per line:
///   label <TAB> lower <TAB> upper <TAB> lower_open <TAB> upper_open
/// An optional `@domain <TAB> lower <TAB> upper <TAB> lower_open <TAB> upper_open`
/// line sets the domain (default [0, 360)). Blank lines and `#` comments are skipped.
RuleSet read_rule_table(std::istream& in);
RuleSet parse_rule_table(std::string_view text);
void write_rule_table(std::ostream& out, const RuleSet& rules);

} // namespace obsharm::rulekit
