#include <algorithm>
#include <cmath>

#include "obsharm/detail/text.hpp"
#include "obsharm/error.hpp"
#include "obsharm/harmonizer.hpp"

namespace obsharm {

std::string_view to_string(Verdict v) noexcept {
    switch (v) {
    case Verdict::Compatible: return "compatible";
    case Verdict::Incompatible: return "incompatible";
    case Verdict::Indeterminate: return "indeterminate";
    }
    return "indeterminate";
}

namespace {

bool is_direction_value(const CanonicalValue& v) {
    return std::holds_alternative<AngleDeg>(v) || std::holds_alternative<Sector>(v) ||
           std::holds_alternative<SectorSpan>(v) || std::holds_alternative<BearingSpan>(v) ||
           std::holds_alternative<SectorSet>(v) || std::holds_alternative<RelativeDirection>(v) ||
           std::holds_alternative<RelativeSpan>(v);
}

bool belongs(const CanonicalValue& v, Concept c) {
    switch (c) {
    case Concept::MovingDirection:
    case Concept::ViewingDirection: return is_direction_value(v);
    case Concept::Expertise: return std::holds_alternative<ScaleValue>(v);
    case Concept::Visual: return std::holds_alternative<ColorValue>(v) || std::holds_alternative<ColorSequence>(v);
    case Concept::Location: return std::holds_alternative<GeoPoint>(v);
    case Concept::Duration: return std::holds_alternative<Seconds>(v) || std::holds_alternative<Unknown>(v);
    }
    return false;
}

Comparison verdict(Verdict v, std::string reason, std::optional<CanonicalValue> common = std::nullopt) {
    Comparison c;
    c.verdict = v;
    c.reason = std::move(reason);
    if (v == Verdict::Compatible) c.common = std::move(common);
    return c;
}

// Picks the wider of two representations; ties fall back to text order so
// the choice does not depend on argument order.
const CanonicalValue& wider(const CanonicalValue& a, double width_a, const CanonicalValue& b, double width_b) {
    if (width_a != width_b) return width_a > width_b ? a : b;
    return format_canonical(a) <= format_canonical(b) ? a : b;
}

// --- directions -------------------------------------------------------------

struct Arcs {
    std::vector<Arc> arcs;
    std::string unavailable; // non-empty when the value has no bearing interval
};

Arcs arcs_of(const CanonicalValue& v) {
    try {
        if (const auto* a = std::get_if<AngleDeg>(&v)) return {{Arc{a->value(), a->value(), false, false}}, {}};
        if (const auto* s = std::get_if<Sector>(&v)) return {{interval_of_sector(*s)}, {}};
        if (const auto* sp = std::get_if<SectorSpan>(&v)) {
            if (sp->from == sp->to) return {{interval_of_sector(sp->from)}, {}};
            return {{shorter_arc(sp->from.center(), sp->to.center())}, {}};
        }
        if (const auto* bs = std::get_if<BearingSpan>(&v)) return {{shorter_arc(bs->from, bs->to)}, {}};
        if (const auto* set = std::get_if<SectorSet>(&v)) {
            Arcs out;
            for (const auto& s : set->sectors) out.arcs.push_back(interval_of_sector(s));
            return out;
        }
    } catch (const AmbiguousSpanError& e) {
        return {{}, e.what()};
    }
    return {{}, "'" + format_canonical(v) + "' is relative to the observer and has no compass bearing"};
}

double total_width(const std::vector<Arc>& arcs) {
    double w = 0;
    for (const auto& a : arcs) w += a.width();
    return w;
}

Comparison compare_directions(const CanonicalValue& a, const CanonicalValue& b) {
    Arcs aa = arcs_of(a), ab = arcs_of(b);
    if (!aa.unavailable.empty()) return verdict(Verdict::Indeterminate, aa.unavailable);
    if (!ab.unavailable.empty()) return verdict(Verdict::Indeterminate, ab.unavailable);
    for (const auto& x : aa.arcs)
        for (const auto& y : ab.arcs)
            if (intersects(x, y))
                return verdict(Verdict::Compatible, "bearing intervals " + to_string(x) + " and " + to_string(y) + " intersect",
                               wider(a, total_width(aa.arcs), b, total_width(ab.arcs)));
    return verdict(Verdict::Incompatible, "bearing intervals of '" + format_canonical(a) + "' and '" +
                                              format_canonical(b) + "' do not intersect");
}

// --- scales -------------------------------------------------------------------

Comparison compare_scales(const CanonicalValue& a, const CanonicalValue& b) {
    const auto& va = std::get<ScaleValue>(a);
    const auto& vb = std::get<ScaleValue>(b);
    const rulekit::Interval ra = normalized_region(va), rb = normalized_region(vb);
    const bool point_a = ra.lower == ra.upper, point_b = rb.lower == rb.upper;

    bool ok;
    if (point_a && point_b)
        ok = std::fabs(ra.lower - rb.lower) <= 1e-9;
    else if (point_a)
        ok = rb.contains(ra.lower);
    else if (point_b)
        ok = ra.contains(rb.lower);
    else
        ok = std::min(ra.upper, rb.upper) - std::max(ra.lower, rb.lower) > 0;

    std::string reason = "normalized regions " + rulekit::to_string(ra) + " and " + rulekit::to_string(rb) +
                         (ok ? " overlap" : " are disjoint");
    if (!ok) return verdict(Verdict::Incompatible, std::move(reason));
    return verdict(Verdict::Compatible, std::move(reason), wider(a, ra.upper - ra.lower, b, rb.upper - rb.lower));
}

// --- colors -------------------------------------------------------------------

std::vector<ColorValue> color_list(const CanonicalValue& v) {
    if (const auto* c = std::get_if<ColorValue>(&v)) return {*c};
    return std::get<ColorSequence>(v).colors;
}

// Named colors stand for a neighbourhood of codes, so they count as wider.
const ColorValue& wider_color(const ColorValue& x, const ColorValue& y) {
    const bool nx = std::holds_alternative<NamedColor>(x), ny = std::holds_alternative<NamedColor>(y);
    if (nx != ny) return nx ? x : y;
    return format_color(x) <= format_color(y) ? x : y;
}

Comparison compare_colors(const CanonicalValue& a, const CanonicalValue& b, const AlignOptions& options) {
    const auto xs = color_list(a), ys = color_list(b);
    if (xs.size() != ys.size())
        return verdict(Verdict::Incompatible, "color sequences differ in length (" + std::to_string(xs.size()) +
                                                  " vs " + std::to_string(ys.size()) + ")");
    bool indeterminate = false;
    std::vector<ColorValue> common;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const Rgb* x = rgb_of(xs[i]);
        const Rgb* y = rgb_of(ys[i]);
        if (!x || !y) {
            indeterminate = true;
            continue;
        }
        const auto nx = nearest_name(*x), ny = nearest_name(*y);
        if (nx.name != ny.name && rgb_distance(*x, *y) > options.color_threshold)
            return verdict(Verdict::Incompatible, "color " + std::to_string(i + 1) + ": nearest names '" + nx.name +
                                                      "' and '" + ny.name + "' differ");
        common.push_back(wider_color(xs[i], ys[i]));
    }
    if (indeterminate) return verdict(Verdict::Indeterminate, "an unresolved color name has no code to compare");
    std::optional<CanonicalValue> shared;
    if (std::holds_alternative<ColorValue>(a) && std::holds_alternative<ColorValue>(b))
        shared = common.front();
    else
        shared = ColorSequence{common};
    return verdict(Verdict::Compatible, "nearest names agree", std::move(shared));
}

// --- locations and durations --------------------------------------------------

Comparison compare_locations(const CanonicalValue& a, const CanonicalValue& b, const AlignOptions& options) {
    const auto& p = std::get<GeoPoint>(a);
    const auto& q = std::get<GeoPoint>(b);
    if (p.frame() != q.frame())
        return verdict(Verdict::Indeterminate, std::string("frames ") + std::string(to_string(p.frame())) + " and " +
                                                   std::string(to_string(q.frame())) + " are not converted");
    double dlon = std::fabs(p.lon() - q.lon());
    dlon = std::min(dlon, 360 - dlon);
    const bool ok = std::fabs(p.lat() - q.lat()) <= options.location_tolerance_deg && dlon <= options.location_tolerance_deg;
    std::string reason = "points differ by " + detail::format_number(std::fabs(p.lat() - q.lat())) + " deg latitude, " +
                         detail::format_number(dlon) + " deg longitude";
    if (!ok) return verdict(Verdict::Incompatible, std::move(reason));
    return verdict(Verdict::Compatible, std::move(reason), wider(a, 0, b, 0));
}

Comparison compare_durations(const CanonicalValue& a, const CanonicalValue& b) {
    if (std::holds_alternative<Unknown>(a) || std::holds_alternative<Unknown>(b))
        return verdict(Verdict::Indeterminate, "duration is unknown");
    const double x = std::get<Seconds>(a).value, y = std::get<Seconds>(b).value;
    const bool ok = std::fabs(x - y) <= 1e-9 * std::max({1.0, x, y});
    std::string reason = format_duration(Seconds{x}) + " vs " + format_duration(Seconds{y});
    if (!ok) return verdict(Verdict::Incompatible, std::move(reason));
    return verdict(Verdict::Compatible, std::move(reason), wider(a, 0, b, 0));
}

} // namespace

Comparison compare_values(const CanonicalValue& a, const CanonicalValue& b, Concept key_concept,
                          const AlignOptions& options) {
    for (const auto* v : {&a, &b})
        if (!belongs(*v, key_concept))
            throw ConceptMismatchError("a " + std::string(kind_of(*v)) + " value cannot be aligned as " +
                                       std::string(to_string(key_concept)));
    switch (key_concept) {
    case Concept::MovingDirection:
    case Concept::ViewingDirection: return compare_directions(a, b);
    case Concept::Expertise: return compare_scales(a, b);
    case Concept::Visual: return compare_colors(a, b, options);
    case Concept::Location: return compare_locations(a, b, options);
    case Concept::Duration: return compare_durations(a, b);
    }
    return verdict(Verdict::Indeterminate, "unsupported concept");
}

AlignmentTable align_cells(std::vector<HarmonizedCell> cells, Concept key_concept, const AlignOptions& options) {
    for (const auto& c : cells)
        if (c.key_concept != key_concept)
            throw ConceptMismatchError("cell " + c.source_id + "/" + c.column + " is bound to " +
                                       (c.key_concept ? std::string(to_string(*c.key_concept)) : "no concept") +
                                       ", not " + std::string(to_string(key_concept)));
    AlignmentTable table{key_concept, std::move(cells), {}};
    for (std::size_t i = 0; i < table.cells.size(); ++i)
        for (std::size_t j = i + 1; j < table.cells.size(); ++j) {
            const auto& x = table.cells[i];
            const auto& y = table.cells[j];
            Comparison c = (x.canonical && y.canonical)
                               ? compare_values(*x.canonical, *y.canonical, key_concept, options)
                               : verdict(Verdict::Indeterminate, "'" + (x.canonical ? y.raw : x.raw) + "' is unmapped");
            c.left = i;
            c.right = j;
            table.comparisons.push_back(std::move(c));
        }
    return table;
}

AlignmentTable align(const std::vector<UnifiedRecord>& records, Concept key_concept, const AlignOptions& options) {
    std::vector<HarmonizedCell> cells;
    for (const auto& r : records)
        for (const auto& c : r.cells)
            if (c.key_concept == key_concept) cells.push_back(c);
    return align_cells(std::move(cells), key_concept, options);
}

nlohmann::json to_json(const AlignmentTable& table) {
    nlohmann::json cells = nlohmann::json::array();
    for (const auto& c : table.cells)
        cells.push_back({{"source", c.source_id},
                         {"column", c.column},
                         {"raw", c.raw},
                         {"canonical", c.canonical ? to_json(*c.canonical) : nlohmann::json()},
                         {"lossiness", to_string(c.lossiness)}});
    nlohmann::json comparisons = nlohmann::json::array();
    for (const auto& c : table.comparisons)
        comparisons.push_back({{"left", c.left},
                               {"right", c.right},
                               {"left_raw", table.cells[c.left].raw},
                               {"right_raw", table.cells[c.right].raw},
                               {"verdict", to_string(c.verdict)},
                               {"reason", c.reason},
                               {"common", c.common ? to_json(*c.common) : nlohmann::json()}});
    return {{"concept", to_string(table.key_concept)}, {"cells", cells}, {"comparisons", comparisons}};
}

} // namespace obsharm
