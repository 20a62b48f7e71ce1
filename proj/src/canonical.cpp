#include "obsharm/canonical.hpp"

#include "obsharm/detail/text.hpp"

namespace obsharm {

using nlohmann::json;

CanonicalValue to_canonical(const Direction& d) {
    return std::visit([](const auto& v) -> CanonicalValue { return v; }, d);
}

CanonicalValue to_canonical(const ParsedColor& c) {
    return std::visit([](const auto& v) -> CanonicalValue { return v; }, c);
}

CanonicalValue to_canonical(const DurationValue& d) {
    if (const auto* s = std::get_if<Seconds>(&d)) return *s;
    return Unknown{};
}

namespace {

struct KindVisitor {
    std::string_view operator()(const Unknown&) const { return "unknown"; }
    std::string_view operator()(const AngleDeg&) const { return "angle"; }
    std::string_view operator()(const Sector&) const { return "sector"; }
    std::string_view operator()(const SectorSpan&) const { return "sector_span"; }
    std::string_view operator()(const BearingSpan&) const { return "bearing_span"; }
    std::string_view operator()(const SectorSet&) const { return "sector_set"; }
    std::string_view operator()(const RelativeDirection&) const { return "relative_direction"; }
    std::string_view operator()(const RelativeSpan&) const { return "relative_span"; }
    std::string_view operator()(const ColorValue&) const { return "color"; }
    std::string_view operator()(const ColorSequence&) const { return "color_sequence"; }
    std::string_view operator()(const ScaleValue&) const { return "scale_level"; }
    std::string_view operator()(const GeoPoint&) const { return "location"; }
    std::string_view operator()(const Seconds&) const { return "duration"; }
};

std::string_view color_form(const ColorValue& c) {
    if (std::holds_alternative<NamedColor>(c)) return "named";
    if (std::holds_alternative<CodedColor>(c)) return "coded";
    return "unresolved_name";
}

json color_json(const ColorValue& c) {
    json j{{"form", color_form(c)}};
    if (const auto* n = std::get_if<NamedColor>(&c)) {
        j["name"] = n->name;
        j["hex"] = to_hex(n->rgb);
    } else if (const auto* k = std::get_if<CodedColor>(&c)) {
        j["hex"] = to_hex(k->rgb);
    } else {
        j["name"] = std::get<UnresolvedColorName>(c).name;
    }
    return j;
}

json relative_json(const RelativeDirection& r) {
    json j{{"name", r.name()}};
    j["vertical"] = r.vertical == VerticalTerm::Up ? json("up") : r.vertical == VerticalTerm::Down ? json("down") : json();
    j["lateral"] = r.lateral == LateralTerm::Left ? json("left") : r.lateral == LateralTerm::Right ? json("right") : json();
    j["depth"] = r.depth == DepthTerm::Forward ? json("forward") : r.depth == DepthTerm::Backward ? json("backward") : json();
    return j;
}

json point_json(const GeoPoint& p) {
    return json{{"lat", p.lat()}, {"lon", p.lon()}, {"frame", to_string(p.frame())}};
}

} // namespace

std::string_view kind_of(const CanonicalValue& v) { return std::visit(KindVisitor{}, v); }

std::string format_canonical(const CanonicalValue& v) {
    struct Visitor {
        std::string operator()(const Unknown&) const { return "unknown"; }
        std::string operator()(const SectorSet& s) const {
            std::string out = "{";
            for (std::size_t i = 0; i < s.sectors.size(); ++i) out += (i ? ", " : "") + format_sector(s.sectors[i]);
            return out + "}";
        }
        std::string operator()(const ColorValue& c) const { return format_color(c); }
        std::string operator()(const ColorSequence& c) const { return format_color(ParsedColor{c}); }
        std::string operator()(const ScaleValue& s) const { return format_scale_value(s); }
        std::string operator()(const GeoPoint& p) const { return format_point(p); }
        std::string operator()(const Seconds& s) const { return format_duration(s); }
        std::string operator()(const AngleDeg& d) const { return format_direction(d); }
        std::string operator()(const Sector& d) const { return format_direction(d); }
        std::string operator()(const SectorSpan& d) const { return format_direction(d); }
        std::string operator()(const BearingSpan& d) const { return format_direction(d); }
        std::string operator()(const RelativeDirection& d) const { return format_direction(d); }
        std::string operator()(const RelativeSpan& d) const { return format_direction(d); }
    };
    return std::visit(Visitor{}, v);
}

json to_json(const Sector& s) {
    return json{{"name", s.name()},
                {"abbreviation", s.abbreviation()},
                {"rose", s.rose().count()},
                {"center", s.center().value()}};
}

json to_json(const ScaleValue& v) {
    json j{{"scale", format_scale(v.scale())}, {"position", v.position()}};
    if (v.is_interval())
        j["value"] = v.number();
    else
        j["value"] = v.label();
    return j;
}

json to_json(const CanonicalValue& v) {
    struct Visitor {
        json operator()(const Unknown&) const { return json::object(); }
        json operator()(const AngleDeg& a) const { return json{{"degrees", a.value()}}; }
        json operator()(const Sector& s) const { return to_json(s); }
        json operator()(const SectorSpan& s) const { return json{{"from", to_json(s.from)}, {"to", to_json(s.to)}}; }
        json operator()(const BearingSpan& s) const { return json{{"from", s.from.value()}, {"to", s.to.value()}}; }
        json operator()(const SectorSet& s) const {
            json arr = json::array();
            for (const auto& sector : s.sectors) arr.push_back(to_json(sector));
            return json{{"sectors", arr}};
        }
        json operator()(const RelativeDirection& r) const { return relative_json(r); }
        json operator()(const RelativeSpan& r) const {
            return json{{"from", relative_json(r.from)}, {"to", relative_json(r.to)}};
        }
        json operator()(const ColorValue& c) const { return color_json(c); }
        json operator()(const ColorSequence& s) const {
            json arr = json::array();
            for (const auto& c : s.colors) arr.push_back(color_json(c));
            return json{{"colors", arr}};
        }
        json operator()(const ScaleValue& s) const { return to_json(s); }
        json operator()(const GeoPoint& p) const { return point_json(p); }
        json operator()(const Seconds& s) const { return json{{"seconds", s.value}}; }
    };
    json j = std::visit(Visitor{}, v);
    j["kind"] = kind_of(v);
    j["text"] = format_canonical(v);
    return j;
}

json to_json(const Direction& d) { return to_json(to_canonical(d)); }
json to_json(const ParsedColor& c) { return to_json(to_canonical(c)); }
json to_json(const DurationValue& d) { return to_json(to_canonical(d)); }

json to_json(const LocationValue& v) {
    struct Visitor {
        json operator()(const GeoPoint& p) const {
            json j = point_json(p);
            j["kind"] = "point";
            return j;
        }
        json operator()(const PlaceName& p) const { return json{{"kind", "place"}, {"name", p.name}}; }
        json operator()(const PostalCode& p) const {
            return json{{"kind", "postal"}, {"code", p.code}, {"place", p.place ? json(*p.place) : json()}};
        }
        json operator()(const RaDec& r) const { return json{{"kind", "radec"}, {"ra", r.ra}, {"dec", r.dec}}; }
    };
    json j = std::visit(Visitor{}, v);
    j["text"] = format_location(v);
    return j;
}

json to_json(const rulekit::PartitionReport& r) {
    json gaps = json::array();
    for (const auto& g : r.gaps) gaps.push_back(rulekit::to_string(g));
    json overlaps = json::array();
    for (const auto& o : r.overlaps)
        overlaps.push_back(json{{"first", {{"label", o.first.label()}, {"interval", rulekit::to_string(o.first.interval())}}},
                                {"second", {{"label", o.second.label()}, {"interval", rulekit::to_string(o.second.interval())}}},
                                {"region", rulekit::to_string(o.region)}});
    return json{{"exhaustive", r.exhaustive}, {"disjoint", r.disjoint}, {"gaps", gaps}, {"overlaps", overlaps}};
}

} // namespace obsharm
