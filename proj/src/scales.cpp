#include "obsharm/scales.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "obsharm/detail/text.hpp"
#include "obsharm/error.hpp"

namespace obsharm {

using detail::format_number;

void IntervalScale::validate() const {
    if (!std::isfinite(min) || !std::isfinite(max) || !(min < max))
        throw std::invalid_argument("interval scale needs finite min < max");
    if (integer_only && (std::floor(min) != min || std::floor(max) != max))
        throw std::invalid_argument("integer-only scale needs integer bounds");
}

void OrdinalScale::validate() const {
    if (labels.size() < 2) throw std::invalid_argument("ordinal scale needs at least two labels");
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i].empty()) throw std::invalid_argument("ordinal labels must be non-empty");
        for (std::size_t j = 0; j < i; ++j)
            if (detail::iequals(labels[i], labels[j]))
                throw std::invalid_argument("duplicate ordinal label '" + labels[i] + "'");
    }
}

std::size_t OrdinalScale::index_of(std::string_view label) const noexcept {
    auto key = detail::trim(label);
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (detail::iequals(labels[i], key)) return i;
    return labels.size();
}

ScaleValue ScaleValue::interval(IntervalScale scale, double value) {
    scale.validate();
    if (!std::isfinite(value) || value < scale.min || value > scale.max)
        throw std::invalid_argument(format_number(value) + " lies outside [" + format_number(scale.min) + ", " +
                                    format_number(scale.max) + "]");
    if (scale.integer_only && std::floor(value) != value)
        throw std::invalid_argument(format_number(value) + " is not an integer");
    return ScaleValue(scale, value, 0);
}

ScaleValue ScaleValue::ordinal(OrdinalScale scale, std::string_view label) {
    auto idx = scale.index_of(label);
    if (idx == scale.size()) throw std::invalid_argument("'" + std::string(label) + "' is not a label of the scale");
    return ordinal(std::move(scale), idx);
}

ScaleValue ScaleValue::ordinal(OrdinalScale scale, std::size_t index) {
    scale.validate();
    if (index >= scale.size()) throw std::invalid_argument("ordinal index out of range");
    return ScaleValue(std::move(scale), 0, index);
}

double ScaleValue::number() const {
    if (!is_interval()) throw std::logic_error("ordinal value has no number");
    return number_;
}

std::size_t ScaleValue::rank() const {
    if (!is_ordinal()) throw std::logic_error("interval value has no rank");
    return rank_;
}

const std::string& ScaleValue::label() const { return std::get<OrdinalScale>(scale_).labels.at(rank()); }

double ScaleValue::position() const {
    if (const auto* s = std::get_if<IntervalScale>(&scale_)) {
        if (number_ == s->max) return 1.0;
        return (number_ - s->min) / (s->max - s->min);
    }
    return static_cast<double>(rank_) / static_cast<double>(std::get<OrdinalScale>(scale_).size() - 1);
}

namespace {

std::size_t bin_of(double position, std::size_t k) {
    auto idx = static_cast<std::size_t>(std::floor(std::clamp(position, 0.0, 1.0) * static_cast<double>(k)));
    return std::min(idx, k - 1);
}

MappingOutcome<ScaleValue> onto_interval(double y, const IntervalScale& t, Lossiness base) {
    y = std::clamp(y, t.min, t.max);
    if (t.integer_only) {
        double r = std::round(y);
        return {ScaleValue::interval(t, r), r == y ? base : worst(base, Lossiness::Lossy), {}};
    }
    return {ScaleValue::interval(t, y), base, {}};
}

} // namespace

MappingOutcome<ScaleValue> convert(const ScaleValue& v, const Scale& target, ConvertOptions options) {
    if (v.scale() == target) return {v, Lossiness::Exact, {}};

    if (const auto* t = std::get_if<IntervalScale>(&target)) {
        t->validate();
        if (const auto* s = std::get_if<IntervalScale>(&v.scale())) {
            const double x = v.number();
            double y;
            if (x == s->min)
                y = t->min;
            else if (x == s->max)
                y = t->max;
            else
                y = t->min + (x - s->min) * (t->max - t->min) / (s->max - s->min);
            return onto_interval(y, *t, Lossiness::Exact);
        }
        if (!options.midpoint_mode)
            throw ReverseMappingError("ordinal label '" + v.label() +
                                      "' has no sound interval value; enable midpoint mode to use its bin midpoint");
        const auto k = static_cast<double>(std::get<OrdinalScale>(v.scale()).size());
        const double mid = t->min + (static_cast<double>(v.rank()) + 0.5) * (t->max - t->min) / k;
        return onto_interval(mid, *t, Lossiness::Lossy);
    }

    const auto& t = std::get<OrdinalScale>(target);
    t.validate();
    return {ScaleValue::ordinal(t, bin_of(v.position(), t.size())), Lossiness::Lossy, {}};
}

rulekit::Interval normalized_region(const ScaleValue& v) {
    if (const auto* s = std::get_if<IntervalScale>(&v.scale())) {
        const double p = v.position();
        if (!s->integer_only) return rulekit::Interval::closed(p, p);
        const double half = 0.5 / (s->max - s->min);
        return rulekit::Interval::closed(std::max(0.0, p - half), std::min(1.0, p + half));
    }
    const auto k = static_cast<double>(std::get<OrdinalScale>(v.scale()).size());
    const auto i = static_cast<double>(v.rank());
    if (v.rank() + 1 == std::get<OrdinalScale>(v.scale()).size()) return rulekit::Interval::closed(i / k, 1.0);
    return rulekit::Interval::half_open(i / k, (i + 1) / k);
}

Scale parse_scale(std::string_view descriptor) {
    auto s = detail::trim(descriptor);
    const auto open = s.find('(');
    if (open == std::string_view::npos || s.back() != ')')
        throw ParseError(0, "scale descriptor must look like interval(...) or ordinal(...)");
    const auto kind = detail::to_lower(detail::trim(s.substr(0, open)));
    const auto body = s.substr(open + 1, s.size() - open - 2);

    if (kind == "interval") {
        auto parts = detail::split(body, ',');
        if (parts.size() < 2 || parts.size() > 3) throw ParseError(open + 1, "interval(min, max[, integer]) expected");
        auto lo = detail::parse_number(parts[0]);
        auto hi = detail::parse_number(parts[1]);
        if (!lo || !hi) throw ParseError(open + 1, "interval bounds must be numbers");
        IntervalScale scale{*lo, *hi, false};
        if (parts.size() == 3) {
            auto flag = detail::to_lower(detail::trim(parts[2]));
            if (flag == "integer" || flag == "int" || flag == "true")
                scale.integer_only = true;
            else if (flag != "real" && flag != "false")
                throw ParseError(open + 1, "third interval argument must be 'integer' or 'real'");
        }
        try {
            scale.validate();
        } catch (const std::invalid_argument& e) {
            throw ParseError(open + 1, e.what());
        }
        return scale;
    }
    if (kind == "ordinal") {
        OrdinalScale scale;
        for (auto label : detail::split(body, '<')) scale.labels.emplace_back(detail::trim(label));
        try {
            scale.validate();
        } catch (const std::invalid_argument& e) {
            throw ParseError(open + 1, e.what());
        }
        return scale;
    }
    throw ParseError(0, "unknown scale kind '" + kind + "'");
}

std::string format_scale(const Scale& s) {
    if (const auto* i = std::get_if<IntervalScale>(&s))
        return "interval(" + format_number(i->min) + ", " + format_number(i->max) + (i->integer_only ? ", integer)" : ")");
    std::string out = "ordinal(";
    const auto& labels = std::get<OrdinalScale>(s).labels;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i) out += " < ";
        out += labels[i];
    }
    return out + ")";
}

ScaleValue parse_scale_value(std::string_view text, const Scale& scale) {
    auto s = detail::trim(text);
    if (const auto* i = std::get_if<IntervalScale>(&scale)) {
        auto v = detail::parse_number(s);
        if (!v) throw ParseError(0, "'" + std::string(s) + "' is not a number");
        try {
            return ScaleValue::interval(*i, *v);
        } catch (const std::invalid_argument& e) {
            throw ParseError(0, e.what());
        }
    }
    const auto& o = std::get<OrdinalScale>(scale);
    auto idx = o.index_of(s);
    if (idx == o.size()) throw ParseError(0, "'" + std::string(s) + "' is not a label of " + format_scale(scale));
    return ScaleValue::ordinal(o, idx);
}

std::string format_scale_value(const ScaleValue& v) {
    return v.is_interval() ? format_number(v.number()) : v.label();
}

} // namespace obsharm
