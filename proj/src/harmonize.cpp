#include <algorithm>
#include <ostream>
#include <thread>

#include "obsharm/detail/text.hpp"
#include "obsharm/error.hpp"
#include "obsharm/harmonizer.hpp"

namespace obsharm {

std::string_view to_string(IssueKind k) noexcept {
    switch (k) {
    case IssueKind::ParseFailure: return "parse_failure";
    case IssueKind::Unresolved: return "unresolved";
    case IssueKind::UncoveredColumn: return "uncovered_column";
    }
    return "parse_failure";
}

std::map<Concept, std::vector<HarmonizedCell>> UnifiedRecord::by_concept() const {
    std::map<Concept, std::vector<HarmonizedCell>> out;
    for (const auto& c : cells)
        if (c.key_concept) out[*c.key_concept].push_back(c);
    return out;
}

namespace {

struct Context {
    const SourceConfig& source;
    const std::vector<std::string>& header;
    const Gazetteer& gazetteer;
    const ColorLexicon& lexicon;
};

struct CellOutcome {
    std::optional<CanonicalValue> canonical;
    Lossiness lossiness = Lossiness::Unmapped;
    std::optional<std::pair<IssueKind, std::string>> issue;
};

CellOutcome exact(CanonicalValue v) { return {std::move(v), Lossiness::Exact, std::nullopt}; }
CellOutcome unmapped() { return {}; }
CellOutcome problem(IssueKind kind, std::string reason) { return {std::nullopt, Lossiness::Unmapped, std::pair{kind, std::move(reason)}}; }

Sector at_rose(const Sector& s, const std::optional<CompassRose>& rose) {
    return rose && rose->count() > s.rose().count() ? s.promoted(*rose) : s;
}

Direction apply_rose_hint(Direction d, const std::optional<CompassRose>& rose) {
    if (auto* s = std::get_if<Sector>(&d)) return at_rose(*s, rose);
    if (auto* sp = std::get_if<SectorSpan>(&d)) {
        CompassRose target = std::max(sp->from.rose(), rose.value_or(sp->from.rose()));
        return SectorSpan(sp->from.promoted(target), sp->to.promoted(target));
    }
    return d;
}

std::string facing_raw(const ColumnBinding& b, const Context& ctx, const std::vector<std::string>& row) {
    auto it = std::find(ctx.header.begin(), ctx.header.end(), *b.facing);
    return row[static_cast<std::size_t>(it - ctx.header.begin())];
}

CellOutcome map_relative(const Direction& d, const ColumnBinding& b, const Context& ctx,
                         const std::vector<std::string>& row) {
    const bool vertical = std::visit(
        [](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, RelativeDirection>) return v.has_vertical();
            else if constexpr (std::is_same_v<T, RelativeSpan>) return v.from.has_vertical() || v.to.has_vertical();
            else return false;
        },
        d);
    // Image-plane directions and directions without a known facing stay unmapped.
    if (vertical || !b.facing) return unmapped();

    const std::string raw = facing_raw(b, ctx, row);
    if (detail::trim(raw).empty()) return unmapped();
    Direction facing = AngleDeg(0);
    try {
        const ColumnBinding* facing_binding = ctx.source.find(*b.facing);
        facing = apply_rose_hint(parse_direction(raw), facing_binding ? facing_binding->rose : std::nullopt);
    } catch (const ParseError& e) {
        return problem(IssueKind::Unresolved, "facing column '" + *b.facing + "': " + e.what());
    }

    if (const auto* angle = std::get_if<AngleDeg>(&facing)) {
        if (const auto* r = std::get_if<RelativeDirection>(&d)) return exact(*relative_to_cardinal(*r, *angle).value);
        return exact(*relative_to_cardinal(std::get<RelativeSpan>(d), *angle).value);
    }
    if (const auto* sector = std::get_if<Sector>(&facing)) {
        if (const auto* r = std::get_if<RelativeDirection>(&d)) {
            auto out = relative_to_cardinal(*r, *sector);
            if (out.value->size() == 1) return {out.value->front(), out.lossiness, std::nullopt};
            return {SectorSet{*out.value}, out.lossiness, std::nullopt};
        }
        auto out = relative_to_cardinal(std::get<RelativeSpan>(d), *sector);
        if (!out.value) return unmapped();
        return {*out.value, out.lossiness, std::nullopt};
    }
    return problem(IssueKind::Unresolved,
                   "facing column '" + *b.facing + "' holds '" + raw + "', which is not a single bearing or sector");
}

CellOutcome map_cell(const ColumnBinding& b, const std::string& raw, const Context& ctx,
                     const std::vector<std::string>& row) {
    if (detail::trim(raw).empty()) return unmapped();
    try {
        switch (b.key_concept) {
        case Concept::Expertise: {
            ScaleValue v = parse_scale_value(raw, *b.scale);
            if (!b.target_scale) return exact(v);
            auto out = convert(v, *b.target_scale);
            return {*out.value, out.lossiness, std::nullopt};
        }
        case Concept::Location: {
            auto loc = parse_location(raw);
            try {
                auto out = resolve_location(loc, ctx.gazetteer);
                if (!out.value) return unmapped();
                return {*out.value, out.lossiness, std::nullopt};
            } catch (const NotFoundError& e) {
                return problem(IssueKind::Unresolved, e.what());
            }
        }
        case Concept::Visual: {
            const ColorLexicon& lexicon = b.lexicon ? *b.lexicon : ctx.lexicon;
            auto parsed = parse_color(raw, lexicon);
            if (auto* single = std::get_if<ColorValue>(&parsed)) {
                if (auto* u = std::get_if<UnresolvedColorName>(single))
                    return problem(IssueKind::Unresolved, "color name '" + u->name + "' is not in the lexicon");
                return exact(*single);
            }
            const auto& seq = std::get<ColorSequence>(parsed);
            std::string missing;
            for (const auto& c : seq.colors)
                if (auto* u = std::get_if<UnresolvedColorName>(&c)) missing += (missing.empty() ? "'" : ", '") + u->name + "'";
            if (missing.empty()) return exact(seq);
            return {seq, Lossiness::Lossy,
                    std::pair{IssueKind::Unresolved, "color names " + missing + " are not in the lexicon"}};
        }
        case Concept::MovingDirection:
        case Concept::ViewingDirection: {
            Direction d = apply_rose_hint(parse_direction(raw), b.rose);
            if (std::holds_alternative<RelativeDirection>(d) || std::holds_alternative<RelativeSpan>(d))
                return map_relative(d, b, ctx, row);
            return exact(to_canonical(d));
        }
        case Concept::Duration: {
            auto d = parse_duration(raw);
            if (std::holds_alternative<UnknownDuration>(d)) return {Unknown{}, Lossiness::Unmapped, std::nullopt};
            return exact(std::get<Seconds>(d));
        }
        }
    } catch (const std::exception& e) {
        return problem(IssueKind::ParseFailure, e.what());
    }
    return unmapped();
}

struct RowOutput {
    UnifiedRecord record;
    std::vector<Issue> issues;
};

RowOutput harmonize_row(std::size_t r, const std::vector<std::string>& row, const Context& ctx,
                        const std::vector<const ColumnBinding*>& bindings, std::optional<std::size_t> id_index) {
    RowOutput out;
    out.record.source_id = ctx.source.id;
    out.record.row = r;
    out.record.record_id = id_index ? row[*id_index] : ctx.source.id + ":" + std::to_string(r + 1);
    out.record.cells.reserve(row.size());
    for (std::size_t c = 0; c < row.size(); ++c) {
        HarmonizedCell cell{ctx.source.id, ctx.header[c], std::nullopt, row[c], std::nullopt, Lossiness::Unmapped};
        if (const ColumnBinding* b = bindings[c]) {
            cell.key_concept = b->key_concept;
            CellOutcome o = map_cell(*b, row[c], ctx, row);
            cell.canonical = std::move(o.canonical);
            cell.lossiness = o.lossiness;
            if (o.issue) out.issues.push_back({ctx.source.id, r, ctx.header[c], o.issue->first, o.issue->second});
        }
        out.record.cells.push_back(std::move(cell));
    }
    return out;
}

} // namespace

HarmonizeResult harmonize_dataset(const Dataset& dataset, const MappingConfig& config, const HarmonizeOptions& options) {
    const SourceConfig* source = config.find(dataset.source_id);
    if (!source) throw ConfigError("no configuration for source '" + dataset.source_id + "'");

    auto column_index = [&](const std::string& name) -> std::optional<std::size_t> {
        auto it = std::find(dataset.header.begin(), dataset.header.end(), name);
        if (it == dataset.header.end()) return std::nullopt;
        return static_cast<std::size_t>(it - dataset.header.begin());
    };

    std::vector<const ColumnBinding*> bindings(dataset.header.size(), nullptr);
    for (const auto& b : source->columns) {
        auto idx = column_index(b.column);
        if (!idx) throw ConfigError("source '" + source->id + "' has no column '" + b.column + "'");
        if (b.facing && !column_index(*b.facing))
            throw ConfigError("source '" + source->id + "' has no facing column '" + *b.facing + "'");
        bindings[*idx] = &b;
    }
    std::optional<std::size_t> id_index;
    if (source->id_column) {
        id_index = column_index(*source->id_column);
        if (!id_index) throw ConfigError("source '" + source->id + "' has no id column '" + *source->id_column + "'");
    }

    HarmonizeResult result;
    for (std::size_t c = 0; c < dataset.header.size(); ++c)
        if (!bindings[c] && c != id_index)
            result.issues.push_back({source->id, std::nullopt, dataset.header[c], IssueKind::UncoveredColumn,
                                     "column is not bound to a concept and passes through unchanged"});

    const Context ctx{*source, dataset.header,
                      options.gazetteer ? *options.gazetteer : FlatFileGazetteer::bundled(),
                      options.lexicon ? *options.lexicon : ColorLexicon::standard()};

    const std::size_t n = dataset.rows.size();
    std::vector<RowOutput> rows(n);
    unsigned workers = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(1, n / 256)));

    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t r = begin; r < end; ++r) rows[r] = harmonize_row(r, dataset.rows[r], ctx, bindings, id_index);
    };
    if (workers <= 1) {
        work(0, n);
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (n + workers - 1) / workers;
        for (std::size_t begin = 0; begin < n; begin += chunk) pool.emplace_back(work, begin, std::min(n, begin + chunk));
        for (auto& t : pool) t.join();
    }

    result.records.reserve(n);
    for (auto& row : rows) {
        result.records.push_back(std::move(row.record));
        for (auto& issue : row.issues) result.issues.push_back(std::move(issue));
    }
    return result;
}

HarmonizeResult harmonize(const std::vector<Dataset>& datasets, const MappingConfig& config,
                          const HarmonizeOptions& options) {
    HarmonizeResult all;
    for (const auto& ds : datasets) {
        auto part = harmonize_dataset(ds, config, options);
        std::move(part.records.begin(), part.records.end(), std::back_inserter(all.records));
        std::move(part.issues.begin(), part.issues.end(), std::back_inserter(all.issues));
    }
    return all;
}

HarmonizeResult harmonize_configured(const MappingConfig& config, const HarmonizeOptions& options) {
    std::vector<Dataset> datasets;
    for (const auto& source : config.sources) {
        if (!source.input) continue;
        try {
            datasets.push_back(load_dataset(*source.input, source.id));
        } catch (const ParseError& e) {
            throw ParseError(e.position(), "input '" + source.input->string() + "': " + e.reason());
        }
    }
    return harmonize(datasets, config, options);
}

nlohmann::json to_json(const HarmonizedCell& cell, const UnifiedRecord& record) {
    return nlohmann::json{{"record_id", record.record_id},
                          {"source", cell.source_id},
                          {"row", record.row},
                          {"column", cell.column},
                          {"concept", cell.key_concept ? nlohmann::json(to_string(*cell.key_concept)) : nlohmann::json()},
                          {"raw", cell.raw},
                          {"canonical", cell.canonical ? to_json(*cell.canonical) : nlohmann::json()},
                          {"lossiness", to_string(cell.lossiness)}};
}

nlohmann::json to_json(const Issue& issue) {
    return nlohmann::json{{"source", issue.source_id},
                          {"row", issue.row ? nlohmann::json(*issue.row) : nlohmann::json()},
                          {"column", issue.column},
                          {"kind", to_string(issue.kind)},
                          {"reason", issue.reason}};
}

void write_jsonl(std::ostream& out, const std::vector<UnifiedRecord>& records) {
    for (const auto& record : records)
        for (const auto& cell : record.cells) out << to_json(cell, record).dump(-1, ' ', false, nlohmann::json::error_handler_t::replace) << '\n';
}

} // namespace obsharm
