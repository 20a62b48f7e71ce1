#include "cli.hpp"

#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "obsharm/canonical.hpp"
#include "obsharm/detail/text.hpp"
#include "obsharm/error.hpp"
#include "obsharm/harmonizer.hpp"

namespace obsharm::cli {

namespace {

using nlohmann::json;

struct GlobalOptions {
    std::string config;
    std::string gazetteer;
    std::string lexicon;
    std::optional<int> rose;
    bool plain = false;
    std::string output;
};

struct Resources {
    std::unique_ptr<FlatFileGazetteer> gazetteer;
    std::unique_ptr<ColorLexicon> lexicon;

    const Gazetteer& gaz() const { return gazetteer ? static_cast<const Gazetteer&>(*gazetteer) : FlatFileGazetteer::bundled(); }
    const ColorLexicon& lex() const { return lexicon ? *lexicon : ColorLexicon::standard(); }
};

Resources load_resources(const GlobalOptions& g) {
    Resources r;
    if (!g.gazetteer.empty()) {
        std::ifstream in(g.gazetteer);
        if (!in) throw ConfigError("cannot open gazetteer '" + g.gazetteer + "'");
        r.gazetteer = std::make_unique<FlatFileGazetteer>(FlatFileGazetteer::read(in));
    }
    if (!g.lexicon.empty()) {
        std::ifstream in(g.lexicon);
        if (!in) throw ConfigError("cannot open lexicon '" + g.lexicon + "'");
        r.lexicon = std::make_unique<ColorLexicon>(ColorLexicon::read(in));
    }
    return r;
}

void emit(std::ostream& out, const GlobalOptions& g, const json& j, const std::string& plain) {
    if (g.plain)
        out << plain << '\n';
    else
        out << j.dump(-1, ' ', false, json::error_handler_t::replace) << '\n';
}

MappingConfig load_config(const GlobalOptions& g) {
    if (g.config.empty()) throw CLI::RequiredError("--config (or OBS_HARMONIZE_CONFIG)");
    return MappingConfig::load(g.config);
}

// --- parse --------------------------------------------------------------------

struct ParseCmd {
    std::string kind;
    std::string text;
    std::string scale;
};

void run_parse(const ParseCmd& cmd, const GlobalOptions& g, const Resources& res, std::ostream& out) {
    if (cmd.kind == "direction") {
        auto d = parse_direction(cmd.text);
        emit(out, g, to_json(d), format_direction(d));
    } else if (cmd.kind == "color") {
        auto c = parse_color(cmd.text, res.lex());
        emit(out, g, to_json(c), format_color(c));
    } else if (cmd.kind == "location") {
        auto l = parse_location(cmd.text);
        json j = to_json(l);
        std::string plain = format_location(l);
        auto o = resolve_location(l, res.gaz());
        if (o.value) {
            j["resolved"] = to_json(CanonicalValue{*o.value});
            j["lossiness"] = to_string(o.lossiness);
            plain += " -> " + format_point(*o.value);
        }
        emit(out, g, j, plain);
    } else if (cmd.kind == "duration") {
        auto d = parse_duration(cmd.text);
        emit(out, g, to_json(d), format_duration(d));
    } else {
        if (cmd.scale.empty()) throw CLI::RequiredError("--scale (needed for --concept expertise)");
        auto v = parse_scale_value(cmd.text, parse_scale(cmd.scale));
        emit(out, g, to_json(v), format_scale_value(v));
    }
}

// --- map-direction --------------------------------------------------------------

struct MapDirectionCmd {
    std::optional<double> angle;
    std::string sector;
    std::string relative;
    std::string facing;
};

std::string interval_text(const Sector& s) { return to_string(interval_of_sector(s)); }


void run_map_direction(const MapDirectionCmd& cmd, const GlobalOptions& g, std::ostream& out) {
    if (cmd.angle) {
        Sector s = sector_of_angle(AngleDeg(*cmd.angle), CompassRose(g.rose.value_or(16)));
        json j = to_json(s);
        j["interval"] = interval_text(s);
        emit(out, g, j, std::string(s.name()));
        return;
    }
    if (!cmd.sector.empty()) {
        auto d = parse_direction(cmd.sector);
        const auto* s = std::get_if<Sector>(&d);
        if (!s) throw ParseError(0, "'" + cmd.sector + "' is not a single wind name");
        Sector base = *s;
        if (!g.rose || g.rose == base.rose().count()) {
            json j = to_json(base);
            j["interval"] = interval_text(base);
            emit(out, g, j, format_sector(base));
            return;
        }
        CompassRose target(*g.rose);
        if (target.count() > base.rose().count()) {
            Sector p = base.promoted(target);
            json j = to_json(p);
            j["interval"] = interval_text(p);
            emit(out, g, j, format_sector(p));
            return;
        }
        auto covered = coarsen(base, target);
        SectorSet set{covered};
        json j = to_json(CanonicalValue{set});
        emit(out, g, j, format_canonical(set));
        return;
    }
    auto d = parse_direction(cmd.relative);
    auto f = parse_direction(cmd.facing);
    const auto* r = std::get_if<RelativeDirection>(&d);
    if (!r) throw ParseError(0, "'" + cmd.relative + "' is not a single relative direction");
    if (const auto* a = std::get_if<AngleDeg>(&f)) {
        auto o = relative_to_cardinal(*r, *a);
        if (!o.value) {
            emit(out, g, json{{"result", nullptr}, {"lossiness", to_string(o.lossiness)}}, "unmapped");
            return;
        }
        json j{{"result", to_json(CanonicalValue{*o.value})}, {"lossiness", to_string(o.lossiness)}};
        emit(out, g, j, format_angle(*o.value) + " (" + std::string(to_string(o.lossiness)) + ")");
        return;
    }
    if (const auto* s = std::get_if<Sector>(&f)) {
        auto o = relative_to_cardinal(*r, *s);
        if (!o.value) {
            emit(out, g, json{{"result", nullptr}, {"lossiness", to_string(o.lossiness)}}, "unmapped");
            return;
        }
        SectorSet set{*o.value};
        json j{{"result", to_json(CanonicalValue{set})}, {"lossiness", to_string(o.lossiness)}};
        emit(out, g, j, format_canonical(set) + " (" + std::string(to_string(o.lossiness)) + ")");
        return;
    }
    throw ParseError(0, "facing must be an angle or a single wind name");
}

// --- convert-scale --------------------------------------------------------------

struct ConvertCmd {
    std::string from;
    std::string to;
    std::string value;
    bool midpoint = false;
};

void run_convert(const ConvertCmd& cmd, const GlobalOptions& g, std::ostream& out) {
    const Scale from = parse_scale(cmd.from);
    const Scale to = parse_scale(cmd.to);
    auto v = parse_scale_value(cmd.value, from);
    auto o = convert(v, to, ConvertOptions{cmd.midpoint});
    json j{{"value", to_json(*o.value)}, {"lossiness", to_string(o.lossiness)}};
    emit(out, g, j, format_scale_value(*o.value) + " (" + std::string(to_string(o.lossiness)) + ")");
}

// --- color ------------------------------------------------------------------------

void run_color(const std::string& text, const GlobalOptions& g, const Resources& res, std::ostream& out) {
    auto parsed = parse_color(text, res.lex());
    std::vector<ColorValue> items;
    if (const auto* single = std::get_if<ColorValue>(&parsed))
        items.push_back(*single);
    else
        items = std::get<ColorSequence>(parsed).colors;

    json nearest = json::array();
    std::string plain;
    for (const auto& c : items) {
        if (!plain.empty()) plain += ", ";
        if (const Rgb* rgb = rgb_of(c)) {
            auto n = nearest_name(*rgb, res.lex());
            nearest.push_back({{"hex", to_hex(*rgb)}, {"name", n.name}, {"distance", n.distance}});
            plain += to_hex(*rgb) + " " + n.name + " " + detail::format_number(n.distance);
        } else {
            nearest.push_back(nullptr);
            plain += format_color(c) + " unresolved";
        }
    }
    emit(out, g, json{{"parsed", to_json(parsed)}, {"nearest", nearest}}, plain);
}

// --- harmonize / align ----------------------------------------------------------

struct HarmonizeCmd {
    std::vector<std::string> inputs; // "id=path" or "path"
    unsigned threads = 0;
};

bool report_issues(const std::vector<Issue>& issues, const GlobalOptions& g, std::ostream& err) {
    bool bad = false;
    for (const auto& i : issues) {
        if (i.kind != IssueKind::UncoveredColumn) bad = true;
        if (g.plain) {
            err << "issue: " << i.source_id;
            if (i.row) err << ':' << (*i.row + 1);
            err << " [" << i.column << "] " << to_string(i.kind) << ": " << i.reason << '\n';
        } else {
            err << to_json(i).dump(-1, ' ', false, json::error_handler_t::replace) << '\n';
        }
    }
    return bad;
}

HarmonizeResult run_harmonization(const HarmonizeCmd& cmd, const GlobalOptions& g, const Resources& res) {
    MappingConfig config = load_config(g);
    HarmonizeOptions opts;
    opts.gazetteer = &res.gaz();
    opts.lexicon = &res.lex();
    opts.threads = cmd.threads;
    if (cmd.inputs.empty()) return harmonize_configured(config, opts);

    std::vector<Dataset> datasets;
    for (const auto& item : cmd.inputs) {
        std::filesystem::path path;
        std::string id;
        if (auto eq = item.find('='); eq != std::string::npos) {
            id = item.substr(0, eq);
            path = item.substr(eq + 1);
        } else {
            path = item;
            id = path.stem().string();
        }
        if (!std::filesystem::is_regular_file(path)) throw CLI::ValidationError("input", "no such file: " + path.string());
        datasets.push_back(load_dataset(path, id));
    }
    return harmonize(datasets, config, opts);
}

int run_harmonize(const HarmonizeCmd& cmd, const GlobalOptions& g, const Resources& res, std::ostream& out,
                  std::ostream& err) {
    auto result = run_harmonization(cmd, g, res);
    if (g.plain) {
        for (const auto& rec : result.records)
            for (const auto& cell : rec.cells)
                out << rec.record_id << '\t' << cell.column << '\t'
                    << (cell.key_concept ? std::string(to_string(*cell.key_concept)) : "-") << '\t'
                    << (cell.canonical ? format_canonical(*cell.canonical) : "-") << '\t' << to_string(cell.lossiness)
                    << '\n';
    } else {
        write_jsonl(out, result.records);
    }
    return report_issues(result.issues, g, err) ? 1 : 0;
}

struct AlignCmd {
    HarmonizeCmd inputs;
    std::string key_concept;
    double color_threshold = 0;
    double tolerance = 0.01;
};

int run_align(const AlignCmd& cmd, const GlobalOptions& g, const Resources& res, std::ostream& out,
              std::ostream& err) {
    const Concept c = concept_from_string(cmd.key_concept);
    auto result = run_harmonization(cmd.inputs, g, res);
    AlignOptions opts;
    opts.color_threshold = cmd.color_threshold;
    opts.location_tolerance_deg = cmd.tolerance;
    auto table = align(result.records, c, opts);
    if (g.plain) {
        for (const auto& cmp : table.comparisons) {
            const auto& a = table.cells[cmp.left];
            const auto& b = table.cells[cmp.right];
            out << a.source_id << " \"" << a.raw << "\" ~ " << b.source_id << " \"" << b.raw
                << "\": " << to_string(cmp.verdict);
            if (!cmp.reason.empty()) out << " (" << cmp.reason << ')';
            out << '\n';
        }
    } else {
        out << to_json(table).dump(-1, ' ', false, json::error_handler_t::replace) << '\n';
    }
    return report_issues(result.issues, g, err) ? 1 : 0;
}

// --- check-rules ------------------------------------------------------------------

struct CheckRulesCmd {
    std::string rules;
    bool literal = false;
};

int run_check_rules(const CheckRulesCmd& cmd, const GlobalOptions& g, std::ostream& out) {
    rulekit::RuleSet rules = [&] {
        if (cmd.literal) return rulekit::literal_nne_rule();
        if (!cmd.rules.empty()) {
            std::ifstream in(cmd.rules);
            return rulekit::read_rule_table(in);
        }
        return rulekit::compass_rules(g.rose.value_or(16));
    }();
    auto report = rulekit::check_partition(rules);
    std::ostringstream plain;
    plain << "exhaustive: " << (report.exhaustive ? "yes" : "no") << '\n'
          << "disjoint: " << (report.disjoint ? "yes" : "no");
    for (const auto& gap : report.gaps) plain << "\ngap " << rulekit::to_string(gap);
    for (const auto& o : report.overlaps)
        plain << "\noverlap " << o.first.label() << " " << o.second.label() << " " << rulekit::to_string(o.region);
    emit(out, g, to_json(report), plain.str());
    return report.exhaustive && report.disjoint ? 0 : 1;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Harmonize heterogeneous fireball observation records", "obs-harmonize"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "obs-harmonize 0.1.0");

    GlobalOptions g;
    app.add_option("--config", g.config, "Mapping configuration")
        ->envname("OBS_HARMONIZE_CONFIG")
        ->check(CLI::ExistingFile);
    app.add_option("--gazetteer", g.gazetteer, "Gazetteer TSV replacing the bundled one")->check(CLI::ExistingFile);
    app.add_option("--lexicon", g.lexicon, "Color lexicon TSV replacing the CSS names")->check(CLI::ExistingFile);
    app.add_option("--rose", g.rose, "Compass granularity")->check(CLI::IsMember({4, 8, 16}));
    app.add_flag("--plain", g.plain, "Plain text instead of JSON");
    app.add_option("--output,-o", g.output, "Write results to this file");

    ParseCmd parse_cmd;
    auto* parse = app.add_subcommand("parse", "Parse one raw value");
    parse->add_option("--concept", parse_cmd.kind, "Value kind")
        ->required()
        ->check(CLI::IsMember({"direction", "color", "location", "duration", "expertise"}));
    parse->add_option("--scale", parse_cmd.scale, "Scale for expertise values");
    parse->add_option("text", parse_cmd.text, "Raw value")->required();

    MapDirectionCmd map_cmd;
    auto* map_dir = app.add_subcommand("map-direction", "Map angles, wind names and relative directions");
    auto* mode = map_dir->add_option_group("mode");
    mode->add_option("--angle", map_cmd.angle, "Bearing in degrees");
    mode->add_option("--sector", map_cmd.sector, "Wind name, e.g. NNE or east-northeast");
    auto* rel = mode->add_option("--relative", map_cmd.relative, "Relative direction, e.g. left");
    mode->require_option(1);
    auto* facing = map_dir->add_option("--facing", map_cmd.facing, "Observer facing for --relative");
    rel->needs(facing);
    facing->needs(rel);

    ConvertCmd conv_cmd;
    auto* conv = app.add_subcommand("convert-scale", "Convert an expertise value between scales");
    conv->add_option("--from", conv_cmd.from, "Source scale")->required();
    conv->add_option("--to", conv_cmd.to, "Target scale")->required();
    conv->add_option("--value", conv_cmd.value, "Value on the source scale")->required();
    conv->add_flag("--midpoint", conv_cmd.midpoint, "Map ordinal labels to bin midpoints");

    std::string color_text;
    auto* color = app.add_subcommand("color", "Resolve color names and codes");
    color->add_option("text", color_text, "Color, code or comma-separated sequence")->required();

    HarmonizeCmd harm_cmd;
    auto* harm = app.add_subcommand("harmonize", "Harmonize datasets into JSONL records");
    harm->add_option("inputs", harm_cmd.inputs, "Datasets as PATH or ID=PATH (default: config inputs)");
    harm->add_option("--threads", harm_cmd.threads, "Worker threads (0: automatic)");

    AlignCmd align_cmd;
    auto* aln = app.add_subcommand("align", "Compare one concept across datasets");
    aln->add_option("inputs", align_cmd.inputs.inputs, "Datasets as PATH or ID=PATH (default: config inputs)");
    aln->add_option("--concept", align_cmd.key_concept, "Key concept")
        ->required()
        ->check(CLI::IsMember({"expertise", "location", "visual", "moving_direction", "viewing_direction",
                               "duration"}));
    aln->add_option("--color-threshold", align_cmd.color_threshold, "RGB distance treated as equal")
        ->check(CLI::NonNegativeNumber);
    aln->add_option("--tolerance", align_cmd.tolerance, "Location tolerance in degrees")
        ->check(CLI::NonNegativeNumber);

    CheckRulesCmd rules_cmd;
    auto* rules = app.add_subcommand("check-rules", "Check that a rule set partitions its domain (default: compass rules for --rose)");
    auto* source = rules->add_option_group("source");
    source->add_option("--rules", rules_cmd.rules, "Rule table file")->check(CLI::ExistingFile);
    source->add_flag("--literal", rules_cmd.literal, "The open (12, 33) NNE rule");
    source->require_option(0, 1);

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        std::vector<std::string> args;
        for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 2;
    }

    std::ofstream file;
    std::ostream* sink = &out;
    if (!g.output.empty()) {
        file.open(g.output, std::ios::binary);
        if (!file) {
            err << "error: cannot write '" << g.output << "'\n";
            return 2;
        }
        sink = &file;
    }

    try {
        Resources res = load_resources(g);
        if (parse->parsed()) {
            run_parse(parse_cmd, g, res, *sink);
            return 0;
        }
        if (map_dir->parsed()) {
            run_map_direction(map_cmd, g, *sink);
            return 0;
        }
        if (conv->parsed()) {
            run_convert(conv_cmd, g, *sink);
            return 0;
        }
        if (color->parsed()) {
            run_color(color_text, g, res, *sink);
            return 0;
        }
        if (harm->parsed()) return run_harmonize(harm_cmd, g, res, *sink, err);
        if (aln->parsed()) return run_align(align_cmd, g, res, *sink, err);
        return run_check_rules(rules_cmd, g, *sink);
    } catch (const CLI::Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

} // namespace obsharm::cli
