#include <fstream>
#include <sstream>

#include "obsharm/detail/text.hpp"
#include "obsharm/error.hpp"
#include "obsharm/harmonizer.hpp"

namespace obsharm {

namespace {

constexpr std::pair<std::string_view, Concept> kConcepts[] = {
    {"expertise", Concept::Expertise},
    {"location", Concept::Location},
    {"visual", Concept::Visual},
    {"moving_direction", Concept::MovingDirection},
    {"viewing_direction", Concept::ViewingDirection},
    {"duration", Concept::Duration},
};

bool is_direction(Concept c) { return c == Concept::MovingDirection || c == Concept::ViewingDirection; }

[[noreturn]] void fail(std::size_t line, const std::string& what) {
    throw ConfigError("config line " + std::to_string(line) + ": " + what);
}

Scale scale_hint(std::string_view value, std::size_t line) {
    try {
        return parse_scale(value);
    } catch (const ParseError& e) {
        fail(line, "bad scale descriptor '" + std::string(value) + "': " + e.reason());
    }
}

void apply_hint(ColumnBinding& b, std::string_view key, std::string_view value, const std::filesystem::path& base_dir,
                std::size_t line) {
    auto k = detail::to_lower(key);
    if (k == "scale" || k == "target") {
        if (b.key_concept != Concept::Expertise) fail(line, "'" + k + "' only applies to expertise columns");
        (k == "scale" ? b.scale : b.target_scale) = scale_hint(value, line);
    } else if (k == "rose") {
        if (!is_direction(b.key_concept)) fail(line, "'rose' only applies to direction columns");
        auto n = detail::parse_number(value);
        try {
            if (!n || *n != static_cast<int>(*n)) throw GranularityError("rose must be 4, 8 or 16");
            b.rose = CompassRose(static_cast<int>(*n));
        } catch (const GranularityError& e) {
            fail(line, e.what());
        }
    } else if (k == "facing") {
        if (!is_direction(b.key_concept)) fail(line, "'facing' only applies to direction columns");
        if (value.empty()) fail(line, "'facing' needs a column name");
        b.facing = std::string(value);
    } else if (k == "lexicon") {
        if (b.key_concept != Concept::Visual) fail(line, "'lexicon' only applies to visual columns");
        const auto path = base_dir / std::filesystem::path(std::string(value));
        std::ifstream in(path);
        if (!in) fail(line, "cannot open lexicon '" + path.string() + "'");
        try {
            b.lexicon = std::make_shared<const ColorLexicon>(ColorLexicon::read(in));
        } catch (const ParseError& e) {
            fail(line, "lexicon '" + path.string() + "': " + e.what());
        }
    } else {
        fail(line, "unknown hint '" + std::string(key) + "'");
    }
}

} // namespace

std::string_view to_string(Concept c) noexcept {
    for (const auto& [name, value] : kConcepts)
        if (value == c) return name;
    return "unknown";
}

Concept concept_from_string(std::string_view name) {
    auto key = detail::to_lower(detail::trim(name));
    for (const auto& [n, value] : kConcepts)
        if (n == key) return value;
    throw ConfigError("unknown concept '" + std::string(name) +
                      "'; expected expertise, location, visual, moving_direction, viewing_direction or duration");
}

const ColumnBinding* SourceConfig::find(std::string_view column) const noexcept {
    for (const auto& b : columns)
        if (b.column == column) return &b;
    return nullptr;
}

const SourceConfig* MappingConfig::find(std::string_view source_id) const noexcept {
    for (const auto& s : sources)
        if (s.id == source_id) return &s;
    return nullptr;
}

MappingConfig MappingConfig::parse(std::string_view text, const std::filesystem::path& base_dir) {
    MappingConfig config;
    SourceConfig* current = nullptr;
    std::size_t line_no = 0;
    for (auto raw_line : detail::split(text, '\n')) {
        ++line_no;
        auto line = detail::trim(raw_line);
        if (line.empty() || line.front() == '#') continue;

        if (line.front() == '[') {
            if (line.back() != ']') fail(line_no, "unterminated section header");
            auto id = std::string(detail::trim(line.substr(1, line.size() - 2)));
            if (id.empty()) fail(line_no, "empty source id");
            if (config.find(id)) fail(line_no, "duplicate source '" + id + "'");
            config.sources.push_back(SourceConfig{id, std::nullopt, std::nullopt, {}});
            current = &config.sources.back();
            continue;
        }
        if (!current) fail(line_no, "entry outside of a [source] section");

        auto eq = line.find('=');
        if (eq == std::string_view::npos) fail(line_no, "expected 'key = value'");
        auto key = detail::trim(line.substr(0, eq));
        auto value = detail::trim(line.substr(eq + 1));
        if (key.empty()) fail(line_no, "empty key");

        if (key.front() == '@') {
            if (key == "@input") {
                if (value.empty()) fail(line_no, "@input needs a path");
                current->input = base_dir / std::filesystem::path(std::string(value));
            } else if (key == "@id") {
                if (value.empty()) fail(line_no, "@id needs a column name");
                current->id_column = std::string(value);
            } else {
                fail(line_no, "unknown directive '" + std::string(key) + "'");
            }
            continue;
        }

        if (current->find(key)) fail(line_no, "column '" + std::string(key) + "' bound twice");
        auto parts = detail::split(value, ';');
        ColumnBinding binding;
        binding.column = std::string(key);
        try {
            binding.key_concept = concept_from_string(parts.front());
        } catch (const ConfigError& e) {
            fail(line_no, e.what());
        }
        for (std::size_t i = 1; i < parts.size(); ++i) {
            auto hint = detail::trim(parts[i]);
            if (hint.empty()) continue;
            auto heq = hint.find('=');
            if (heq == std::string_view::npos) fail(line_no, "hint '" + std::string(hint) + "' needs '='");
            apply_hint(binding, detail::trim(hint.substr(0, heq)), detail::trim(hint.substr(heq + 1)), base_dir, line_no);
        }
        if (binding.key_concept == Concept::Expertise) {
            if (!binding.scale) fail(line_no, "expertise column '" + binding.column + "' needs a scale hint");
            if (binding.target_scale && std::holds_alternative<OrdinalScale>(*binding.scale) &&
                std::holds_alternative<IntervalScale>(*binding.target_scale))
                fail(line_no, "ordinal scale cannot target an interval scale");
        }
        current->columns.push_back(std::move(binding));
    }
    return config;
}

MappingConfig MappingConfig::load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open config '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str(), path.parent_path());
}

} // namespace obsharm
