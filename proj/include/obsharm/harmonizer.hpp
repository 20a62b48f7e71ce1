#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "obsharm/canonical.hpp"
#include "obsharm/outcome.hpp"

namespace obsharm {

/// Key concepts a source column can be bound to.
enum class Concept { Expertise, Location, Visual, MovingDirection, ViewingDirection, Duration };

std::string_view to_string(Concept c) noexcept;
/// Throws ConfigError for names outside the closed set.
Concept concept_from_string(std::string_view name);

// ---------------------------------------------------------------------------
// Configuration

struct ColumnBinding {
    std::string column;
    Concept key_concept = Concept::Location;
    std::optional<Scale> scale;         // expertise: how to read the raw value (required)
    std::optional<Scale> target_scale;  // expertise: optional conversion target
    std::optional<CompassRose> rose;    // directions: granularity bare wind names refer to
    std::optional<std::string> facing;  // directions: column holding the observer's facing
    std::shared_ptr<const ColorLexicon> lexicon; // visual: override of the default lexicon
};

struct SourceConfig {
    std::string id;
    std::optional<std::filesystem::path> input;
    std::optional<std::string> id_column;
    std::vector<ColumnBinding> columns;

    const ColumnBinding* find(std::string_view column) const noexcept;
};

/// Per-source column bindings. Text form:
///
///     [dataset2]
///     @input = dataset2.csv
///     @id = obs_id
///     experience_score = expertise; scale = interval(1, 10, integer)
///     motion = moving_direction; facing = view_dir; rose = 8
///     colours = visual; lexicon = extra_colors.tsv
///
/// Lines starting with `#` are comments. Paths are relative to the config file.
struct MappingConfig {
    std::vector<SourceConfig> sources;

    const SourceConfig* find(std::string_view source_id) const noexcept;

    /// Throws ConfigError.
    static MappingConfig parse(std::string_view text, const std::filesystem::path& base_dir = {});
    static MappingConfig load(const std::filesystem::path& path);
};

// ---------------------------------------------------------------------------
// Input datasets

struct Dataset {
    std::string source_id;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

/// RFC 4180 CSV with a header row. Throws ParseError.
Dataset read_csv(std::istream& in, std::string source_id);
/// Array of flat objects; non-string scalars keep their JSON text. Throws ParseError.
Dataset read_json_rows(std::string_view text, std::string source_id);
/// Dispatches on the file extension (.json, otherwise CSV).
Dataset load_dataset(const std::filesystem::path& path, std::string source_id);

// ---------------------------------------------------------------------------
// Harmonization

struct HarmonizedCell {
    std::string source_id;
    std::string column;
    /// Empty for columns the config does not bind; they pass through untouched.
    std::optional<Concept> key_concept;
    std::string raw;
    std::optional<CanonicalValue> canonical;
    Lossiness lossiness = Lossiness::Unmapped;
};

struct UnifiedRecord {
    std::string record_id;
    std::string source_id;
    std::size_t row = 0;
    /// In source column order, bound and pass-through alike.
    std::vector<HarmonizedCell> cells;

    std::map<Concept, std::vector<HarmonizedCell>> by_concept() const;
};

enum class IssueKind { ParseFailure, Unresolved, UncoveredColumn };
std::string_view to_string(IssueKind k) noexcept;

struct Issue {
    std::string source_id;
    std::optional<std::size_t> row; // absent for dataset-level issues
    std::string column;
    IssueKind kind = IssueKind::ParseFailure;
    std::string reason;
};

struct HarmonizeOptions {
    const Gazetteer* gazetteer = nullptr;     // bundled gazetteer when null
    const ColorLexicon* lexicon = nullptr;    // standard lexicon when null
    unsigned threads = 0;                     // 0: hardware concurrency
};

struct HarmonizeResult {
    std::vector<UnifiedRecord> records;
    std::vector<Issue> issues;
};

/// One record per input row, in input order. Cell-level failures become
/// Unmapped cells plus issues; they never abort the run.
/// Throws ConfigError when the source is not configured or a bound column is missing.
HarmonizeResult harmonize_dataset(const Dataset& dataset, const MappingConfig& config,
                                  const HarmonizeOptions& options = {});

/// Harmonizes each dataset and concatenates the results in the given order.
HarmonizeResult harmonize(const std::vector<Dataset>& datasets, const MappingConfig& config,
                          const HarmonizeOptions& options = {});

/// Loads every source with an `@input` path and harmonizes it.
HarmonizeResult harmonize_configured(const MappingConfig& config, const HarmonizeOptions& options = {});

/// JSON Lines, one line per record cell: record_id, source, row, column,
/// concept, raw, canonical, lossiness.
void write_jsonl(std::ostream& out, const std::vector<UnifiedRecord>& records);
nlohmann::json to_json(const HarmonizedCell& cell, const UnifiedRecord& record);
nlohmann::json to_json(const Issue& issue);

// ---------------------------------------------------------------------------
// Alignment

enum class Verdict { Compatible, Incompatible, Indeterminate };
std::string_view to_string(Verdict v) noexcept;

struct AlignOptions {
    /// Colors whose RGB distance is at most this are compatible even when
    /// their nearest names differ.
    double color_threshold = 0;
    /// Points within this many degrees in both latitude and longitude match.
    double location_tolerance_deg = 0.01;
};

struct Comparison {
    std::size_t left = 0;  // index into AlignmentTable::cells
    std::size_t right = 0;
    Verdict verdict = Verdict::Indeterminate;
    std::string reason;
    /// The wider of the two representations, when compatible.
    std::optional<CanonicalValue> common;
};

struct AlignmentTable {
    Concept key_concept;
    std::vector<HarmonizedCell> cells;
    std::vector<Comparison> comparisons; // every pair i < j
};

/// Pairwise compatibility of two canonical values under a concept.
/// Symmetric in its two value arguments.
/// Throws ConceptMismatchError when a value kind does not belong to the concept.
Comparison compare_values(const CanonicalValue& a, const CanonicalValue& b, Concept key_concept,
                          const AlignOptions& options = {});

/// Throws ConceptMismatchError if any cell is bound to another concept.
AlignmentTable align_cells(std::vector<HarmonizedCell> cells, Concept key_concept, const AlignOptions& options = {});
/// Collects every cell of `key_concept` from the records and aligns them.
AlignmentTable align(const std::vector<UnifiedRecord>& records, Concept key_concept, const AlignOptions& options = {});

nlohmann::json to_json(const AlignmentTable& table);

} // namespace obsharm
