#pragma once
// Exit-code matrix shared by the CLI unit tests and the acceptance runner.

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace clitest {

struct Run {
    int code = -1;
    std::string out;
    std::string err;
};

inline Run invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "obs-harmonize");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    Run r;
    r.code = obsharm::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

struct Case {
    std::string subcommand;
    int expected;
    std::vector<std::string> args;
};

/// Scratch files for the bad-data rows; created under `dir`.
struct Fixtures {
    std::filesystem::path dir;
    std::string config;     // Table 1 config
    std::string bad_csv;    // unbalanced quote
    std::string bad_rules;  // malformed rule table
    std::string bad_config; // unknown concept

    explicit Fixtures(std::filesystem::path data_dir, std::filesystem::path scratch) : dir(std::move(scratch)) {
        std::filesystem::create_directories(dir);
        config = (data_dir / "sample" / "sample.conf").string();
        bad_csv = write("bad.csv", "location,color\n\"Jena,red\n");
        bad_rules = write("bad.rules", "NNE\t12\tthirty-three\ttrue\ttrue\n");
        bad_config = write("bad.conf", "[dataset1]\ncolor = smell\n");
    }

    std::string write(const std::string& name, const std::string& text) const {
        auto p = dir / name;
        std::ofstream(p, std::ios::binary) << text;
        return p.string();
    }

    std::vector<Case> matrix() const {
        return {
            {"parse", 0, {"parse", "--concept", "direction", "east to southeast"}},
            {"parse", 1, {"parse", "--concept", "duration", "1 parsec"}},
            {"parse", 2, {"parse", "--concept", "smell", "sweet"}},
            {"parse", 2, {"parse", "east"}},
            {"map-direction", 0, {"map-direction", "--angle", "22.5", "--rose", "16"}},
            {"map-direction", 1, {"map-direction", "--sector", "north-north-north"}},
            {"map-direction", 2, {"map-direction", "--angle", "22.5", "--sector", "NNE"}},
            {"map-direction", 2, {"map-direction", "--angle", "ten"}},
            {"convert-scale", 0,
             {"convert-scale", "--from", "interval(1, 10, integer)", "--to", "ordinal(poor < fair < average < good < excellent)",
              "--value", "7"}},
            {"convert-scale", 1,
             {"convert-scale", "--from", "ordinal(beginner < intermediate < expert)", "--to", "interval(1, 5)", "--value",
              "expert"}},
            {"convert-scale", 2, {"convert-scale", "--from", "interval(1, 10)", "--value", "7"}},
            {"color", 0, {"color", "#E6E6FA"}},
            {"color", 1, {"color", "#GG0000"}},
            {"color", 2, {"color"}},
            {"harmonize", 0, {"harmonize", "--config", config}},
            {"harmonize", 1, {"harmonize", "--config", config, "dataset1=" + bad_csv}},
            {"harmonize", 1, {"harmonize", "--config", bad_config}},
            {"harmonize", 2, {"harmonize", "--config", (dir / "missing.conf").string()}},
            {"align", 0, {"align", "--config", config, "--concept", "expertise"}},
            {"align", 1, {"align", "--config", config, "--concept", "visual", "dataset1=" + bad_csv}},
            {"align", 2, {"align", "--config", config}},
            {"check-rules", 0, {"check-rules", "--rose", "16"}},
            {"check-rules", 1, {"check-rules", "--rules", bad_rules}},
            {"check-rules", 2, {"check-rules", "--rose", "12"}},
        };
    }
};

} // namespace clitest
