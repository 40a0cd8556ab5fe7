#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "gvcot/geometry.hpp"
#include "gvcot/sample.hpp"

namespace gvcot::pipeline {

/// One judge verdict as persisted on a manifest row.
struct VerdictRecord {
    std::string template_name;
    double score1 = 0.0;
    double score2 = 0.0;
    std::string reasoning;
};

/// One dataset row. Artifact paths are stored relative to the manifest file
/// so a manifest tree can be relocated wholesale.
struct ManifestRow {
    std::string id;
    std::string source_path;
    std::optional<std::string> target_path; // ground-truth edited image
    std::optional<std::string> output_path; // model output under evaluation
    std::optional<std::string> instruction;
    std::optional<std::string> reverse;
    std::optional<std::string> category;
    std::vector<BBox> boxes;
    std::optional<std::string> mask_path;
    std::optional<std::string> cot_path;
    std::vector<VerdictRecord> verdicts;

    std::optional<VerdictRecord> find_verdict(const std::string& template_name) const;
};

struct QuarantineRecord {
    ManifestRow row;
    std::string reason;
};

struct Manifest {
    std::filesystem::path dir; // directory the manifest was loaded from
    std::vector<ManifestRow> rows;
};

struct LoadedManifest {
    Manifest manifest;
    std::vector<QuarantineRecord> quarantined;
};

/// Parses a JSONL manifest. Rows with invalid JSON, missing id/source_path,
/// duplicate ids, or missing referenced files are quarantined, not fatal.
LoadedManifest load_manifest(const std::filesystem::path& path);

/// Canonical serialization: one row per line, keys sorted, floats in
/// shortest round-trip form. Two identical manifests serialize to identical
/// bytes.
void save_manifest(const std::filesystem::path& path, const Manifest& manifest);

void save_quarantine(const std::filesystem::path& path,
                     const std::vector<QuarantineRecord>& records);

std::string row_to_json_line(const ManifestRow& row);

/// Resolves a row path against the manifest directory.
std::filesystem::path resolve_path(const Manifest& manifest, const std::string& path);

} // namespace gvcot::pipeline
