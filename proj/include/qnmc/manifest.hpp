#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "qnmc/dataset.hpp"

namespace qnmc {

/// One dataset of a batch run: either a CSV file (path relative to the
/// manifest) with its column layout, or the name of a built-in generator.
struct ManifestEntry {
    std::string name;
    std::optional<std::string> path;
    std::optional<std::string> generator;
    std::optional<std::size_t> label_column;  // default: last column
    bool header = false;
};

/// JSON manifest: {"datasets": [{"name": ..., "path"|"generator": ..., ...}]}.
std::vector<ManifestEntry> load_manifest(const std::filesystem::path& path);

/// Loads or generates the entry's dataset. `base_dir` anchors relative paths;
/// `seed` feeds the generators.
Dataset realize_dataset(const ManifestEntry& entry, const std::filesystem::path& base_dir,
                        std::uint64_t seed);

}  // namespace qnmc
