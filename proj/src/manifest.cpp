#include "qnmc/manifest.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "qnmc/generators.hpp"

namespace qnmc {

std::vector<ManifestEntry> load_manifest(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open manifest " + path.string());
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error("manifest " + path.string() + ": " + e.what());
    }
    if (!doc.contains("datasets") || !doc["datasets"].is_array())
        throw std::runtime_error("manifest " + path.string() + ": expected a \"datasets\" array");

    std::vector<ManifestEntry> entries;
    for (const auto& item : doc["datasets"]) {
        ManifestEntry e;
        e.name = item.at("name").get<std::string>();
        if (item.contains("path")) e.path = item["path"].get<std::string>();
        if (item.contains("generator")) e.generator = item["generator"].get<std::string>();
        if (item.contains("label_column")) e.label_column = item["label_column"].get<std::size_t>();
        if (item.contains("header")) e.header = item["header"].get<bool>();
        if (e.path.has_value() == e.generator.has_value())
            throw std::runtime_error("manifest entry \"" + e.name +
                                     "\" needs exactly one of \"path\" or \"generator\"");
        entries.push_back(std::move(e));
    }
    return entries;
}

Dataset realize_dataset(const ManifestEntry& entry, const std::filesystem::path& base_dir,
                        std::uint64_t seed) {
    if (entry.generator) {
        auto ds = generate_by_name(*entry.generator, seed);
        if (!ds)
            throw std::runtime_error("manifest entry \"" + entry.name +
                                     "\": unknown generator \"" + *entry.generator + "\"");
        ds->name = entry.name;
        return std::move(*ds);
    }
    CsvSchema schema;
    schema.label_column = entry.label_column;
    schema.header = entry.header;
    Dataset ds = load_csv(base_dir / *entry.path, schema);
    ds.name = entry.name;
    return ds;
}

}  // namespace qnmc
